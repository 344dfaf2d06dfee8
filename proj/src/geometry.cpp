#include "linefree/geometry.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace linefree {

std::uint64_t ipow(std::uint64_t b, unsigned e) noexcept {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

unsigned Direction::pivot() const noexcept {
  for (unsigned i = 0; i < dim; ++i)
    if (c[i] != 0) return i;
  return dim;
}

Space::Space(PrimeModulus mod, unsigned dim) : mod_(mod), dim_(dim) {
  if (dim < 2 || dim > kMaxDim)
    throw Error(ErrorKind::InvalidArgument,
                "dimension must be 2 or 3, got " + std::to_string(dim));
  size_ = ipow(mod_.p(), dim_);
  for (unsigned i = 0; i < dim_; ++i) stride_[i] = ipow(mod_.p(), dim_ - 1 - i);
}

Point Space::point(std::uint64_t index) const noexcept {
  Point pt;
  pt.dim = dim_;
  for (unsigned i = dim_; i-- > 0;) {
    pt.c[i] = static_cast<Elem>(index % p());
    index /= p();
  }
  return pt;
}

Point Space::make_point(std::initializer_list<Elem> coords) const {
  if (coords.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match dimension");
  Point pt;
  pt.dim = dim_;
  std::copy(coords.begin(), coords.end(), pt.c.begin());
  if (!contains(pt)) throw Error(ErrorKind::OutOfRange, "coordinate outside [0, p-1]");
  return pt;
}

bool Space::contains(const Point& pt) const noexcept {
  if (pt.dim != dim_) return false;
  for (unsigned i = 0; i < dim_; ++i)
    if (pt.c[i] >= p()) return false;
  return true;
}

std::vector<Direction> canonical_directions(const Space& space) {
  std::vector<Direction> dirs;
  dirs.reserve(space.direction_count());
  const unsigned n = space.dim();
  for (unsigned pivot = 0; pivot < n; ++pivot) {
    const unsigned free = n - 1 - pivot;
    const std::uint64_t count = ipow(space.p(), free);
    for (std::uint64_t k = 0; k < count; ++k) {
      Direction d;
      d.dim = n;
      d.c[pivot] = 1;
      std::uint64_t rest = k;
      for (unsigned i = n; i-- > pivot + 1;) {
        d.c[i] = static_cast<Elem>(rest % space.p());
        rest /= space.p();
      }
      dirs.push_back(d);
    }
  }
  return dirs;
}

Direction canonicalize(const Space& space, const Coords& v) {
  const auto& m = space.mod();
  Direction d;
  d.dim = space.dim();
  unsigned pivot = space.dim();
  for (unsigned i = 0; i < space.dim(); ++i)
    if (v[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == space.dim()) throw Error(ErrorKind::InvalidArgument, "zero direction vector");
  const Elem scale = m.inv(v[pivot]);
  for (unsigned i = 0; i < space.dim(); ++i) d.c[i] = m.mul(v[i], scale);
  return d;
}

std::uint64_t direction_index(const Space& space, const Direction& dir) noexcept {
  const unsigned n = space.dim();
  const unsigned pivot = dir.pivot();
  std::uint64_t offset = 0;
  for (unsigned q = 0; q < pivot; ++q) offset += ipow(space.p(), n - 1 - q);
  std::uint64_t k = 0;
  for (unsigned i = pivot + 1; i < n; ++i) k = k * space.p() + dir.c[i];
  return offset + k;
}

Line line_in_direction(const Space& space, const Direction& dir, std::uint64_t k) {
  Line line;
  line.dir = dir;
  line.base.dim = space.dim();
  const unsigned pivot = dir.pivot();
  for (unsigned i = space.dim(); i-- > 0;) {
    if (i == pivot) continue;
    line.base.c[i] = static_cast<Elem>(k % space.p());
    k /= space.p();
  }
  return line;
}

std::uint64_t line_rank(const Space& space, const Line& line) noexcept {
  const unsigned pivot = line.dir.pivot();
  std::uint64_t k = 0;
  for (unsigned i = 0; i < space.dim(); ++i)
    if (i != pivot) k = k * space.p() + line.base.c[i];
  return direction_index(space, line.dir) * space.lines_per_direction() + k;
}

Line line_through(const Space& space, const Point& a, const Point& b) {
  const auto& m = space.mod();
  Coords v{};
  for (unsigned i = 0; i < space.dim(); ++i) v[i] = m.sub(b.c[i], a.c[i]);
  Line line;
  line.dir = canonicalize(space, v);
  // slide a along the line until the pivot coordinate is zero
  const unsigned pivot = line.dir.pivot();
  const Elem lambda = m.neg(a.c[pivot]);
  line.base = a;
  for (unsigned i = 0; i < space.dim(); ++i)
    line.base.c[i] = m.add(a.c[i], m.mul(lambda, line.dir.c[i]));
  return line;
}

std::vector<Point> line_points(const Space& space, const Line& line) {
  const auto& m = space.mod();
  std::vector<Point> pts;
  pts.reserve(space.p());
  Point cur = line.base;
  for (Elem lambda = 0; lambda < space.p(); ++lambda) {
    pts.push_back(cur);
    for (unsigned i = 0; i < space.dim(); ++i) cur.c[i] = m.add(cur.c[i], line.dir.c[i]);
  }
  return pts;
}

LineEnumerator::LineEnumerator(const Space& space)
    : space_(space), dirs_(canonical_directions(space)) {}

std::optional<Line> LineEnumerator::next() {
  if (dir_ >= dirs_.size()) return std::nullopt;
  Line line = line_in_direction(space_, dirs_[dir_], k_);
  if (++k_ == space_.lines_per_direction()) {
    k_ = 0;
    ++dir_;
  }
  return line;
}

// ---------------------------------------------------------------------------

PointSet::PointSet(Space space)
    : space_(std::move(space)), words_((space_.size() + 63) / 64, 0) {}

PointSet PointSet::full(Space space) {
  PointSet s(std::move(space));
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const auto tail = s.space_.size() % 64; tail != 0)
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  s.count_ = s.space_.size();
  return s;
}

bool PointSet::insert_index(std::uint64_t idx) noexcept {
  auto& w = words_[idx >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool PointSet::remove_index(std::uint64_t idx) noexcept {
  auto& w = words_[idx >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

bool PointSet::insert(const Point& pt) {
  if (!space_.contains(pt)) throw Error(ErrorKind::OutOfRange, "point outside the space");
  return insert_index(space_.index(pt));
}

bool PointSet::remove(const Point& pt) {
  if (!space_.contains(pt)) throw Error(ErrorKind::OutOfRange, "point outside the space");
  return remove_index(space_.index(pt));
}

bool PointSet::contains_run(std::uint64_t begin, std::uint64_t len) const noexcept {
  std::uint64_t idx = begin;
  const std::uint64_t end = begin + len;
  while (idx < end) {
    const unsigned off = idx & 63;
    const std::uint64_t take = std::min<std::uint64_t>(64 - off, end - idx);
    const std::uint64_t mask =
        (take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1)) << off;
    if ((words_[idx >> 6] & mask) != mask) return false;
    idx += take;
  }
  return true;
}

PointSet PointSet::complement() const {
  PointSet out = full(space_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  out.count_ = space_.size() - count_;
  return out;
}

PointSet& PointSet::unite(const PointSet& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

PointSet& PointSet::subtract(const PointSet& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const unsigned b = std::countr_zero(bits);
      out.push_back(space_.point(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

void PointSet::assign_words(std::vector<std::uint64_t> words) {
  if (words.size() != words_.size())
    throw Error(ErrorKind::Format, "membership word count does not match the space");
  if (const auto tail = space_.size() % 64; tail != 0)
    if (words.back() >> tail)
      throw Error(ErrorKind::Format, "membership bits set past the end of the space");
  words_ = std::move(words);
  recount();
}

void PointSet::require_same_space(const PointSet& other) const {
  if (!(space_ == other.space_))
    throw Error(ErrorKind::DimensionMismatch, "point sets live in different spaces");
}

void PointSet::recount() noexcept {
  count_ = 0;
  for (auto w : words_) count_ += std::popcount(w);
}

PointSet set_union(PointSet a, const PointSet& b) { return std::move(a.unite(b)); }
PointSet set_difference(PointSet a, const PointSet& b) { return std::move(a.subtract(b)); }

PointSet layer(const PointSet& set, Elem i) {
  const Space& s3 = set.space();
  if (s3.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "layers are defined for F_p^3");
  if (i >= s3.p()) throw Error(ErrorKind::OutOfRange, "layer index outside [0, p-1]");
  PointSet out(Space(s3.mod(), 2));
  const std::uint64_t plane = s3.stride(0);
  const std::uint64_t base = i * plane;
  for (std::uint64_t k = 0; k < plane; ++k)
    if (set.contains_index(base + k)) out.insert_index(k);
  return out;
}

}  // namespace linefree
