#include "linefree/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linefree {
namespace {

// Intervals [a, b] are lifted to field elements literally; the construction
// never needs one that wraps past p-1.
void require_plain_interval(std::int64_t a, std::int64_t b, Elem p, const char* what) {
  if (a < 0 || b > static_cast<std::int64_t>(p) - 1)
    throw std::logic_error(std::string("interval wraps around F_p: ") + what);
}

void insert_plane_point(PointSet& set, Elem i, Elem y, Elem z) {
  const Space& sp = set.space();
  set.insert_index(i * sp.stride(0) + y * sp.stride(1) + z);
}

}  // namespace

ConstructionParams derive_params(const PrimeModulus& mod) {
  ConstructionParams params{mod};
  const std::uint64_t p = mod.p();
  params.r = static_cast<std::uint32_t>(isqrt(p));
  params.s = static_cast<std::uint32_t>((p - 2) / params.r);
  std::uint32_t l = 0;
  while (16ull * (l + 1) * (l + 1) <= p) ++l;
  params.l = l;
  params.degenerate = (l == 0);
  return params;
}

std::vector<Elem> grid_rows(const ConstructionParams& params) {
  std::vector<Elem> rows;
  rows.reserve(params.s + 1);
  for (std::uint32_t j = 0; j <= params.s; ++j) rows.push_back(j * params.r);
  return rows;
}

PointSet hypercube(const PrimeModulus& mod, unsigned dim) {
  const Space sp(mod, dim);
  PointSet set(sp);
  const Elem p = mod.p();
  for (std::uint64_t idx = 0; idx < sp.size(); ++idx) {
    const Point pt = sp.point(idx);
    if (std::all_of(pt.c.begin(), pt.c.begin() + dim, [p](Elem v) { return v <= p - 2; }))
      set.insert_index(idx);
  }
  return set;
}

PointSet lemma_blocking_set(const ConstructionParams& params, std::int64_t t) {
  const Elem p = params.p();
  const std::int64_t r = params.r;
  if (t < 0 || t > static_cast<std::int64_t>(p) - r)
    throw Error(ErrorKind::OutOfRange,
                "t = " + std::to_string(t) + " outside [0, " + std::to_string(p - r) + "]");
  const Space plane(params.mod, 2);
  PointSet set(plane);
  for (Elem x = 0; x < p; ++x) set.insert_index(x * p + x);
  auto rows = grid_rows(params);
  rows.push_back(p - 1);
  for (std::int64_t x = t; x <= t + r - 1; ++x)
    for (Elem y : rows) set.insert_index(static_cast<std::uint64_t>(x) * p + y);
  return set;
}

DifferenceCoverage grid_difference_coverage(const ConstructionParams& params, std::int64_t t) {
  const Elem p = params.p();
  const auto& m = params.mod;
  std::vector<bool> hit(p, false);
  for (std::int64_t x = t; x <= t + static_cast<std::int64_t>(params.r) - 1; ++x)
    for (Elem y : grid_rows(params)) hit[m.sub(m.reduce(x), y)] = true;

  DifferenceCoverage cov;
  for (Elem c = 0; c < p; ++c)
    if (!hit[c]) cov.missing.push_back(c);
  if (cov.missing.empty()) {
    cov.longest_run = p;
    return cov;
  }
  // start the scan just after a gap so cyclic runs are seen whole
  const Elem start = cov.missing.front() + 1;
  std::uint32_t run = 0;
  for (Elem k = 0; k < p; ++k) {
    if (hit[(start + k) % p]) {
      cov.longest_run = std::max(cov.longest_run, ++run);
    } else {
      run = 0;
    }
  }
  return cov;
}

PointSet layer_exclusion(const ConstructionParams& params, std::int64_t i) {
  const Elem p = params.p();
  if (params.l == 0)
    throw Error(ErrorKind::OutOfRange, "no special layers when l = 0");
  if (i < params.first_special() || i > static_cast<std::int64_t>(p) - 2)
    throw Error(ErrorKind::OutOfRange,
                "layer " + std::to_string(i) + " is not a special layer");
  const std::int64_t t = params.strip_start(static_cast<Elem>(i));
  const std::int64_t r = params.r;
  const std::int64_t strip_end = static_cast<std::int64_t>(params.l) * r - 1;
  require_plain_interval(t, t + r - 1, p, "grid columns");
  require_plain_interval(0, strip_end, p, "top strip");
  if (t + r - 1 > strip_end) throw std::logic_error("grid columns leave the top strip");

  const Space plane(params.mod, 2);
  PointSet a(plane);
  for (Elem y = 0; y < p; ++y) a.insert_index(y * p + y);
  const auto rows = grid_rows(params);
  for (std::int64_t y = t; y <= t + r - 1; ++y)
    for (Elem z : rows) a.insert_index(static_cast<std::uint64_t>(y) * p + z);
  for (Elem z : rows) a.insert_index(static_cast<std::uint64_t>(p - 1) * p + z);
  for (std::int64_t y = 0; y <= strip_end; ++y)
    a.insert_index(static_cast<std::uint64_t>(y) * p + (p - 1));
  return a;
}

PointSet build_s_star(const ConstructionParams& params) {
  const Elem p = params.p();
  const Space space(params.mod, 3);
  PointSet set(space);

  for (Elem i = 0; i < params.first_special(); ++i)
    for (Elem y = 0; y + 1 < p; ++y)
      for (Elem z = 0; z + 1 < p; ++z) insert_plane_point(set, i, y, z);

  for (Elem i = params.first_special(); i + 1 < p && params.l > 0; ++i) {
    const PointSet keep = layer_exclusion(params, i).complement();
    for (std::uint64_t k = 0; k < keep.space().size(); ++k)
      if (keep.contains_index(k)) set.insert_index(i * space.stride(0) + k);
  }

  const std::int64_t strip_end = static_cast<std::int64_t>(params.l) * params.r - 1;
  require_plain_interval(0, strip_end, p, "top layer columns");
  for (std::int64_t y = 0; y <= strip_end; ++y)
    for (Elem z : grid_rows(params)) insert_plane_point(set, p - 1, static_cast<Elem>(y), z);
  return set;
}

std::vector<RemovalTriple> removal_triples(const ConstructionParams& params) {
  const auto& m = params.mod;
  const Elem top = params.p() - 1;
  std::vector<RemovalTriple> out;
  if (params.l < 2) return out;
  const auto rows = grid_rows(params);
  for (Elem i1 = params.first_special(); i1 < top; ++i1)
    for (Elem i2 = params.first_special(); i2 < top; ++i2) {
      if (i1 == i2) continue;
      const Elem ratio = m.mul(m.sub(i1, i2), m.inv(m.sub(top, i2)));
      for (Elem k : rows)
        out.push_back({i1, i2, k, m.add(top, m.mul(ratio, m.sub(k, top)))});
    }
  return out;
}

PointSet removal_points(const ConstructionParams& params) {
  PointSet set(Space(params.mod, 3));
  const Elem top = params.p() - 1;
  for (const auto& tr : removal_triples(params)) insert_plane_point(set, tr.i1, top, tr.k1);
  return set;
}

PointSet build_s(const ConstructionParams& params) {
  PointSet s = build_s_star(params);
  s.subtract(removal_points(params));
  return s;
}

namespace formula {

std::int64_t exclusion_size(const ConstructionParams& c) {
  const std::int64_t p = c.p(), r = c.r, s = c.s, l = c.l;
  return p + (s + 1) * (r + 1) + l * r - 1;
}

std::int64_t special_layer_size(const ConstructionParams& c) {
  const std::int64_t p = c.p(), r = c.r, s = c.s, l = c.l;
  return p * p - p - (s + 1) * (r + 1) - l * r + 1;
}

std::int64_t s_star_size(const ConstructionParams& c) {
  const std::int64_t p = c.p(), r = c.r, s = c.s, l = c.l;
  return (p - l - 1) * (p - 1) * (p - 1) +
         l * (p * p - p - (s + 1) * (r + 1) - l * r + 1) + (s + 1) * l * r;
}

std::int64_t removal_bound(const ConstructionParams& c) {
  const std::int64_t s = c.s, l = c.l;
  return l * (l - 1) * (s + 1);
}

}  // namespace formula
}  // namespace linefree
