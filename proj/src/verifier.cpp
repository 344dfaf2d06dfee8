#include "linefree/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace linefree {
namespace {

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

struct ClassResult {
  std::uint64_t fail_at = kNoFailure;  // first contained line within the class
  std::uint64_t probes = 0;
  bool done = false;
};

// Scans the p^(n-1) lines of one parallel class in base order, stopping at the
// first line fully inside the set.
//
// Each line is first probed where one of its coordinates equals p-1; sets close
// to a hypercube miss those points, so most lines exit on the first probe.
// Only then is the line walked point by point.
class ClassScanner {
 public:
  ClassScanner(const PointSet& set, const Direction& dir)
      : set_(set), sp_(set.space()), dir_(dir), p_(sp_.p()), n_(sp_.dim()),
        pivot_(dir.pivot()) {
    const auto& m = sp_.mod();
    for (unsigned i = 0; i < n_; ++i) {
      step_[i].resize(p_);
      for (Elem lam = 0; lam < p_; ++lam) step_[i][lam] = m.mul(lam, dir_.c[i]);
    }
    for (unsigned j = n_; j-- > 0;) {
      if (dir_.c[j] == 0) continue;
      const Elem inv = m.inv(dir_.c[j]);
      auto& tab = hint_[hints_];
      tab.coord = j;
      tab.lambda.resize(p_);
      for (Elem a = 0; a < p_; ++a) tab.lambda[a] = m.mul(m.sub(p_ - 1, a), inv);
      ++hints_;
    }
    contiguous_ = (pivot_ == n_ - 1);
  }

  ClassResult scan() const {
    ClassResult res;
    Coords base{};
    const std::uint64_t count = sp_.lines_per_direction();
    for (std::uint64_t k = 0; k < count; ++k) {
      if (contains_line(base, res.probes)) {
        res.fail_at = k;
        break;
      }
      // odometer over the non-pivot coordinates, last one fastest
      for (unsigned i = n_; i-- > 0;) {
        if (i == pivot_) continue;
        if (++base[i] < p_) break;
        base[i] = 0;
      }
    }
    res.done = true;
    return res;
  }

 private:
  struct HintTable {
    unsigned coord = 0;
    std::vector<Elem> lambda;  // lambda at which coordinate `coord` hits p-1, by base value
  };

  std::uint64_t index_at(const Coords& base, Elem lam) const noexcept {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n_; ++i) {
      Elem c = base[i] + step_[i][lam];
      if (c >= p_) c -= p_;
      idx += c * sp_.stride(i);
    }
    return idx;
  }

  bool contains_line(const Coords& base, std::uint64_t& probes) const noexcept {
    if (contiguous_) {
      ++probes;
      std::uint64_t start = 0;
      for (unsigned i = 0; i < n_; ++i) start += base[i] * sp_.stride(i);
      return set_.contains_run(start, p_);
    }
    for (unsigned h = 0; h < hints_; ++h) {
      ++probes;
      if (!set_.contains_index(index_at(base, hint_[h].lambda[base[hint_[h].coord]])))
        return false;
    }
    for (Elem lam = 0; lam < p_; ++lam) {
      ++probes;
      if (!set_.contains_index(index_at(base, lam))) return false;
    }
    return true;
  }

  const PointSet& set_;
  const Space& sp_;
  Direction dir_;
  Elem p_;
  unsigned n_;
  unsigned pivot_;
  bool contiguous_ = false;
  std::array<std::vector<Elem>, kMaxDim> step_;
  std::array<HintTable, kMaxDim> hint_;
  unsigned hints_ = 0;
};

Verdict merge(const Space& sp, std::span<const Direction> dirs,
              const std::vector<ClassResult>& results) {
  Verdict v;
  for (std::size_t d = 0; d < results.size(); ++d) {
    v.probes += results[d].probes;
    if (results[d].fail_at != kNoFailure) {
      v.ok = false;
      v.witness = line_in_direction(sp, dirs[d], results[d].fail_at);
      v.lines_checked = d * sp.lines_per_direction() + results[d].fail_at + 1;
      return v;
    }
  }
  v.lines_checked = dirs.size() * sp.lines_per_direction();
  return v;
}

}  // namespace

Verdict is_line_free(const PointSet& set, const VerifyOptions& opts) {
  return is_line_free_in_directions(set, canonical_directions(set.space()), opts);
}

Verdict is_line_free_in_directions(const PointSet& set, std::span<const Direction> dirs,
                                   const VerifyOptions& opts) {
  const Space& sp = set.space();
  const std::uint64_t per_class = sp.lines_per_direction();
  const std::uint64_t total = per_class * dirs.size();
  std::vector<ClassResult> results(dirs.size());

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, dirs.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{dirs.size()};
  std::atomic<std::uint64_t> lines_done{0};
  std::mutex progress_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t d = next.fetch_add(1, std::memory_order_relaxed);
      if (d >= dirs.size()) return;
      // classes after a known failure cannot change the verdict
      if (d > first_fail.load(std::memory_order_relaxed)) continue;
      results[d] = ClassScanner(set, dirs[d]).scan();
      if (results[d].fail_at != kNoFailure) {
        std::size_t cur = first_fail.load();
        while (d < cur && !first_fail.compare_exchange_weak(cur, d)) {
        }
      }
      const auto done = lines_done.fetch_add(per_class) + per_class;
      if (opts.progress) {
        std::lock_guard lock(progress_mu);
        opts.progress(done, total);
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return merge(sp, dirs, results);
}

Verdict is_blocking(const PointSet& set, const VerifyOptions& opts) {
  return is_line_free(set.complement(), opts);
}

bool parallel_class_check(const PointSet& set, const Line& line) {
  const Space& sp = set.space();
  for (const Point& pt : line_points(sp, line))
    if (!set.contains(pt)) return false;
  for (std::uint64_t k = 0; k < sp.lines_per_direction(); ++k) {
    const auto pts = line_points(sp, line_in_direction(sp, line.dir, k));
    if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return set.contains(q); }))
      return false;
  }
  return true;
}

Verdict is_line_free_naive(const PointSet& set, const NaiveOptions& opts) {
  const Space& sp = set.space();
  const Elem cap = sp.dim() == 3 ? 13 : 23;
  if (!opts.uncapped && sp.p() > cap)
    throw Error(ErrorKind::OutOfRange, "naive verifier is capped at p <= " + std::to_string(cap));
  const auto& m = sp.mod();
  const auto members = set.points();

  Verdict v;
  std::optional<std::uint64_t> best_rank;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      ++v.lines_checked;
      Coords diff{};
      for (unsigned i = 0; i < sp.dim(); ++i) diff[i] = m.sub(members[b].c[i], members[a].c[i]);
      bool inside = true;
      Point cur = members[a];
      for (Elem lam = 0; lam < sp.p() && inside; ++lam) {
        ++v.probes;
        inside = set.contains(cur);
        for (unsigned i = 0; i < sp.dim(); ++i) cur.c[i] = m.add(cur.c[i], diff[i]);
      }
      if (!inside) continue;
      const Line line = line_through(sp, members[a], members[b]);
      const std::uint64_t rank = line_rank(sp, line);
      if (!best_rank || rank < *best_rank) {
        best_rank = rank;
        v.witness = line;
      }
    }
  }
  v.ok = !v.witness.has_value();
  return v;
}

}  // namespace linefree
