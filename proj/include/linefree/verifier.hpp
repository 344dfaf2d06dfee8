#pragma once

// Exhaustive certification that a point set contains no full line (or, dually,
// that it meets every line).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "linefree/geometry.hpp"

namespace linefree {

struct Verdict {
  bool ok = true;
  /// First offending line in enumeration order; set iff !ok.
  std::optional<Line> witness;
  /// Lines examined up to and including the witness, or every line when ok.
  std::uint64_t lines_checked = 0;
  /// Membership tests spent on those lines. A contiguous run test on a
  /// (0, .., 0, 1) line counts as one probe.
  std::uint64_t probes = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Called after each parallel class finishes with (lines done, total lines).
/// With several jobs it runs on worker threads, one call at a time.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

struct VerifyOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
  ProgressFn progress;
};

/// True iff no line of the space lies entirely inside `set`. The verdict,
/// witness included, does not depend on `jobs`.
Verdict is_line_free(const PointSet& set, const VerifyOptions& opts = {});

/// is_line_free restricted to the given parallel classes; the witness is the
/// first offending line in (dirs order, base order).
Verdict is_line_free_in_directions(const PointSet& set, std::span<const Direction> dirs,
                                   const VerifyOptions& opts = {});

/// True iff every line meets `set`; the witness (if any) is a line disjoint
/// from it. Same as is_line_free(set.complement()).
Verdict is_blocking(const PointSet& set, const VerifyOptions& opts = {});

/// Planar criterion: `line` lies inside `set` and every line parallel to it
/// meets `set`. When this holds `set` is a blocking set of the plane.
bool parallel_class_check(const PointSet& set, const Line& line);

struct NaiveOptions {
  bool uncapped = false;  // lift the p <= 13 (n = 3) / p <= 23 (n = 2) cap
};

/// Independent oracle: every pair of members spans a line that is tested
/// point by point. lines_checked counts the pairs examined. Throws OutOfRange
/// above the default size cap.
Verdict is_line_free_naive(const PointSet& set, const NaiveOptions& opts = {});

}  // namespace linefree
