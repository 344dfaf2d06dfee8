#pragma once

// The layered line-free set S in F_p^3 and its building blocks.
//
// Layers are indexed by the first coordinate x; layer i is the planar set
// {(y, z) : (i, y, z) in S}. With r = floor(sqrt p), s = floor((p-2)/r) and
// l = floor(sqrt(p)/4):
//
//   layers 0 .. p-l-2      the standard square [0, p-2]^2
//   layers p-l-1 .. p-2    F_p^2 minus an exclusion set A_i built around a
//                          diagonal-plus-grid planar blocking set
//   layer p-1              [0, l*r-1] x {0, r, ..., s*r}
//
// followed by deleting a small set of points (i1, p-1, k1) that would
// otherwise complete lines with every coordinate varying.

#include <cstdint>
#include <optional>
#include <vector>

#include "linefree/geometry.hpp"

namespace linefree {

struct ConstructionParams {
  PrimeModulus mod;
  std::uint32_t r = 0;  // grid stride, floor(sqrt p)
  std::uint32_t s = 0;  // top grid row index, floor((p-2)/r)
  std::uint32_t l = 0;  // number of special layers, floor(sqrt(p)/4)
  bool degenerate = false;  // l == 0, i.e. p <= 13

  Elem p() const noexcept { return mod.p(); }
  /// First special layer, p-l-1.
  Elem first_special() const noexcept { return p() - l - 1; }
  /// Interval start of the grid used in special layer i.
  std::uint32_t strip_start(Elem i) const noexcept { return (i - first_special()) * r; }
};

ConstructionParams derive_params(const PrimeModulus& mod);

/// The rows {0, r, 2r, ..., s*r}.
std::vector<Elem> grid_rows(const ConstructionParams& params);

/// [0, p-2]^dim.
PointSet hypercube(const PrimeModulus& mod, unsigned dim);

/// Main diagonal of F_p^2 together with [t, t+r-1] x {0, r, ..., s*r, p-1}.
/// Requires 0 <= t <= p-r.
PointSet lemma_blocking_set(const ConstructionParams& params, std::int64_t t);

/// Residues x - y (mod p) hit by the grid [t, t+r-1] x {0, r, ..., s*r}.
struct DifferenceCoverage {
  std::uint32_t longest_run = 0;  // longest cyclic run of covered residues, capped at p
  std::vector<Elem> missing;      // uncovered residues, ascending
};
DifferenceCoverage grid_difference_coverage(const ConstructionParams& params, std::int64_t t);

/// A_i for a special layer i in [p-l-1, p-2].
PointSet layer_exclusion(const ConstructionParams& params, std::int64_t i);

PointSet build_s_star(const ConstructionParams& params);

struct RemovalTriple {
  Elem i1 = 0;
  Elem i2 = 0;
  Elem k = 0;
  Elem k1 = 0;  // (p-1) + (i1-i2)/((p-1)-i2) * (k-(p-1)) in F_p

  friend bool operator==(const RemovalTriple&, const RemovalTriple&) = default;
};

/// Every (i1, i2, k) with i1 != i2 special layers and k a grid row, in
/// lexicographic order of (i1, i2, k).
std::vector<RemovalTriple> removal_triples(const ConstructionParams& params);

/// {(i1, p-1, k1)} over all removal triples, deduplicated.
PointSet removal_points(const ConstructionParams& params);

PointSet build_s(const ConstructionParams& params);
inline PointSet build_s(const PrimeModulus& mod) { return build_s(derive_params(mod)); }

/// Closed-form sizes. All exact integers.
namespace formula {
std::int64_t exclusion_size(const ConstructionParams& params);     // |A_i|
std::int64_t special_layer_size(const ConstructionParams& params);  // |S*_i|, special i
std::int64_t s_star_size(const ConstructionParams& params);         // |S*|
std::int64_t removal_bound(const ConstructionParams& params);       // l(l-1)(s+1)
}  // namespace formula

}  // namespace linefree
