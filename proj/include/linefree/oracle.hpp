#pragma once

#include <cstdint>

#include "linefree/geometry.hpp"

namespace linefree {

struct SearchResult {
  std::uint64_t best_size = 0;
  PointSet best_set;
  std::uint64_t nodes_explored = 0;
  bool exact = false;  // search completed: no line-free set of size best_size + 1
};

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = default (1e7 for p = 3, 1e8 otherwise)
  std::uint64_t seed = 0;         // nonzero shuffles the branching order
};

/// Maximum size of a line-free subset of F_p^n by branch and bound, seeded
/// with the hypercube [0, p-2]^n. Only practical for tiny spaces.
SearchResult max_line_free(const PrimeModulus& mod, unsigned dim, const SearchOptions& opts = {});

}  // namespace linefree
