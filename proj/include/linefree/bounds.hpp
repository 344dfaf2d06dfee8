#pragma once

// Exact checks of the lower bound p^3 - 3p^2 + p^(3/2)/8 - 7p/16 and a
// comparison table of the bounds known for line-free sets in F_p^3.
//
// Verdicts are made in integers only. The floating point columns of a row
// (`*_ref`) are for display.

#include <cstdint>
#include <string>
#include <vector>

#include "linefree/construction.hpp"
#include "linefree/verifier.hpp"

namespace linefree {

/// size >= p^3 - 3p^2 + p^(3/2)/8 - 7p/16, decided as
/// D = 16*size - 16p^3 + 48p^2 + 7p >= 0 and D^2 >= 4p^3.
bool thm3_check(const PrimeModulus& mod, std::uint64_t size);

/// The windows sqrt(p)-1 <= r <= sqrt(p), sqrt(p)-2 <= s <= sqrt(p)+2 and
/// sqrt(p)/4-1 <= l <= sqrt(p)/4, each by squaring.
bool param_window_check(const ConstructionParams& params);

double thm1_reference(std::uint64_t p);       // (p-1)^3 + p - 2 sqrt(p)
double thm3_reference(std::uint64_t p);       // p^3 - 3p^2 + p^(3/2)/8 - 7p/16
double upper_bound_reference(std::uint64_t p);  // p^3 - 2p^2 - (sqrt(2)-1)p + 2

struct BoundsRow {
  std::uint64_t p = 0;
  bool degenerate = false;
  std::uint64_t hypercube = 0;
  double thm1_ref = 0;
  std::uint64_t s_star = 0;
  std::uint64_t s = 0;
  std::uint64_t removed = 0;
  double thm3_bound_ref = 0;
  bool thm3_ok = false;
  double upper_ref = 0;
  std::uint64_t complement = 0;
  /// Present when the table was built with verification.
  std::optional<bool> line_free;
};

struct TableOptions {
  bool verify = true;
  VerifyOptions verify_opts;
};

/// Primes in [lo, hi] that are >= 3.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

BoundsRow make_row(const PrimeModulus& mod, const TableOptions& opts = {});
/// Throws NotPrime (or the other modulus errors) for a bad entry.
std::vector<BoundsRow> make_table(const std::vector<std::uint64_t>& primes,
                                  const TableOptions& opts = {});

/// Header `p,hypercube,thm1_ref,s_star,s,removed,thm3_bound_ref,thm3_ok,upper_ref,complement`;
/// reference columns printed with two decimals.
std::string table_to_csv(const std::vector<BoundsRow>& rows);
/// Array of row objects with the CSV column names plus `degenerate`.
std::string table_to_json(const std::vector<BoundsRow>& rows);

}  // namespace linefree
