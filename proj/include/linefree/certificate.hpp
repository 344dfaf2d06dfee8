#pragma once

// Machine-readable record of one construction/verification run. Serialized
// as JSON with schema_version "1".

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "linefree/construction.hpp"
#include "linefree/verifier.hpp"

namespace linefree {

inline constexpr const char* kToolVersion = "0.3.1";
inline constexpr const char* kSchemaVersion = "1";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerdictSummary {
  bool ok = false;
  std::uint64_t lines_checked = 0;
  std::uint64_t probes = 0;
  std::optional<Line> witness;

  static VerdictSummary from(const Verdict& v) {
    return {v.ok, v.lines_checked, v.probes, v.witness};
  }
  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

struct Certificate {
  std::string schema_version = kSchemaVersion;
  std::uint64_t p = 0;

  struct Params {
    std::uint32_t r = 0, s = 0, l = 0;
    bool degenerate = false;
    friend bool operator==(const Params&, const Params&) = default;
  } params;

  struct Sizes {
    std::uint64_t hypercube = 0;
    std::uint64_t s_star = 0;
    std::uint64_t s = 0;
    std::uint64_t removed = 0;  // |S* \ S| of the reference construction
    std::uint64_t complement = 0;
    friend bool operator==(const Sizes&, const Sizes&) = default;
  } sizes;

  struct Checks {
    VerdictSummary line_free;
    VerdictSummary complement_blocking;
    VerdictSummary structured_cases;  // axis-parallel and constant-coordinate classes
    bool thm3_ok = false;
    bool param_window_ok = false;
    bool layer_formula_ok = false;
    bool size_accounting_ok = false;  // s == s_star - removed
    bool matches_construction = false;
    friend bool operator==(const Checks&, const Checks&) = default;
  } checks;

  struct Provenance {
    std::string tool_version = kToolVersion;
    std::string input;  // "construction" or the path that was loaded
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
    std::map<std::string, double> durations_ms;
    friend bool operator==(const Provenance&, const Provenance&) = default;
  } provenance;

  bool all_passed() const;
  /// s + complement = p^3 and thm3_ok agrees with a recomputation from s.
  bool consistent() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

struct CertifyOptions {
  VerifyOptions verify;
  std::uint64_t seed = kDefaultSeed;
};

/// Builds S for p and certifies it.
Certificate certify(const PrimeModulus& mod, const CertifyOptions& opts = {});

/// Certifies an arbitrary set in F_p^3 against the construction for its p.
Certificate certify_set(const PointSet& set, const std::string& input_label,
                        const CertifyOptions& opts = {});

/// The classes covered by the structured sub-checks: (1,0,0), then every
/// (1,0,c) and (1,b,0) with b, c != 0.
std::vector<Direction> structured_directions(const Space& space);

/// The layer size identities for the construction: |A_i|, |S*_i| for each
/// special layer and |S*| against their closed forms.
bool layer_formulas_hold(const ConstructionParams& params, const PointSet& s_star);

}  // namespace linefree
