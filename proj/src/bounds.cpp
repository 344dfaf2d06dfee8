#include "linefree/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace linefree {
namespace {

using i128 = __int128;

// (lo <= sqrt(p)) for a possibly negative integer lo
bool at_most_sqrt(std::int64_t lo, std::int64_t p) { return lo < 0 || lo * lo <= p; }
// (sqrt(p) <= hi)
bool at_least_sqrt(std::int64_t hi, std::int64_t p) { return hi >= 0 && hi * hi >= p; }

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

bool thm3_check(const PrimeModulus& mod, std::uint64_t size) {
  const i128 p = mod.p();
  const i128 d = 16 * static_cast<i128>(size) - 16 * p * p * p + 48 * p * p + 7 * p;
  return d >= 0 && d * d >= 4 * p * p * p;
}

bool param_window_check(const ConstructionParams& c) {
  const std::int64_t p = c.p(), r = c.r, s = c.s, l = c.l;
  const bool r_ok = at_most_sqrt(r, p) && at_least_sqrt(r + 1, p);
  const bool s_ok = at_least_sqrt(s + 2, p) && at_most_sqrt(s - 2, p);
  const bool l_ok = at_most_sqrt(4 * l, p) && at_least_sqrt(4 * (l + 1), p);
  return r_ok && s_ok && l_ok;
}

double thm1_reference(std::uint64_t p) {
  const double q = static_cast<double>(p);
  return (q - 1) * (q - 1) * (q - 1) + q - 2 * std::sqrt(q);
}

double thm3_reference(std::uint64_t p) {
  const double q = static_cast<double>(p);
  return q * q * q - 3 * q * q + std::pow(q, 1.5) / 8 - 7 * q / 16;
}

double upper_bound_reference(std::uint64_t p) {
  const double q = static_cast<double>(p);
  return q * q * q - 2 * q * q - (std::sqrt(2.0) - 1) * q + 2;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

BoundsRow make_row(const PrimeModulus& mod, const TableOptions& opts) {
  const auto params = derive_params(mod);
  const std::uint64_t p = mod.p();
  const PointSet s = build_s(params);

  BoundsRow row;
  row.p = p;
  row.degenerate = params.degenerate;
  row.hypercube = (p - 1) * (p - 1) * (p - 1);
  row.thm1_ref = round2(thm1_reference(p));
  row.s_star = build_s_star(params).cardinality();
  row.s = s.cardinality();
  row.removed = row.s_star - row.s;
  row.thm3_bound_ref = round2(thm3_reference(p));
  row.thm3_ok = thm3_check(mod, row.s);
  row.upper_ref = round2(upper_bound_reference(p));
  row.complement = p * p * p - row.s;
  if (opts.verify) row.line_free = is_line_free(s, opts.verify_opts).ok;
  return row;
}

std::vector<BoundsRow> make_table(const std::vector<std::uint64_t>& primes,
                                  const TableOptions& opts) {
  std::vector<PrimeModulus> mods;
  mods.reserve(primes.size());
  for (auto p : primes) mods.push_back(make_modulus(p));
  std::vector<BoundsRow> rows;
  rows.reserve(mods.size());
  for (const auto& m : mods) rows.push_back(make_row(m, opts));
  return rows;
}

std::string table_to_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "p,hypercube,thm1_ref,s_star,s,removed,thm3_bound_ref,thm3_ok,upper_ref,complement\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.hypercube << ',' << fixed2(r.thm1_ref) << ',' << r.s_star << ','
        << r.s << ',' << r.removed << ',' << fixed2(r.thm3_bound_ref) << ','
        << (r.thm3_ok ? "true" : "false") << ',' << fixed2(r.upper_ref) << ',' << r.complement
        << '\n';
  }
  return out.str();
}

std::string table_to_json(const std::vector<BoundsRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {
        {"p", r.p},
        {"hypercube", r.hypercube},
        {"thm1_ref", r.thm1_ref},
        {"s_star", r.s_star},
        {"s", r.s},
        {"removed", r.removed},
        {"thm3_bound_ref", r.thm3_bound_ref},
        {"thm3_ok", r.thm3_ok},
        {"upper_ref", r.upper_ref},
        {"complement", r.complement},
        {"degenerate", r.degenerate},
    };
    if (r.line_free) j["line_free"] = *r.line_free;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace linefree
