#include "linefree/certificate.hpp"

#include <chrono>

#include "linefree/bounds.hpp"

namespace linefree {
namespace {

using json = nlohmann::json;

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json coords_json(const Coords& c, unsigned dim) {
  auto arr = json::array();
  for (unsigned i = 0; i < dim; ++i) arr.push_back(c[i]);
  return arr;
}

Coords coords_from(const json& arr, unsigned& dim) {
  Coords c{};
  dim = static_cast<unsigned>(arr.size());
  if (dim < 2 || dim > kMaxDim) throw Error(ErrorKind::Format, "witness has bad dimension");
  for (unsigned i = 0; i < dim; ++i) c[i] = arr.at(i).get<Elem>();
  return c;
}

json verdict_json(const VerdictSummary& v) {
  json j = {{"ok", v.ok}, {"lines_checked", v.lines_checked}, {"probes", v.probes}};
  if (v.witness) {
    j["witness"] = {{"base", coords_json(v.witness->base.c, v.witness->base.dim)},
                    {"dir", coords_json(v.witness->dir.c, v.witness->dir.dim)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

VerdictSummary verdict_from(const json& j) {
  VerdictSummary v;
  v.ok = j.at("ok").get<bool>();
  v.lines_checked = j.at("lines_checked").get<std::uint64_t>();
  v.probes = j.at("probes").get<std::uint64_t>();
  if (j.contains("witness") && !j.at("witness").is_null()) {
    Line line;
    line.base.c = coords_from(j.at("witness").at("base"), line.base.dim);
    line.dir.c = coords_from(j.at("witness").at("dir"), line.dir.dim);
    v.witness = line;
  }
  return v;
}

Certificate::Params params_of(const ConstructionParams& c) {
  return {c.r, c.s, c.l, c.degenerate};
}

}  // namespace

std::vector<Direction> structured_directions(const Space& space) {
  std::vector<Direction> dirs;
  if (space.dim() != 3) return dirs;
  const Elem p = space.p();
  dirs.push_back(Direction{{1, 0, 0}, 3});
  for (Elem c = 1; c < p; ++c) dirs.push_back(Direction{{1, 0, c}, 3});
  for (Elem b = 1; b < p; ++b) dirs.push_back(Direction{{1, b, 0}, 3});
  return dirs;
}

bool layer_formulas_hold(const ConstructionParams& params, const PointSet& s_star) {
  if (static_cast<std::int64_t>(s_star.cardinality()) != formula::s_star_size(params))
    return false;
  for (Elem i = params.first_special(); params.l > 0 && i + 1 < params.p(); ++i) {
    if (static_cast<std::int64_t>(layer_exclusion(params, i).cardinality()) !=
        formula::exclusion_size(params))
      return false;
    if (static_cast<std::int64_t>(layer(s_star, i).cardinality()) !=
        formula::special_layer_size(params))
      return false;
  }
  return true;
}

bool Certificate::all_passed() const {
  return checks.line_free.ok && checks.complement_blocking.ok && checks.structured_cases.ok &&
         checks.thm3_ok && checks.param_window_ok && checks.layer_formula_ok &&
         checks.size_accounting_ok && checks.matches_construction;
}

bool Certificate::consistent() const {
  if (p < 3 || !is_prime(p)) return false;
  if (sizes.s + sizes.complement != p * p * p) return false;
  return checks.thm3_ok == thm3_check(make_modulus(p), sizes.s);
}

void to_json(json& j, const Certificate& c) {
  j = json{
      {"schema_version", c.schema_version},
      {"p", c.p},
      {"params",
       {{"r", c.params.r}, {"s", c.params.s}, {"l", c.params.l},
        {"degenerate", c.params.degenerate}}},
      {"sizes",
       {{"hypercube", c.sizes.hypercube},
        {"s_star", c.sizes.s_star},
        {"s", c.sizes.s},
        {"removed", c.sizes.removed},
        {"complement", c.sizes.complement}}},
      {"checks",
       {{"line_free", verdict_json(c.checks.line_free)},
        {"complement_blocking", verdict_json(c.checks.complement_blocking)},
        {"structured_cases", verdict_json(c.checks.structured_cases)},
        {"thm3_ok", c.checks.thm3_ok},
        {"param_window_ok", c.checks.param_window_ok},
        {"layer_formula_ok", c.checks.layer_formula_ok},
        {"size_accounting_ok", c.checks.size_accounting_ok},
        {"matches_construction", c.checks.matches_construction}}},
      {"provenance",
       {{"tool_version", c.provenance.tool_version},
        {"input", c.provenance.input},
        {"jobs", c.provenance.jobs},
        {"seed", c.provenance.seed},
        {"durations_ms", c.provenance.durations_ms}}},
  };
}

void from_json(const json& j, Certificate& c) {
  c.schema_version = j.at("schema_version").get<std::string>();
  if (c.schema_version != kSchemaVersion)
    throw Error(ErrorKind::Format, "unsupported certificate schema " + c.schema_version);
  c.p = j.at("p").get<std::uint64_t>();
  const auto& pa = j.at("params");
  c.params = {pa.at("r").get<std::uint32_t>(), pa.at("s").get<std::uint32_t>(),
              pa.at("l").get<std::uint32_t>(), pa.at("degenerate").get<bool>()};
  const auto& sz = j.at("sizes");
  c.sizes = {sz.at("hypercube").get<std::uint64_t>(), sz.at("s_star").get<std::uint64_t>(),
             sz.at("s").get<std::uint64_t>(), sz.at("removed").get<std::uint64_t>(),
             sz.at("complement").get<std::uint64_t>()};
  const auto& ch = j.at("checks");
  c.checks.line_free = verdict_from(ch.at("line_free"));
  c.checks.complement_blocking = verdict_from(ch.at("complement_blocking"));
  c.checks.structured_cases = verdict_from(ch.at("structured_cases"));
  c.checks.thm3_ok = ch.at("thm3_ok").get<bool>();
  c.checks.param_window_ok = ch.at("param_window_ok").get<bool>();
  c.checks.layer_formula_ok = ch.at("layer_formula_ok").get<bool>();
  c.checks.size_accounting_ok = ch.at("size_accounting_ok").get<bool>();
  c.checks.matches_construction = ch.at("matches_construction").get<bool>();
  const auto& pr = j.at("provenance");
  c.provenance.tool_version = pr.at("tool_version").get<std::string>();
  c.provenance.input = pr.at("input").get<std::string>();
  c.provenance.jobs = pr.at("jobs").get<unsigned>();
  c.provenance.seed = pr.at("seed").get<std::uint64_t>();
  c.provenance.durations_ms = pr.at("durations_ms").get<std::map<std::string, double>>();
}

Certificate certify_set(const PointSet& set, const std::string& input_label,
                        const CertifyOptions& opts) {
  const Space& sp = set.space();
  if (sp.dim() != 3)
    throw Error(ErrorKind::DimensionMismatch, "certificates are issued for sets in F_p^3");
  const auto params = derive_params(sp.mod());
  const std::uint64_t p = sp.p();

  Certificate cert;
  cert.p = p;
  cert.params = params_of(params);
  cert.provenance.input = input_label;
  cert.provenance.jobs = opts.verify.jobs;
  cert.provenance.seed = opts.seed;

  Stopwatch clock;
  const PointSet s_star = build_s_star(params);
  const PointSet reference = build_s(params);
  cert.provenance.durations_ms["build"] = clock.lap_ms();

  cert.sizes.hypercube = (p - 1) * (p - 1) * (p - 1);
  cert.sizes.s_star = s_star.cardinality();
  cert.sizes.s = set.cardinality();
  cert.sizes.removed = s_star.cardinality() - reference.cardinality();
  cert.sizes.complement = p * p * p - set.cardinality();

  cert.checks.structured_cases =
      VerdictSummary::from(is_line_free_in_directions(set, structured_directions(sp), opts.verify));
  cert.provenance.durations_ms["structured_cases"] = clock.lap_ms();
  cert.checks.line_free = VerdictSummary::from(is_line_free(set, opts.verify));
  cert.provenance.durations_ms["line_free"] = clock.lap_ms();
  cert.checks.complement_blocking =
      VerdictSummary::from(is_blocking(set.complement(), opts.verify));
  cert.provenance.durations_ms["complement_blocking"] = clock.lap_ms();

  cert.checks.thm3_ok = thm3_check(sp.mod(), cert.sizes.s);
  cert.checks.param_window_ok = param_window_check(params);
  cert.checks.layer_formula_ok = layer_formulas_hold(params, s_star);
  cert.checks.size_accounting_ok = cert.sizes.s == cert.sizes.s_star - cert.sizes.removed;
  cert.checks.matches_construction = (set == reference);
  cert.provenance.durations_ms["checks"] = clock.lap_ms();
  return cert;
}

Certificate certify(const PrimeModulus& mod, const CertifyOptions& opts) {
  return certify_set(build_s(mod), "construction", opts);
}

}  // namespace linefree
