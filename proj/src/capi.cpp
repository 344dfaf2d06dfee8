#include "linefree/linefree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "linefree/bounds.hpp"
#include "linefree/certificate.hpp"
#include "linefree/construction.hpp"
#include "linefree/oracle.hpp"
#include "linefree/pointset_io.hpp"
#include "linefree/verifier.hpp"

struct lf_pointset {
  linefree::PointSet set;
};

namespace {

using namespace linefree;

thread_local std::string g_last_error;

lf_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return LF_ERR_NOT_PRIME;
    case ErrorKind::ModulusTooSmall: return LF_ERR_MODULUS_TOO_SMALL;
    case ErrorKind::BelowTwo: return LF_ERR_BELOW_TWO;
    case ErrorKind::OutOfRange: return LF_ERR_OUT_OF_RANGE;
    case ErrorKind::DimensionMismatch: return LF_ERR_DIMENSION_MISMATCH;
    case ErrorKind::ZeroInverse: return LF_ERR_ZERO_INVERSE;
    case ErrorKind::Io: return LF_ERR_IO;
    case ErrorKind::Format: return LF_ERR_FORMAT;
    case ErrorKind::InvalidArgument: return LF_ERR_INVALID_ARGUMENT;
  }
  return LF_ERR_INTERNAL;
}

lf_status fail(lf_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

template <class F>
lf_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LF_ERR_FORMAT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LF_ERR_INTERNAL, "unknown exception");
  }
}

#define LF_REQUIRE(cond, what) \
  if (!(cond)) return fail(LF_ERR_INVALID_ARGUMENT, what)

lf_status emit(PointSet set, lf_pointset** out) {
  *out = new lf_pointset{std::move(set)};
  return LF_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Point to_point(const Space& sp, const uint32_t* coords, size_t n) {
  if (n != sp.dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match dimension");
  Point pt;
  pt.dim = sp.dim();
  for (size_t i = 0; i < n; ++i) pt.c[i] = coords[i];
  if (!sp.contains(pt)) throw Error(ErrorKind::OutOfRange, "coordinate outside [0, p-1]");
  return pt;
}

void fill_verdict(const Verdict& v, lf_verdict* out) {
  *out = lf_verdict{};
  out->ok = v.ok ? 1 : 0;
  out->lines_checked = v.lines_checked;
  out->probes = v.probes;
  if (v.witness) {
    out->has_witness = 1;
    out->witness.dim = v.witness->base.dim;
    for (unsigned i = 0; i < kMaxDim; ++i) {
      out->witness.base[i] = v.witness->base.c[i];
      out->witness.dir[i] = v.witness->dir.c[i];
    }
  }
}

VerifyOptions verify_options(unsigned jobs, lf_progress_fn progress, void* user) {
  VerifyOptions opts;
  opts.jobs = jobs;
  if (progress)
    opts.progress = [progress, user](std::uint64_t done, std::uint64_t total) {
      progress(done, total, user);
    };
  return opts;
}

ConstructionParams params_for(uint64_t p) { return derive_params(make_modulus(p)); }

}  // namespace

extern "C" {

const char* lf_version(void) { return kToolVersion; }

const char* lf_status_string(lf_status status) {
  switch (status) {
    case LF_OK: return "ok";
    case LF_ERR_NOT_PRIME: return "not prime";
    case LF_ERR_MODULUS_TOO_SMALL: return "p must be >= 3";
    case LF_ERR_BELOW_TWO: return "value below 2";
    case LF_ERR_OUT_OF_RANGE: return "out of range";
    case LF_ERR_DIMENSION_MISMATCH: return "dimension or modulus mismatch";
    case LF_ERR_ZERO_INVERSE: return "zero has no inverse";
    case LF_ERR_IO: return "i/o error";
    case LF_ERR_FORMAT: return "format error";
    case LF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lf_last_error(void) { return g_last_error.c_str(); }

void lf_string_free(char* str) { std::free(str); }

lf_status lf_check_modulus(uint64_t n) {
  return guarded([&] {
    make_modulus(n);
    return LF_OK;
  });
}

lf_status lf_field_inv(uint64_t p, uint32_t a, uint32_t* out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] {
    const auto m = make_modulus(p);
    if (a >= m.p()) return fail(LF_ERR_OUT_OF_RANGE, "element outside [0, p-1]");
    *out = m.inv(a);
    return LF_OK;
  });
}

lf_status lf_derive_params(uint64_t p, lf_params* out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] {
    const auto c = params_for(p);
    *out = lf_params{c.p(), c.r, c.s, c.l, c.degenerate ? 1 : 0};
    return LF_OK;
  });
}

lf_status lf_pointset_new(uint64_t p, uint32_t dim, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(PointSet(Space(make_modulus(p), dim)), out); });
}

lf_status lf_pointset_clone(const lf_pointset* set, lf_pointset** out) {
  LF_REQUIRE(set && out, "NULL argument");
  return guarded([&] { return emit(set->set, out); });
}

void lf_pointset_free(lf_pointset* set) { delete set; }

uint32_t lf_pointset_prime(const lf_pointset* set) { return set ? set->set.space().p() : 0; }

uint32_t lf_pointset_dim(const lf_pointset* set) { return set ? set->set.space().dim() : 0; }

uint64_t lf_pointset_cardinality(const lf_pointset* set) {
  return set ? set->set.cardinality() : 0;
}

lf_status lf_pointset_contains(const lf_pointset* set, const uint32_t* coords, size_t ncoords,
                               int* out) {
  LF_REQUIRE(set && coords && out, "NULL argument");
  return guarded([&] {
    *out = set->set.contains(to_point(set->set.space(), coords, ncoords)) ? 1 : 0;
    return LF_OK;
  });
}

lf_status lf_pointset_insert(lf_pointset* set, const uint32_t* coords, size_t ncoords) {
  LF_REQUIRE(set && coords, "NULL argument");
  return guarded([&] {
    set->set.insert(to_point(set->set.space(), coords, ncoords));
    return LF_OK;
  });
}

lf_status lf_pointset_remove(lf_pointset* set, const uint32_t* coords, size_t ncoords) {
  LF_REQUIRE(set && coords, "NULL argument");
  return guarded([&] {
    set->set.remove(to_point(set->set.space(), coords, ncoords));
    return LF_OK;
  });
}

lf_status lf_pointset_complement(const lf_pointset* set, lf_pointset** out) {
  LF_REQUIRE(set && out, "NULL argument");
  return guarded([&] { return emit(set->set.complement(), out); });
}

lf_status lf_pointset_equal(const lf_pointset* a, const lf_pointset* b, int* out) {
  LF_REQUIRE(a && b && out, "NULL argument");
  *out = (a->set == b->set) ? 1 : 0;
  return LF_OK;
}

lf_status lf_pointset_save(const lf_pointset* set, const char* path, lf_format format) {
  LF_REQUIRE(set && path, "NULL argument");
  return guarded([&] {
    SetFormat f = format == LF_FORMAT_TEXT     ? SetFormat::Text
                  : format == LF_FORMAT_BINARY ? SetFormat::Binary
                                               : format_for_path(path);
    save(set->set, path, f);
    return LF_OK;
  });
}

lf_status lf_pointset_load(const char* path, lf_pointset** out) {
  LF_REQUIRE(path && out, "NULL argument");
  return guarded([&] { return emit(load(path), out); });
}

lf_status lf_build_hypercube(uint64_t p, uint32_t dim, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(hypercube(make_modulus(p), dim), out); });
}

lf_status lf_build_lemma_set(uint64_t p, int64_t t, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(lemma_blocking_set(params_for(p), t), out); });
}

lf_status lf_build_layer_exclusion(uint64_t p, int64_t layer_index, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(layer_exclusion(params_for(p), layer_index), out); });
}

lf_status lf_build_s_star(uint64_t p, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(build_s_star(params_for(p)), out); });
}

lf_status lf_build_removal(uint64_t p, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(removal_points(params_for(p)), out); });
}

lf_status lf_build_s(uint64_t p, lf_pointset** out) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] { return emit(build_s(params_for(p)), out); });
}

lf_status lf_verify_line_free(const lf_pointset* set, unsigned jobs, lf_progress_fn progress,
                              void* user, lf_verdict* out) {
  LF_REQUIRE(set && out, "NULL argument");
  return guarded([&] {
    fill_verdict(is_line_free(set->set, verify_options(jobs, progress, user)), out);
    return LF_OK;
  });
}

lf_status lf_verify_blocking(const lf_pointset* set, unsigned jobs, lf_progress_fn progress,
                             void* user, lf_verdict* out) {
  LF_REQUIRE(set && out, "NULL argument");
  return guarded([&] {
    fill_verdict(is_blocking(set->set, verify_options(jobs, progress, user)), out);
    return LF_OK;
  });
}

lf_status lf_verify_line_free_naive(const lf_pointset* set, lf_verdict* out) {
  LF_REQUIRE(set && out, "NULL argument");
  return guarded([&] {
    fill_verdict(is_line_free_naive(set->set), out);
    return LF_OK;
  });
}

lf_status lf_thm3_check(uint64_t p, uint64_t size, int* ok) {
  LF_REQUIRE(ok, "ok is NULL");
  return guarded([&] {
    *ok = thm3_check(make_modulus(p), size) ? 1 : 0;
    return LF_OK;
  });
}

lf_status lf_table(uint64_t p_min, uint64_t p_max, int verify, unsigned jobs,
                   lf_table_format format, char** out, int* all_ok) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] {
    const auto primes = primes_in_range(p_min, p_max);
    if (primes.empty())
      return fail(LF_ERR_INVALID_ARGUMENT, "no primes >= 3 in [" + std::to_string(p_min) + ", " +
                                               std::to_string(p_max) + "]");
    TableOptions opts;
    opts.verify = verify != 0;
    opts.verify_opts.jobs = jobs;
    const auto rows = make_table(primes, opts);
    if (all_ok) {
      *all_ok = 1;
      for (const auto& r : rows)
        if (!r.thm3_ok || (r.line_free && !*r.line_free)) *all_ok = 0;
    }
    *out = dup_string(format == LF_TABLE_JSON ? table_to_json(rows) : table_to_csv(rows));
    return LF_OK;
  });
}

static lf_status certificate_out(const Certificate& cert, char** json_out, int* passed) {
  *json_out = dup_string(nlohmann::json(cert).dump(2));
  if (passed) *passed = cert.all_passed() ? 1 : 0;
  return LF_OK;
}

lf_status lf_certify(uint64_t p, unsigned jobs, uint64_t seed, lf_progress_fn progress,
                     void* user, char** json_out, int* passed) {
  LF_REQUIRE(json_out, "json_out is NULL");
  return guarded([&] {
    CertifyOptions opts;
    opts.verify = verify_options(jobs, progress, user);
    opts.seed = seed;
    return certificate_out(certify(make_modulus(p), opts), json_out, passed);
  });
}

lf_status lf_certify_pointset(const lf_pointset* set, const char* input_label, unsigned jobs,
                              uint64_t seed, lf_progress_fn progress, void* user,
                              char** json_out, int* passed) {
  LF_REQUIRE(set && json_out, "NULL argument");
  return guarded([&] {
    CertifyOptions opts;
    opts.verify = verify_options(jobs, progress, user);
    opts.seed = seed;
    return certificate_out(certify_set(set->set, input_label ? input_label : "pointset", opts),
                           json_out, passed);
  });
}

lf_status lf_oracle(uint64_t p, uint32_t dim, uint64_t budget, uint64_t seed,
                    lf_search_result* out, lf_pointset** best) {
  LF_REQUIRE(out, "out is NULL");
  return guarded([&] {
    SearchOptions opts;
    opts.node_budget = budget;
    opts.seed = seed;
    auto res = max_line_free(make_modulus(p), dim, opts);
    *out = lf_search_result{res.best_size, res.nodes_explored, res.exact ? 1 : 0};
    if (best) *best = new lf_pointset{std::move(res.best_set)};
    return LF_OK;
  });
}

}  // extern "C"
