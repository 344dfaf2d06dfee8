/*
 * C interface to the linefree library.
 *
 * Every fallible call returns an lf_status. On failure a human-readable
 * message for the calling thread is available from lf_last_error() until the
 * next failing call on that thread. Point sets are opaque handles owned by the
 * caller and released with lf_pointset_free(); strings returned through
 * char** out-parameters are released with lf_string_free().
 */
#ifndef LINEFREE_H
#define LINEFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LINEFREE_BUILDING)
#    define LF_API __declspec(dllexport)
#  else
#    define LF_API __declspec(dllimport)
#  endif
#else
#  define LF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_NOT_PRIME = 1,
  LF_ERR_MODULUS_TOO_SMALL = 2, /* n == 2 */
  LF_ERR_BELOW_TWO = 3,         /* n < 2 */
  LF_ERR_OUT_OF_RANGE = 4,
  LF_ERR_DIMENSION_MISMATCH = 5,
  LF_ERR_ZERO_INVERSE = 6,
  LF_ERR_IO = 7,
  LF_ERR_FORMAT = 8,
  LF_ERR_INVALID_ARGUMENT = 9,
  LF_ERR_INTERNAL = 10
} lf_status;

typedef enum lf_format {
  LF_FORMAT_AUTO = 0, /* by extension: .txt/.csv text, otherwise binary */
  LF_FORMAT_BINARY = 1,
  LF_FORMAT_TEXT = 2
} lf_format;

typedef enum lf_table_format { LF_TABLE_CSV = 0, LF_TABLE_JSON = 1 } lf_table_format;

typedef struct lf_pointset lf_pointset;

typedef struct lf_params {
  uint32_t p;
  uint32_t r;
  uint32_t s;
  uint32_t l;
  int degenerate;
} lf_params;

typedef struct lf_line {
  uint32_t dim;
  uint32_t base[3];
  uint32_t dir[3];
} lf_line;

typedef struct lf_verdict {
  int ok;
  int has_witness;
  lf_line witness;
  uint64_t lines_checked;
  uint64_t probes;
} lf_verdict;

typedef struct lf_search_result {
  uint64_t best_size;
  uint64_t nodes_explored;
  int exact;
} lf_search_result;

/* Called with (lines done, total lines, user). May run on worker threads,
 * never concurrently with itself. */
typedef void (*lf_progress_fn)(uint64_t done, uint64_t total, void *user);

LF_API const char *lf_version(void);
LF_API const char *lf_status_string(lf_status status);
LF_API const char *lf_last_error(void);
LF_API void lf_string_free(char *str);

/* Field and parameters */
LF_API lf_status lf_check_modulus(uint64_t n);
LF_API lf_status lf_field_inv(uint64_t p, uint32_t a, uint32_t *out);
LF_API lf_status lf_derive_params(uint64_t p, lf_params *out);

/* Point sets in F_p^dim, dim in {2, 3} */
LF_API lf_status lf_pointset_new(uint64_t p, uint32_t dim, lf_pointset **out);
LF_API lf_status lf_pointset_clone(const lf_pointset *set, lf_pointset **out);
LF_API void lf_pointset_free(lf_pointset *set);
LF_API uint32_t lf_pointset_prime(const lf_pointset *set);
LF_API uint32_t lf_pointset_dim(const lf_pointset *set);
LF_API uint64_t lf_pointset_cardinality(const lf_pointset *set);
LF_API lf_status lf_pointset_contains(const lf_pointset *set, const uint32_t *coords,
                                      size_t ncoords, int *out);
LF_API lf_status lf_pointset_insert(lf_pointset *set, const uint32_t *coords, size_t ncoords);
LF_API lf_status lf_pointset_remove(lf_pointset *set, const uint32_t *coords, size_t ncoords);
LF_API lf_status lf_pointset_complement(const lf_pointset *set, lf_pointset **out);
LF_API lf_status lf_pointset_equal(const lf_pointset *a, const lf_pointset *b, int *out);
LF_API lf_status lf_pointset_save(const lf_pointset *set, const char *path, lf_format format);
LF_API lf_status lf_pointset_load(const char *path, lf_pointset **out);

/* Construction */
LF_API lf_status lf_build_hypercube(uint64_t p, uint32_t dim, lf_pointset **out);
LF_API lf_status lf_build_lemma_set(uint64_t p, int64_t t, lf_pointset **out);
LF_API lf_status lf_build_layer_exclusion(uint64_t p, int64_t layer, lf_pointset **out);
LF_API lf_status lf_build_s_star(uint64_t p, lf_pointset **out);
LF_API lf_status lf_build_removal(uint64_t p, lf_pointset **out);
LF_API lf_status lf_build_s(uint64_t p, lf_pointset **out);

/* Verification. jobs == 0 uses every hardware thread; progress may be NULL. */
LF_API lf_status lf_verify_line_free(const lf_pointset *set, unsigned jobs,
                                     lf_progress_fn progress, void *user, lf_verdict *out);
LF_API lf_status lf_verify_blocking(const lf_pointset *set, unsigned jobs,
                                    lf_progress_fn progress, void *user, lf_verdict *out);
LF_API lf_status lf_verify_line_free_naive(const lf_pointset *set, lf_verdict *out);

/* Bounds */
LF_API lf_status lf_thm3_check(uint64_t p, uint64_t size, int *ok);
/* One row per prime in [p_min, p_max]; LF_ERR_INVALID_ARGUMENT if none.
 * *all_ok (may be NULL) is 1 iff every row passes the bound check and, when
 * verify is set, the line-freeness sweep. */
LF_API lf_status lf_table(uint64_t p_min, uint64_t p_max, int verify, unsigned jobs,
                          lf_table_format format, char **out, int *all_ok);

/* Certificates (JSON, schema_version "1"). *passed is 1 iff every check holds. */
LF_API lf_status lf_certify(uint64_t p, unsigned jobs, uint64_t seed,
                            lf_progress_fn progress, void *user, char **json_out, int *passed);
LF_API lf_status lf_certify_pointset(const lf_pointset *set, const char *input_label,
                                     unsigned jobs, uint64_t seed, lf_progress_fn progress,
                                     void *user, char **json_out, int *passed);

/* Exhaustive maximum line-free set search. budget == 0 picks the default;
 * best may be NULL. */
LF_API lf_status lf_oracle(uint64_t p, uint32_t dim, uint64_t budget, uint64_t seed,
                           lf_search_result *out, lf_pointset **best);

#ifdef __cplusplus
}
#endif

#endif /* LINEFREE_H */
