#ifndef FANO3_H
#define FANO3_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum F3ClaimStatus {
  F3_CLAIM_STATUS_PASS = 0,
  F3_CLAIM_STATUS_FAIL = 1,
  F3_CLAIM_STATUS_SKIPPED = 2,
  F3_CLAIM_STATUS_UNSTABLE = 3,
} F3ClaimStatus;

typedef enum F3Format {
  F3_FORMAT_TEXT = 0,
  F3_FORMAT_JSON = 1,
  F3_FORMAT_MARKDOWN = 2,
} F3Format;

typedef enum F3Status {
  F3_STATUS_OK = 0,
  F3_STATUS_NULL_POINTER = 1,
  F3_STATUS_INVALID_UTF8 = 2,
  F3_STATUS_INVALID_ARGUMENT = 3,
  F3_STATUS_UNKNOWN_CLAIM = 4,
  F3_STATUS_OUT_OF_RANGE = 5,
  F3_STATUS_PANIC = 6,
} F3Status;

/**
 * Run configuration. Starts at the library defaults.
 */
typedef struct F3Config F3Config;

/**
 * Results of one run, sorted by claim id.
 */
typedef struct F3Results F3Results;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *f3_last_error(void);

/**
 * Static, nul-terminated crate version.
 */
const char *f3_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void f3_string_free(char *s);

struct F3Config *f3_config_new(void);

/**
 * # Safety
 * `cfg` must be null or a handle from [`f3_config_new`], not yet freed.
 */
void f3_config_free(struct F3Config *cfg);

/**
 * Sets the primary prime. Non-primes are rejected here rather than at run.
 *
 * # Safety
 * `cfg` must be a live config handle.
 */
enum F3Status f3_config_set_prime(struct F3Config *cfg, uint64_t prime);

/**
 * # Safety
 * `cfg` must be a live config handle.
 */
enum F3Status f3_config_set_seed(struct F3Config *cfg, uint64_t seed);

/**
 * # Safety
 * `cfg` must be a live config handle.
 */
enum F3Status f3_config_set_trials(struct F3Config *cfg, uint32_t trials);

/**
 * # Safety
 * `cfg` must be a live config handle.
 */
enum F3Status f3_config_set_include_slow(struct F3Config *cfg, bool include);

/**
 * Adds a claim id to the filter. With no ids added every claim runs.
 *
 * # Safety
 * `cfg` must be a live config handle; `id` a nul-terminated string.
 */
enum F3Status f3_config_add_claim(struct F3Config *cfg, const char *id);

/**
 * Runs the configured claims. On success `*out` receives a results handle.
 *
 * # Safety
 * `cfg` must be a live config handle and `out` writable.
 */
enum F3Status f3_run(const struct F3Config *cfg, struct F3Results **out);

/**
 * # Safety
 * `res` must be null or a handle from [`f3_run`], not yet freed.
 */
void f3_results_free(struct F3Results *res);

/**
 * Number of results; 0 for a null handle.
 *
 * # Safety
 * `res` must be null or a live results handle.
 */
size_t f3_results_len(const struct F3Results *res);

/**
 * 0 if every result passed or was skipped, 1 otherwise; the CLI's exit code.
 *
 * # Safety
 * `res` must be a live results handle.
 */
int32_t f3_results_exit_code(const struct F3Results *res);

/**
 * Status of result `index`.
 *
 * # Safety
 * `res` must be a live results handle and `out` writable.
 */
enum F3Status f3_results_status(const struct F3Results *res, size_t index, enum F3ClaimStatus *out);

/**
 * Claim id of result `index`, as a new string.
 *
 * # Safety
 * `res` must be a live results handle and `out` writable.
 */
enum F3Status f3_results_claim_id(const struct F3Results *res, size_t index, char **out);

/**
 * Renders the results in `format`, as a new string.
 *
 * # Safety
 * `res` must be a live results handle and `out` writable.
 */
enum F3Status f3_results_report(const struct F3Results *res, enum F3Format format, char **out);

/**
 * Tab-separated registry table, as printed by `fano3 list`.
 *
 * # Safety
 * `out` must be writable.
 */
enum F3Status f3_registry_table(char **out);

/**
 * Checks that the map sending source basis vector `j` to column `j` of
 * `images` preserves the bilinear forms. Gram matrices are row-major
 * `rank x rank`; `images` is row-major `target_rank x source_rank`.
 *
 * # Safety
 * The arrays must hold the stated number of elements and `out` be writable.
 */
enum F3Status f3_lattice_verify_embedding(const int64_t *source_gram,
                                          size_t source_rank,
                                          const int64_t *target_gram,
                                          size_t target_rank,
                                          const int64_t *images,
                                          bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FANO3_H */
