#ifndef SUBLIN_H
#define SUBLIN_H

/* Generated by cbindgen from the sublin-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of one call. Zero is success; everything else names the first
 * check that failed.
 */
typedef enum SublinStatus {
  /**
   * The call succeeded and every out-parameter is set.
   */
  SUBLIN_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SUBLIN_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SUBLIN_STATUS_INVALID_UTF8 = 2,
  /**
   * Both batch sizes of a verification were absent, or an argument was
   * outside its documented range.
   */
  SUBLIN_STATUS_INVALID_ARGUMENT = 3,
  /**
   * No problem family, reduction, or strategy goes by the given name.
   */
  SUBLIN_STATUS_UNKNOWN_NAME = 4,
  /**
   * The instance text does not parse in the family's format.
   */
  SUBLIN_STATUS_PARSE_ERROR = 5,
  /**
   * The instance parses but violates a structural invariant, or it lies
   * outside the occurrence/degree/column cap a reduction requires.
   */
  SUBLIN_STATUS_INVALID_INSTANCE = 6,
  /**
   * The operation is not defined for the instance's problem family.
   */
  SUBLIN_STATUS_WRONG_FAMILY = 7,
  /**
   * A unique-cover instance broke the promise its solver relies on.
   */
  SUBLIN_STATUS_BROKEN_PROMISE = 8,
  /**
   * An internal invariant failed; the out-parameters are untouched.
   */
  SUBLIN_STATUS_INTERNAL = 9,
} SublinStatus;

/**
 * Parsed, validated instance of one of the six problem families.
 */
typedef struct SublinInstance SublinInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free it.
 */
const char *sublin_version(void);

/**
 * Parses `text` as an instance of `family` and hands back an owned handle.
 *
 * `family` is one of `2sat`, `reach`, `lp`, `1nfa`, `uock`, `maxhpp` (the
 * format tags `cnf`, `dstcon`, `nfa`, `hpp` are accepted too). The instance
 * must parse and pass structural validation.
 *
 * # Safety
 *
 * `family` and `text` must be NUL-terminated strings valid for the duration
 * of the call; `out` must point to writable memory for one pointer.
 */
enum SublinStatus sublin_instance_parse(const char *family,
                                        const char *text,
                                        struct SublinInstance **out);

/**
 * Writes the instance's canonical text encoding.
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `out` must point to
 * writable memory for one pointer. Free the result with
 * [`sublin_string_free`].
 */
enum SublinStatus sublin_instance_serialize(const struct SublinInstance *instance, char **out);

/**
 * Writes the instance's family tag (`cnf`, `dstcon`, `lp`, `nfa`, `uock`,
 * or `hpp`).
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `out` must point to
 * writable memory for one pointer. Free the result with
 * [`sublin_string_free`].
 */
enum SublinStatus sublin_instance_family(const struct SublinInstance *instance, char **out);

/**
 * Writes the instance's declared size parameter (variables, vertices,
 * columns, the state-alphabet-length product, element count, or dimension,
 * by family).
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `out` must point to
 * writable memory for one `uint64_t`.
 */
enum SublinStatus sublin_instance_size(const struct SublinInstance *instance, uint64_t *out);

/**
 * Releases a handle from this library. Null is a no-op.
 *
 * # Safety
 *
 * `instance` must be null or a handle not freed before; the handle is dead
 * afterwards.
 */
void sublin_instance_free(struct SublinInstance *instance);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 *
 * `text` must be null or a string returned by this library and not freed
 * before; the pointer is dead afterwards.
 */
void sublin_string_free(char *text);

/**
 * Decides the instance and writes 1 (yes) or 0 (no).
 *
 * Satisfiability for `2sat` and `lp`, s-t reachability for `reach`,
 * accepted-word existence for `1nfa`, cover existence for `uock`. Hop
 * sequence instances are optimization problems; use
 * [`sublin_maxhpp_value`] instead.
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `out_yes` must point
 * to writable memory for one `int32_t`.
 */
enum SublinStatus sublin_decide(const struct SublinInstance *instance, int32_t *out_yes);

/**
 * Writes the maximal hop sequence value of a `maxhpp` instance.
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `out_value` must
 * point to writable memory for one `uint64_t`.
 */
enum SublinStatus sublin_maxhpp_value(const struct SublinInstance *instance, uint64_t *out_value);

/**
 * Applies the named catalog reduction to `source` and hands back an owned
 * target handle.
 *
 * The source must be in the reduction's family and satisfy its declared
 * occurrence/degree/column cap, if any. The query-based translation is not
 * available here because it produces many instances per source.
 *
 * # Safety
 *
 * `name` must be a NUL-terminated string; `source` must be a live handle
 * from this library; `out` must point to writable memory for one pointer.
 */
enum SublinStatus sublin_reduce(const char *name,
                                const struct SublinInstance *source,
                                struct SublinInstance **out);

/**
 * Runs a space-metered decision on a `2sat` or `reach` instance.
 *
 * `strategy` is `bfs`, `savitch`, or `hybrid:<len>` with a positive segment
 * length. A `step_budget` of 0 selects the built-in default of 100,000,000
 * steps. Writes the peak working storage in bits, the step count, and the
 * answer: 1 (yes), 0 (no), or -1 (budget exhausted before an answer).
 *
 * # Safety
 *
 * `instance` must be a live handle from this library; `strategy` must be a
 * NUL-terminated string; the three out-pointers must each point to writable
 * memory for their type.
 */
enum SublinStatus sublin_measure(const struct SublinInstance *instance,
                                 const char *strategy,
                                 uint64_t step_budget,
                                 uint64_t *out_peak_bits,
                                 uint64_t *out_steps,
                                 int32_t *out_answer);

/**
 * Replays reductions against their answer oracles and size bounds.
 *
 * `name` is one catalog reduction, the query translation, or `all` for the
 * whole catalog. A non-negative `exhaustive_size` adds the full source
 * domain up to that size; a positive `random_count` adds that many sampled
 * sources seeded deterministically from `seed`. At least one of the two
 * batches must be requested. Writes a JSON run report and its verdict as 1
 * (all reductions passed) or 0.
 *
 * # Safety
 *
 * `name` must be a NUL-terminated string; `out_json` and `out_all_passed`
 * must point to writable memory for one pointer and one `int32_t`. Free the
 * JSON with [`sublin_string_free`].
 */
enum SublinStatus sublin_verify(const char *name,
                                int32_t exhaustive_size,
                                uint64_t random_count,
                                uint64_t seed,
                                char **out_json,
                                int32_t *out_all_passed);

/**
 * Writes a JSON array with every reduction name accepted by
 * [`sublin_reduce`] and [`sublin_verify`], the query translation last.
 *
 * # Safety
 *
 * `out` must point to writable memory for one pointer. Free the result with
 * [`sublin_string_free`].
 */
enum SublinStatus sublin_reduction_names(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBLIN_H */
