/* SPDX-License-Identifier: Apache-2.0 */

#ifndef CATOM_H
#define CATOM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>

typedef enum CatomStatus {
  CATOM_STATUS_OK = 0,
  CATOM_STATUS_PARSE = 1,
  CATOM_STATUS_GUARD = 2,
  CATOM_STATUS_DIVERGENCE = 3,
  CATOM_STATUS_NULL_ARG = 4,
  CATOM_STATUS_INVALID_UTF8 = 5,
  CATOM_STATUS_CLASS = 6,
  CATOM_STATUS_INTERNAL = 7,
} CatomStatus;

/**
 * A parsed program.
 */
typedef struct CatomProgram CatomProgram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses program text into a new handle stored in `*out`.
 *
 * # Safety
 * `text` is a NUL-terminated string and `out` is valid for writes.
 */
enum CatomStatus catom_program_parse(const char *text, struct CatomProgram **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` is null or a handle from [`catom_program_parse`] not yet freed.
 */
void catom_program_free(struct CatomProgram *p);

/**
 * Stable models as `{"models":[["a","b"],...]}`.
 *
 * # Safety
 * `p` is a live handle and `out` is valid for writes.
 */
enum CatomStatus catom_stable_models_json(const struct CatomProgram *p, char **out);

/**
 * Whether the comma-separated atoms in `atoms` form a stable model.
 *
 * # Safety
 * `p` is a live handle, `atoms` a NUL-terminated string, `out` valid for
 * writes.
 */
enum CatomStatus catom_is_stable(const struct CatomProgram *p, const char *atoms, bool *out);

/**
 * Decides stability with both the reduct and the fixpoint operator.
 * Returns `Divergence` if they disagree. The program must be normal with
 * elementary heads.
 *
 * # Safety
 * As for [`catom_is_stable`].
 */
enum CatomStatus catom_check_both(const struct CatomProgram *p, const char *atoms, bool *out);

/**
 * The reduct of the program w.r.t. the comma-separated atoms, as text.
 *
 * # Safety
 * `p` is a live handle, `atoms` a NUL-terminated string, `out` valid for
 * writes.
 */
enum CatomStatus catom_reduct_text(const struct CatomProgram *p, const char *atoms, char **out);

/**
 * The normal-program translation of a basic program, as text.
 *
 * # Safety
 * `p` is a live handle and `out` is valid for writes.
 */
enum CatomStatus catom_translate_text(const struct CatomProgram *p, char **out);

/**
 * The dependency graph of a basic program in Graphviz syntax.
 *
 * # Safety
 * `p` is a live handle and `out` is valid for writes.
 */
enum CatomStatus catom_depgraph_dot(const struct CatomProgram *p, char **out);

/**
 * Abstract representation and class flags of one c-atom expression such
 * as `[a, b : {a}, {a, b}]` or `1 {a, b} 1`, as JSON.
 *
 * # Safety
 * `expr` is a NUL-terminated string and `out` is valid for writes.
 */
enum CatomStatus catom_abstract_json(const char *expr, char **out);

/**
 * Releases a string returned through an `out` parameter. Null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void catom_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *catom_last_error(void);

const char *catom_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CATOM_H */
