#ifndef GROUPRING_H
#define GROUPRING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GrNdVerdict {
  GR_ND_VERDICT_HAS_ND = 0,
  GR_ND_VERDICT_NOT_ND = 1,
  GR_ND_VERDICT_UNKNOWN = 2,
} GrNdVerdict;

typedef enum GrStatus {
  GR_STATUS_OK = 0,
  GR_STATUS_NULL_POINTER = 1,
  GR_STATUS_INVALID_UTF8 = 2,
  GR_STATUS_PARSE = 3,
  GR_STATUS_ORDER_CAP_EXCEEDED = 4,
  GR_STATUS_NOT_P_GROUP = 5,
  GR_STATUS_NOT_METABELIAN = 6,
  GR_STATUS_FAILED = 7,
  GR_STATUS_INTERNAL = 8,
} GrStatus;

/**
 * A built finite group.
 */
typedef struct GrGroup GrGroup;

/**
 * A full analysis, kept as its JSON rendering.
 */
typedef struct GrReport GrReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *gr_last_error(void);

/**
 * Library version as a static string.
 */
const char *gr_version(void);

/**
 * Builds the group described by `spec`, refusing orders above `cap`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GrStatus gr_group_new(const char *spec, size_t cap, struct GrGroup **out);

/**
 * # Safety
 * `g` must come from `gr_group_new` and not be freed twice. Null is ignored.
 */
void gr_group_free(struct GrGroup *g);

/**
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_order(const struct GrGroup *g, size_t *out);

/**
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_is_sn(const struct GrGroup *g, bool *out);

/**
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_is_ssn(const struct GrGroup *g, bool *out);

/**
 * `GR_STATUS_NOT_P_GROUP` unless the group is a `p`-group.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_is_ncn(const struct GrGroup *g, bool *out);

/**
 * Bounds `[low, high]` on the number of matrix components of `Q[G]`.
 *
 * # Safety
 * `g` must be a live group handle; `low` and `high` valid pointers.
 */
enum GrStatus gr_group_matrix_components(const struct GrGroup *g, size_t *low, size_t *high);

/**
 * ND verdict with a witness search of at most `budget` candidate tests.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_nd_verdict(const struct GrGroup *g, size_t budget, enum GrNdVerdict *out);

/**
 * Full analysis of `g`; `budget` bounds the ND witness search.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum GrStatus gr_group_analyze(const struct GrGroup *g, size_t budget, struct GrReport **out);

/**
 * The report as JSON, owned by the report handle.
 *
 * # Safety
 * `r` must be a live report handle or null (which yields null).
 */
const char *gr_report_json(const struct GrReport *r);

/**
 * # Safety
 * `r` must come from `gr_group_analyze` and not be freed twice. Null is ignored.
 */
void gr_report_free(struct GrReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GROUPRING_H */
