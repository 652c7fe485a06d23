/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef AXIAL_H
#define AXIAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first four match the exit codes of the `axial` binary.
 */
typedef enum AxialStatus {
  AXIAL_STATUS_OK = 0,
  /**
   * The computation ran and a mathematical check failed.
   */
  AXIAL_STATUS_CHECK_FAILED = 1,
  AXIAL_STATUS_INVALID_INPUT = 2,
  /**
   * An enumeration would exceed its cap.
   */
  AXIAL_STATUS_RESOURCE_CAP = 3,
  AXIAL_STATUS_NULL_POINTER = 4,
  AXIAL_STATUS_INVALID_UTF8 = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  AXIAL_STATUS_INTERNAL = 6,
} AxialStatus;

/**
 * An algebra with its optional designated generators.
 */
typedef struct AxialAlgebra AxialAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. Valid
 * until the next failing call on the same thread.
 */
const char *axial_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void axial_string_free(char *s);

/**
 * Parses an algebra file (JSON text).
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
enum AxialStatus axial_algebra_from_json(const char *json, struct AxialAlgebra **out);

/**
 * A catalog algebra: `family` is one of 2B, hss, flex1, flex2, bfamily;
 * `field` is Q, Qt or GF:p. Null parameters take their defaults.
 *
 * # Safety
 * String arguments must be valid C strings or null where allowed; `out`
 * must be writable.
 */
enum AxialStatus axial_catalog_algebra(const char *family,
                                       const char *field,
                                       const char *lambda,
                                       const char *lambda_prime,
                                       const char *gamma,
                                       struct AxialAlgebra **out);

/**
 * # Safety
 * `a` must come from this library and not have been freed. Null is ignored.
 */
void axial_algebra_free(struct AxialAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_algebra_dim(const struct AxialAlgebra *a, size_t *out);

/**
 * The algebra in the file format.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_algebra_to_json(const struct AxialAlgebra *a, char **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_is_flexible(const struct AxialAlgebra *a, bool *out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_is_commutative(const struct AxialAlgebra *a, bool *out);

/**
 * Axis axioms for `element` (coordinates or a basis name). `axis_type`
 * is `"λ,δ"` or null to read the type off the spectra. Returns `Ok` for
 * an axis and `CheckFailed` otherwise; the report is written either way.
 *
 * # Safety
 * `a` must be a live handle; strings valid or null where allowed; `out`
 * must be writable.
 */
enum AxialStatus axial_check_axis(const struct AxialAlgebra *a,
                                  const char *element,
                                  const char *axis_type,
                                  char **out);

/**
 * Classification of the algebra generated by `gens` (`"a,b"`), or by the
 * designated generators when `gens` is null.
 *
 * # Safety
 * As for [`axial_check_axis`].
 */
enum AxialStatus axial_classify(const struct AxialAlgebra *a, const char *gens, char **out);

/**
 * All idempotents over a finite field; `cap` bounds the enumeration.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_idempotents(const struct AxialAlgebra *a, uint64_t cap, char **out);

/**
 * Exhaustive 2-dimensional search over GF(p).
 *
 * # Safety
 * `out` must be writable.
 */
enum AxialStatus axial_search_dim2(uint64_t p, uint64_t cap, char **out);

/**
 * Replays the built-in statement suite.
 *
 * # Safety
 * `out` must be writable.
 */
enum AxialStatus axial_verify_suite(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AXIAL_H */
