#ifndef PERMION_H
#define PERMION_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Error codes returned by every fallible call.
 */
typedef enum PermionStatus {
  PERMION_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  PERMION_STATUS_NULL_ARGUMENT = 1,
  /**
   * Text input was not valid UTF-8 or not valid cycle notation.
   */
  PERMION_STATUS_PARSE_ERROR = 2,
  /**
   * An argument was outside the supported range.
   */
  PERMION_STATUS_INVALID_ARGUMENT = 3,
  /**
   * The requested verification ran and found a violation.
   */
  PERMION_STATUS_VERIFICATION_FAILED = 4,
} PermionStatus;

/**
 * Opaque permutation handle.
 */
typedef struct PermionPerm PermionPerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses cycle notation (e.g. "(12)(3,10)" or "e") into a permutation of
 * degree `n`. On success writes a new handle to `out`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum PermionStatus permion_perm_parse(const char *text, uintptr_t n, struct PermionPerm **out);

/**
 * Builds the identity permutation of degree `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PermionStatus permion_perm_identity(uintptr_t n, struct PermionPerm **out);

/**
 * Composes two permutations of equal degree: `(a ∘ b)(i) = a(b(i))`.
 *
 * # Safety
 * `a`, `b`, and `out` must be valid pointers.
 */
enum PermionStatus permion_perm_compose(const struct PermionPerm *a,
                                        const struct PermionPerm *b,
                                        struct PermionPerm **out);

/**
 * Writes the inverse of `p` to `out`.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum PermionStatus permion_perm_inverse(const struct PermionPerm *p, struct PermionPerm **out);

/**
 * Returns the sign of the permutation (+1 or -1); 0 only on NULL input.
 *
 * # Safety
 * `p` must be a valid pointer or NULL.
 */
int32_t permion_perm_sign(const struct PermionPerm *p);

/**
 * Returns the degree n of the permutation; 0 only on NULL input.
 *
 * # Safety
 * `p` must be a valid pointer or NULL.
 */
uintptr_t permion_perm_degree(const struct PermionPerm *p);

/**
 * Image of the point `i` (1-based); 0 on NULL input or out-of-range point.
 *
 * # Safety
 * `p` must be a valid pointer or NULL.
 */
uintptr_t permion_perm_apply(const struct PermionPerm *p, uintptr_t i);

/**
 * Canonical cycle notation of the permutation as an owned string.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum PermionStatus permion_perm_format(const struct PermionPerm *p, char **out);

/**
 * Releases a permutation handle. NULL is a no-op.
 *
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void permion_perm_free(struct PermionPerm *p);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void permion_string_free(char *s);

/**
 * JSON description of the natural representation matrix of the permutation
 * whose cycle notation is `element`, acting on n points.
 *
 * # Safety
 * `element` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum PermionStatus permion_natural_matrix_json(const char *element, uintptr_t n, char **out);

/**
 * Verifies the homomorphism law for the natural representation of S_n.
 */
enum PermionStatus permion_verify_natural_homomorphism(uintptr_t n);

/**
 * Verifies the fermionic anticommutation relations on `modes` modes.
 */
enum PermionStatus permion_verify_car(uintptr_t modes);

/**
 * Verifies the bosonic commutation relations on the safe subspace of a
 * truncated basis; writes the observed truncation artifact to `artifact_out`
 * when non-NULL.
 *
 * # Safety
 * `artifact_out` must be a valid pointer or NULL.
 */
enum PermionStatus permion_verify_ccr(uintptr_t modes, uint32_t truncation, double *artifact_out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PERMION_H */
