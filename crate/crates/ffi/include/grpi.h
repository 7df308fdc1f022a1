#ifndef GRPI_H
#define GRPI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call. `GRPI_STATUS_OK` doubles as a "true" verdict and
// `GRPI_STATUS_FALSE` as "false".
typedef enum GrpiStatus {
  GRPI_STATUS_OK = 0,
  GRPI_STATUS_FALSE = 1,
  GRPI_STATUS_INVALID_INPUT = 2,
  GRPI_STATUS_RESOURCE_GUARD = 3,
  GRPI_STATUS_NULL_POINTER = 4,
  GRPI_STATUS_PANIC = 5,
} GrpiStatus;

// Which space an identity is checked on.
typedef enum GrpiTarget {
  GRPI_TARGET_A = 0,
  GRPI_TARGET_B = 1,
  GRPI_TARGET_C = 2,
} GrpiTarget;

// A loaded algebra with its optional subalgebra pair.
typedef struct GrpiAlgebra GrpiAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *grpi_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *grpi_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be NULL or a pointer obtained from this library and not yet freed.
void grpi_string_free(char *s);

// Parses and validates an algebra description.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum GrpiStatus grpi_algebra_load_json(const char *json, struct GrpiAlgebra **out);

// Releases an algebra handle.
//
// # Safety
// `alg` must be NULL or a handle from [`grpi_algebra_load_json`] not yet freed.
void grpi_algebra_free(struct GrpiAlgebra *alg);

// Dimension of the algebra, or 0 for a NULL handle.
//
// # Safety
// `alg` must be NULL or a live handle.
size_t grpi_algebra_dim(const struct GrpiAlgebra *alg);

// Whether `poly` is a graded identity of `A`, `B` or `C`: `OK` for true,
// `FALSE` for false. `budget` 0 selects the default.
//
// # Safety
// `alg` must be a live handle and `poly` a NUL-terminated string.
enum GrpiStatus grpi_check_identity(const struct GrpiAlgebra *alg,
                                    const char *poly,
                                    enum GrpiTarget target,
                                    uint64_t budget);

// Codimension of the multilinear space with `len` per-degree variable counts.
//
// # Safety
// `alg` must be a live handle, `counts` must point to `len` values and `out`
// must be writable.
enum GrpiStatus grpi_codimension(const struct GrpiAlgebra *alg,
                                 const size_t *counts,
                                 size_t len,
                                 uint64_t budget,
                                 size_t *out);

// Like [`grpi_codimension`] but writes the full JSON report to `*out`.
//
// # Safety
// As for [`grpi_codimension`]; the string must be released with [`grpi_string_free`].
enum GrpiStatus grpi_codimension_report_json(const struct GrpiAlgebra *alg,
                                             const size_t *counts,
                                             size_t len,
                                             uint64_t budget,
                                             char **out);

// Rank of the generic 2x2 matrix evaluation for `n0` neutral and `n1`
// odd variables; `OK` when the rank is `(n0 + n1)!`.
//
// # Safety
// `rank` must be NULL or writable.
enum GrpiStatus grpi_generic_no_identity(size_t n0, size_t n1, size_t *rank);

// Number of permutations of `S_n` without a decreasing subsequence of length `d`.
//
// # Safety
// `out` must be writable.
enum GrpiStatus grpi_count_d_good(size_t n, size_t d, uint64_t *out);

// JSON enclosure of `alpha` and of the degree `ceil(alpha^alpha)`.
//
// # Safety
// `out` must be writable; the string must be released with [`grpi_string_free`].
enum GrpiStatus grpi_theorem_degree_json(size_t d1,
                                         size_t d2,
                                         size_t elt_order,
                                         size_t group_order,
                                         bool exact,
                                         char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRPI_H */
