#ifndef HOLEXT_H
#define HOLEXT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `HX_STATUS_OK` is zero; everything else is a failure.
 */
typedef enum HxStatus {
  HX_STATUS_OK = 0,
  HX_STATUS_NULL_POINTER = 1,
  HX_STATUS_INVALID_UTF8 = 2,
  HX_STATUS_PARSE = 3,
  HX_STATUS_DIMENSION = 4,
  HX_STATUS_INVALID_ARGUMENT = 5,
  HX_STATUS_INSUFFICIENT_NODES = 6,
  HX_STATUS_DEGREE_LIMIT = 7,
  HX_STATUS_INVARIANT = 8,
  HX_STATUS_PANIC = 9,
} HxStatus;

/**
 * Verdict for one polynomial, with its witness or extension.
 */
typedef struct HxCertificate HxCertificate;

/**
 * Polynomial boundary data in `z1..zn` and conjugates.
 */
typedef struct HxPoly HxPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text` as a polynomial in dimension `dim` (at least 2).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HxStatus hx_poly_parse(const char *text, size_t dim, struct HxPoly **out);

/**
 * # Safety
 * `poly` must come from [`hx_poly_parse`] and not be freed twice.
 */
void hx_poly_free(struct HxPoly *poly);

/**
 * Dimension of `poly`, or 0 for a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t hx_poly_dim(const struct HxPoly *poly);

/**
 * Canonical text of `poly`; parsing it back yields the same polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum HxStatus hx_poly_to_string(const struct HxPoly *poly, char **out);

/**
 * Normal form of `poly` (`|z|² = 1` applied), as a new handle.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum HxStatus hx_poly_normal_form(const struct HxPoly *poly, struct HxPoly **out);

/**
 * Decides holomorphic extension; in dimension above 2 the default slice
 * family is certified as well.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum HxStatus hx_certify(const struct HxPoly *poly, struct HxCertificate **out);

/**
 * 1 if the data extends, 0 if obstructed, -1 for a null handle.
 *
 * # Safety
 * `cert` must be null or a live handle.
 */
int hx_certificate_extends(const struct HxCertificate *cert);

/**
 * The certificate as a JSON report.
 *
 * # Safety
 * `cert` must be a live handle and `out` a valid pointer.
 */
enum HxStatus hx_certificate_to_json(const struct HxCertificate *cert, char **out);

/**
 * # Safety
 * `cert` must come from [`hx_certify`] and not be freed twice.
 */
void hx_certificate_free(struct HxCertificate *cert);

/**
 * Exact moment `mu(a, N)` of a 2-dimensional polynomial, written as a
 * Gaussian rational such as `"1/2-3/4i"`. `a` uses the same syntax.
 *
 * # Safety
 * `poly` must be a live handle, `a` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum HxStatus hx_moment(const struct HxPoly *poly, const char *a, uint32_t n, char **out);

/**
 * Trapezoid approximation of the same moment with `nodes` nodes.
 *
 * # Safety
 * `poly` must be a live handle; `out_re` and `out_im` valid pointers.
 */
enum HxStatus hx_moment_quad(const struct HxPoly *poly,
                             double a_re,
                             double a_im,
                             uint32_t n,
                             size_t nodes,
                             double *out_re,
                             double *out_im);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *hx_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void hx_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOLEXT_H */
