#ifndef TFSAX_H
#define TFSAX_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum TfsaxStatus {
  TFSAX_STATUS_OK = 0,
  TFSAX_STATUS_NULL_POINTER = 1,
  TFSAX_STATUS_INVALID_ARGUMENT = 2,
  TFSAX_STATUS_LENGTH_MISMATCH = 3,
  TFSAX_STATUS_CONSTANT_SERIES = 4,
  TFSAX_STATUS_NON_FINITE = 5,
  TFSAX_STATUS_PARAM_MISMATCH = 6,
  TFSAX_STATUS_BUFFER_TOO_SMALL = 7,
  TFSAX_STATUS_PANIC = 8,
  TFSAX_STATUS_INTERNAL = 9,
} TfsaxStatus;

/**
 * Method codes accepted by [`tfsax_encoder_new`].
 */
typedef enum TfsaxMethod {
  TFSAX_METHOD_EUCLID = 0,
  TFSAX_METHOD_SAX = 1,
  TFSAX_METHOD_ESAX = 2,
  TFSAX_METHOD_SAX_TD = 3,
  TFSAX_METHOD_TFSAX = 4,
} TfsaxMethod;

/**
 * A configured method with its lookup tables.
 */
typedef struct TfsaxEncoder TfsaxEncoder;

/**
 * An encoded series.
 */
typedef struct TfsaxWord TfsaxWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *tfsax_version(void);

/**
 * Message for the last failed call on this thread; empty after a successful call.
 * The pointer stays valid until the next call on this thread.
 */
const char *tfsax_last_error_message(void);

/**
 * Creates an encoder for a `TfsaxMethod` code. `w`, `alpha` and `alpha_t` are ignored where the
 * method has no use for them.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum TfsaxStatus tfsax_encoder_new(uint32_t method,
                                   size_t w,
                                   size_t alpha,
                                   size_t alpha_t,
                                   struct TfsaxEncoder **out);

/**
 * # Safety
 * `encoder` must be null or a handle from [`tfsax_encoder_new`] not yet freed.
 */
void tfsax_encoder_free(struct TfsaxEncoder *encoder);

/**
 * Encodes `len` values as given (no normalization is applied).
 *
 * # Safety
 * `encoder` must be a live handle, `values` must point to `len` doubles, `out` to writable storage.
 */
enum TfsaxStatus tfsax_encode(const struct TfsaxEncoder *encoder,
                              const double *values,
                              size_t len,
                              struct TfsaxWord **out);

/**
 * # Safety
 * `word` must be null or a handle from [`tfsax_encode`] not yet freed.
 */
void tfsax_word_free(struct TfsaxWord *word);

/**
 * Renders a word as NUL-terminated text into `buf`. `out_len` receives the text length without
 * the terminator; when `buf_len` is too small nothing is written and `BufferTooSmall` is returned,
 * so a call with a null `buf` and zero `buf_len` queries the size.
 *
 * # Safety
 * `word` must be a live handle; `buf` must hold `buf_len` bytes; `out_len` may be null.
 */
enum TfsaxStatus tfsax_word_render(const struct TfsaxWord *word,
                                   char *buf,
                                   size_t buf_len,
                                   size_t *out_len);

/**
 * Distance between two words produced by `encoder`.
 *
 * # Safety
 * All pointers must be valid; `a` and `b` must be live word handles.
 */
enum TfsaxStatus tfsax_distance(const struct TfsaxEncoder *encoder,
                                const struct TfsaxWord *a,
                                const struct TfsaxWord *b,
                                double *out);

/**
 * Euclidean distance between two arrays of `len` doubles.
 *
 * # Safety
 * `a` and `b` must point to `len` doubles; `out` must be writable.
 */
enum TfsaxStatus tfsax_euclidean(const double *a, const double *b, size_t len, double *out);

/**
 * Z-normalizes `len` values into `out` (which may alias `values`). Constant input fails with
 * `ConstantSeries` unless `zeros_on_constant` is nonzero.
 *
 * # Safety
 * `values` must point to `len` doubles and `out` to `len` writable doubles.
 */
enum TfsaxStatus tfsax_znormalize(const double *values,
                                  size_t len,
                                  int32_t zeros_on_constant,
                                  double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TFSAX_H */
