/* C interface of the tsax library. Regenerate with cbindgen. */

#ifndef TSAX_H
#define TSAX_H

/* Generated by cbindgen from crates/tsax-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of a C API call.
typedef enum TsaxStatus {
  TSAX_STATUS_OK = 0,
  // A required pointer argument was null.
  TSAX_STATUS_NULL_POINTER = 1,
  // Input data violates a precondition (empty, non-finite, too short).
  TSAX_STATUS_INVALID_INPUT = 2,
  // A configuration value is out of range.
  TSAX_STATUS_INVALID_PARAMETER = 3,
  // The two representations cannot be compared.
  TSAX_STATUS_INCOMPATIBLE = 4,
  // The destination buffer is too small.
  TSAX_STATUS_BUFFER_TOO_SMALL = 5,
  // Serialized bytes are corrupt or truncated.
  TSAX_STATUS_DECODE_ERROR = 6,
} TsaxStatus;

// Opaque representation handle.
typedef struct TsaxRepr TsaxRepr;

// Opaque breakpoint table handle.
typedef struct TsaxTable TsaxTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the breakpoint table for an alphabet of `alpha` symbols
// (2 <= alpha <= 20) and stores the new handle in `out`.
//
// # Safety
//
// `out` must be a valid pointer. The handle must be released with
// [`tsax_table_free`].
enum TsaxStatus tsax_table_new(uint32_t alpha, struct TsaxTable **out);

// Releases a table handle. A null handle is ignored.
//
// # Safety
//
// `table` must come from [`tsax_table_new`] and not be used afterwards.
void tsax_table_free(struct TsaxTable *table);

// Number of symbols the table was built for.
//
// # Safety
//
// `table` must be a valid table handle.
uint32_t tsax_table_alpha(const struct TsaxTable *table);

// Transforms `len` measurements into a symbol-plus-trend representation
// with `segments` segments and stores the new handle in `out`.
//
// # Safety
//
// `values` must point to `len` readable doubles; `table` and `out` must be
// valid. The handle must be released with [`tsax_repr_free`].
enum TsaxStatus tsax_repr_new(const double *values,
                              size_t len,
                              size_t segments,
                              const struct TsaxTable *table,
                              struct TsaxRepr **out);

// Releases a representation handle. A null handle is ignored.
//
// # Safety
//
// `repr` must come from this library and not be used afterwards.
void tsax_repr_free(struct TsaxRepr *repr);

// Number of segments (symbols and trend bits).
//
// # Safety
//
// `repr` must be a valid representation handle.
size_t tsax_repr_segment_count(const struct TsaxRepr *repr);

// Length of the series the representation was built from.
//
// # Safety
//
// `repr` must be a valid representation handle.
size_t tsax_repr_series_len(const struct TsaxRepr *repr);

// Copies the symbol indices (one byte per segment, values below alpha)
// into `buf`.
//
// # Safety
//
// `repr` must be valid and `buf` writable for `cap` bytes.
enum TsaxStatus tsax_repr_symbols(const struct TsaxRepr *repr, uint8_t *buf, size_t cap);

// Copies the trends (one byte per segment, 1 = upward) into `buf`.
//
// # Safety
//
// `repr` must be valid and `buf` writable for `cap` bytes.
enum TsaxStatus tsax_repr_trends(const struct TsaxRepr *repr, uint8_t *buf, size_t cap);

// Lower-bounding word distance between two representations.
//
// # Safety
//
// All handles and `out` must be valid pointers.
enum TsaxStatus tsax_mindist(const struct TsaxRepr *a,
                             const struct TsaxRepr *b,
                             const struct TsaxTable *table,
                             double *out);

// Trend-aware distance between two representations. `rew` weights matching
// trend pairs (normally negative), `pen` opposing ones. The result may be
// negative: it is a ranking score, not a metric.
//
// # Safety
//
// All handles and `out` must be valid pointers.
enum TsaxStatus tsax_dist(const struct TsaxRepr *a,
                          const struct TsaxRepr *b,
                          const struct TsaxTable *table,
                          double rew,
                          double pen,
                          double *out);

// Serializes a representation into `buf`. On success `*written` holds the
// byte count; with a too-small buffer it holds the required size and the
// call returns `BufferTooSmall`.
//
// # Safety
//
// `repr` and `written` must be valid; `buf` must be writable for `cap`
// bytes (it may be null when `cap` is 0, to query the size).
enum TsaxStatus tsax_repr_to_bytes(const struct TsaxRepr *repr,
                                   uint8_t *buf,
                                   size_t cap,
                                   size_t *written);

// Deserializes a representation previously written by
// [`tsax_repr_to_bytes`] and stores the new handle in `out`.
//
// # Safety
//
// `bytes` must point to `len` readable bytes; `out` must be valid. The
// handle must be released with [`tsax_repr_free`].
enum TsaxStatus tsax_repr_from_bytes(const uint8_t *bytes, size_t len, struct TsaxRepr **out);

// Static description of a status code.
const char *tsax_status_message(enum TsaxStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TSAX_H */
