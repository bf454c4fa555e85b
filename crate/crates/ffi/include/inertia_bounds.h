#ifndef INERTIA_BOUNDS_H
#define INERTIA_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IbStatus {
  IB_STATUS_OK = 0,
  IB_STATUS_NULL_POINTER = 1,
  IB_STATUS_INVALID_UTF8 = 2,
  IB_STATUS_PARSE = 3,
  IB_STATUS_INVALID_ARGUMENT = 4,
  // The graph is not k-partially walk-regular.
  IB_STATUS_INAPPLICABLE = 5,
  // The bound has no value, e.g. a spectrum without negative eigenvalues.
  IB_STATUS_UNDEFINED = 6,
  // The instance exceeds a built-in limit.
  IB_STATUS_CAPABILITY = 7,
  IB_STATUS_INTERNAL = 8,
} IbStatus;

// Opaque graph handle.
typedef struct IbGraph IbGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one graph6 line into a new handle stored in `*out`.
//
// # Safety
// `source` must be a NUL-terminated string and `out` a writable pointer.
enum IbStatus ib_graph_from_graph6(const char *source, struct IbGraph **out);

// Parses an edge list (`n=<count>` header, then one `u v` pair per line).
//
// # Safety
// `source` must be a NUL-terminated string and `out` a writable pointer.
enum IbStatus ib_graph_from_edge_list(const char *source, struct IbGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and must not be used afterwards.
void ib_graph_free(struct IbGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t ib_graph_vertex_count(const struct IbGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t ib_graph_edge_count(const struct IbGraph *g);

// Optimized upper bound on the k-independence number.
//
// # Safety
// `g` must be a live handle and `out` a writable pointer.
enum IbStatus ib_alpha_bound(const struct IbGraph *g, size_t k, size_t *out);

// Lower bound `n / mu` on the distance-k chromatic number, as a fraction.
//
// # Safety
// `g` must be a live handle; `num` and `den` writable pointers.
enum IbStatus ib_chi_first_bound(const struct IbGraph *g, size_t k, uint64_t *num, uint64_t *den);

// Lower bound `1 + n_minus / n_plus` on the distance-k chromatic number.
// Returns `Inapplicable` unless the graph is k-partially walk-regular.
//
// # Safety
// `g` must be a live handle; `num` and `den` writable pointers.
enum IbStatus ib_chi_second_bound(const struct IbGraph *g, size_t k, uint64_t *num, uint64_t *den);

// Message for the last failure on this thread; empty after a success. The
// pointer stays valid until the next library call on this thread.
const char *ib_last_error_message(void);

// Library version as a static string.
const char *ib_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INERTIA_BOUNDS_H */
