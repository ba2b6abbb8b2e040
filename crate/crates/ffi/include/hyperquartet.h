#ifndef HYPERQUARTET_H
#define HYPERQUARTET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HqStatus {
  HQ_STATUS_OK = 0,
  HQ_STATUS_NULL_POINTER = 1,
  HQ_STATUS_PARSE = 2,
  HQ_STATUS_SHAPE = 3,
  HQ_STATUS_RESOURCE = 4,
  HQ_STATUS_PRECONDITION = 5,
  HQ_STATUS_INVALID = 6,
  HQ_STATUS_UTF8 = 7,
  HQ_STATUS_PANIC = 8,
} HqStatus;

typedef enum HqInvolution {
  HQ_INVOLUTION_ID = 0,
  HQ_INVOLUTION_DUAL = 1,
  HQ_INVOLUTION_COMPLEMENT = 2,
  HQ_INVOLUTION_DUAL_COMPLEMENT = 3,
} HqInvolution;

/**
 * Opaque hypergraph.
 */
typedef struct HqHypergraph HqHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *hq_last_error(void);

/**
 * Parses HGX text (matrix or JSON form).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum HqStatus hq_hypergraph_parse(const char *text, struct HqHypergraph **out);

/**
 * Builds a hypergraph from `m` row bitmasks over `n` vertices.
 *
 * # Safety
 * `rows` must point to `m` readable values (or be null when `m = 0`).
 */
enum HqStatus hq_hypergraph_from_rows(size_t n,
                                      const uint64_t *rows,
                                      size_t m,
                                      struct HqHypergraph **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void hq_hypergraph_free(struct HqHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; `m` and `n` must be writable.
 */
enum HqStatus hq_hypergraph_shape(const struct HqHypergraph *h, size_t *m, size_t *n);

/**
 * Copies the row bitmasks into `rows`, which holds `capacity` values.
 *
 * # Safety
 * `h` must be a live handle; `rows` must have room for `capacity` values.
 */
enum HqStatus hq_hypergraph_rows(const struct HqHypergraph *h, uint64_t *rows, size_t capacity);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_hypergraph_derive(const struct HqHypergraph *h,
                                   enum HqInvolution op,
                                   struct HqHypergraph **out);

/**
 * # Safety
 * `a` and `b` must be live handles.
 */
enum HqStatus hq_hypergraph_isomorphic(const struct HqHypergraph *a,
                                       const struct HqHypergraph *b,
                                       bool *out);

/**
 * HGX matrix text.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_hypergraph_to_hgx(const struct HqHypergraph *h, char **out);

/**
 * Hex canonical key.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_canonical_key(const struct HqHypergraph *h, char **out);

/**
 * Quartet JSON with keys `chi…` or, for `rainbow`, `rainbow…`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_quartet_json(const struct HqHypergraph *h, bool rainbow, char **out);

/**
 * Coproduct `kind` (e.g. `"Delta-cd"`) as JSON terms.
 *
 * # Safety
 * `h` must be a live handle; `kind` nul-terminated; `out` writable.
 */
enum HqStatus hq_coproduct_json(const struct HqHypergraph *h, const char *kind, char **out);

/**
 * Colorings with `k` colors; `HQ_STATUS_RESOURCE` if the count exceeds 64 bits.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_count_colorings(const struct HqHypergraph *h,
                                 uint64_t k,
                                 bool rainbow,
                                 uint64_t *out);

/**
 * Runs every law suite; writes the JSON report and whether all laws held.
 *
 * # Safety
 * `report` and `passed` must be writable.
 */
enum HqStatus hq_laws_run(size_t max_edges,
                          size_t max_vertices,
                          size_t samples,
                          uint64_t seed,
                          char **report,
                          bool *passed);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERQUARTET_H */
