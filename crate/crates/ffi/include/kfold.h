#ifndef KFOLD_H
#define KFOLD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum KfoldFamilyKind {
  KFOLD_FAMILY_KIND_WEB = 0,
  KFOLD_FAMILY_KIND_ANTIWEB = 1,
} KfoldFamilyKind;

/**
 * Result codes shared by every fallible function.
 */
typedef enum KfoldStatus {
  KFOLD_STATUS_OK = 0,
  /**
   * `p ≥ 1`, `n ≥ 2p` or `k ≥ 1` violated, or `k·n` too large to represent.
   */
  KFOLD_STATUS_INVALID_PARAMETERS = 1,
  /**
   * The instance exceeds a size limit.
   */
  KFOLD_STATUS_TOO_LARGE = 2,
  /**
   * A required pointer argument was null.
   */
  KFOLD_STATUS_NULL_POINTER = 3,
  /**
   * A class index past the last color.
   */
  KFOLD_STATUS_OUT_OF_RANGE = 4,
  /**
   * The output buffer is too small; the required length was written.
   */
  KFOLD_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * Internal error, including caught panics.
   */
  KFOLD_STATUS_INTERNAL = 6,
} KfoldStatus;

/**
 * Opaque k-fold coloring together with the parameters it colors.
 */
typedef struct KfoldColoring KfoldColoring;

/**
 * Opaque web or antiweb parameters.
 */
typedef struct KfoldFamily KfoldFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null if none.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *kfold_last_error(void);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum KfoldStatus kfold_family_new(enum KfoldFamilyKind kind,
                                  int64_t n,
                                  int64_t p,
                                  struct KfoldFamily **out);

/**
 * # Safety
 * `family` must come from `kfold_family_new` and not be freed twice. Null is ignored.
 */
void kfold_family_free(struct KfoldFamily *family);

/**
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_alpha(const struct KfoldFamily *family, int64_t *out);

/**
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_omega(const struct KfoldFamily *family, int64_t *out);

/**
 * `χ_k` of the graph.
 *
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_chi_k(const struct KfoldFamily *family, int64_t k, int64_t *out);

/**
 * `χ_k` after deleting any one vertex.
 *
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_chi_k_minus_v(const struct KfoldFamily *family, int64_t k, int64_t *out);

/**
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_is_critical(const struct KfoldFamily *family, int64_t k, bool *out);

/**
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_is_chistar_critical(const struct KfoldFamily *family, bool *out);

/**
 * Builds an optimal k-fold coloring.
 *
 * # Safety
 * `family` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_coloring_new(const struct KfoldFamily *family,
                                    int64_t k,
                                    struct KfoldColoring **out);

/**
 * # Safety
 * `coloring` must come from `kfold_coloring_new` and not be freed twice. Null is ignored.
 */
void kfold_coloring_free(struct KfoldColoring *coloring);

/**
 * Number of colors `x`.
 *
 * # Safety
 * `coloring` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_coloring_num_colors(const struct KfoldColoring *coloring, uintptr_t *out);

/**
 * Copies the vertices of color class `index` into `buf`.
 *
 * `*len` is set to the class size. If it exceeds `capacity`, nothing is
 * copied and `BufferTooSmall` is returned; `buf` may be null to query.
 *
 * # Safety
 * `coloring` must be a live handle, `len` valid for writes and `buf`
 * valid for `capacity` writes when non-null.
 */
enum KfoldStatus kfold_coloring_class(const struct KfoldColoring *coloring,
                                      uintptr_t index,
                                      uintptr_t *buf,
                                      uintptr_t capacity,
                                      uintptr_t *len);

/**
 * The coloring as a JSON document, as printed by `kfold color --json`.
 * Release the string with `kfold_string_free`.
 *
 * # Safety
 * `coloring` must be a live handle and `out` valid for writes.
 */
enum KfoldStatus kfold_coloring_to_json(const struct KfoldColoring *coloring, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void kfold_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KFOLD_H */
