#ifndef BIRKHOFF_H
#define BIRKHOFF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum BkStatus {
  BK_STATUS_OK = 0,
  BK_STATUS_NULL_POINTER = 1,
  BK_STATUS_INVALID_ARGUMENT = 2,
  BK_STATUS_PARSE_ERROR = 3,
  BK_STATUS_NOT_INDEPENDENT = 4,
  BK_STATUS_BUDGET_EXCEEDED = 5,
  BK_STATUS_UNSUPPORTED = 6,
  BK_STATUS_INTERNAL = 7,
} BkStatus;

/**
 * Opaque set of permutations of one degree.
 */
typedef struct BkPermSet BkPermSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call on the same thread.
 */
const char *bk_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bk_string_free(char *s);

/**
 * An empty set of degree `degree`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_permset_new(size_t degree, struct BkPermSet **out);

/**
 * Parses a set from its JSON document (`degree` and `elements`).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum BkStatus bk_permset_from_json(const char *json, struct BkPermSet **out);

/**
 * Releases a set handle. NULL is ignored.
 *
 * # Safety
 * `set` must come from this library and not be freed twice.
 */
void bk_permset_free(struct BkPermSet *set);

/**
 * Adds a permutation in cycle notation; `inserted` is false for a
 * duplicate.
 *
 * # Safety
 * `set` must be a live handle, `cycles` NUL-terminated, `inserted`
 * writable or NULL.
 */
enum BkStatus bk_permset_insert(struct BkPermSet *set, const char *cycles, bool *inserted);

/**
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_permset_len(const struct BkPermSet *set, size_t *out);

/**
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_permset_degree(const struct BkPermSet *set, size_t *out);

/**
 * Element `index` in cycle notation; free with [`bk_string_free`].
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_permset_element(const struct BkPermSet *set, size_t index, char **out);

/**
 * The set as a JSON document; free with [`bk_string_free`].
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_permset_to_json(const struct BkPermSet *set, char **out);

/**
 * Whether two permutations of degree `degree` are adjacent.
 *
 * # Safety
 * `a` and `b` must be NUL-terminated and `out` writable.
 */
enum BkStatus bk_adjacent(size_t degree, const char *a, const char *b, bool *out);

/**
 * Pairwise check; sets above 5000 elements are sampled.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_verify_clique(const struct BkPermSet *set, bool *out);

/**
 * Pairwise check; sets above 5000 elements are sampled.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_verify_independent(const struct BkPermSet *set, bool *out);

/**
 * Whether the independent set cannot be enlarged within `Sym(ambient)`.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_is_maximal_independent(const struct BkPermSet *set, size_t ambient, bool *out);

/**
 * Whether the clique cannot be enlarged within `Sym(ambient)`.
 *
 * # Safety
 * `set` must be a live handle and `out` writable.
 */
enum BkStatus bk_is_maximal_clique(const struct BkPermSet *set, size_t ambient, bool *out);

/**
 * The even independent set of size `g(n)` on `n` points.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_build_g_set(size_t n, struct BkPermSet **out);

/**
 * The independent subgroup stabilizing the pairing `{j, j + n/2}` with
 * even swap count, for even `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_pairing_subgroup(size_t n, struct BkPermSet **out);

/**
 * The identity with the transposition and 3-cycle stars through point `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_star_clique(size_t n, struct BkPermSet **out);

/**
 * Lower bounds for `α(n)` as JSON with decimal-string values; free with
 * [`bk_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum BkStatus bk_bounds_json(size_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIRKHOFF_H */
