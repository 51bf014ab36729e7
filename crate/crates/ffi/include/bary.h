#ifndef BARY_H
#define BARY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Values accepted by the `method` argument of [`bary_count`].
 */
typedef enum BaryCountMethod {
  BARY_COUNT_METHOD_RECURRENCE = 0,
  BARY_COUNT_METHOD_SUM = 1,
  BARY_COUNT_METHOD_PI = 2,
  BARY_COUNT_METHOD_ORACLE = 3,
} BaryCountMethod;

typedef enum BaryStatus {
  BARY_STATUS_OK = 0,
  BARY_STATUS_NULL_POINTER = 1,
  BARY_STATUS_INVALID_BASIS = 2,
  BARY_STATUS_INVALID_ARGUMENT = 3,
  BARY_STATUS_INVALID_PARTITION = 4,
  BARY_STATUS_CAP_EXCEEDED = 5,
  BARY_STATUS_OVERFLOW = 6,
  BARY_STATUS_OUT_OF_RANGE = 7,
  BARY_STATUS_BUFFER_TOO_SMALL = 8,
  BARY_STATUS_PANIC = 9,
} BaryStatus;

/**
 * Covering diagram of the lattice of partitions of n.
 */
typedef struct BaryHasse BaryHasse;

/**
 * Partitions of n in enumeration-tree level order.
 */
typedef struct BaryPartitionList BaryPartitionList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bary_last_error(void);

/**
 * Static description of a status code.
 */
const char *bary_status_str(enum BaryStatus status);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bary_string_free(char *s);

/**
 * Number of partitions of `n` in base `base`, as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaryStatus bary_count(uint64_t base, uint64_t n, uint32_t method, char **out);

/**
 * Number of partitions of `n` with exactly `parts` parts, the last one nonzero.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaryStatus bary_count_exact_parts(uint64_t base, uint64_t n, uint32_t parts, char **out);

/**
 * Exponent of the largest power of `base` dividing `i` (`i > 0`).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaryStatus bary_carry(uint64_t i, uint64_t base, uint32_t *out);

/**
 * Builds the covering diagram of partitions of `n`. `incremental` selects
 * the stage-by-stage construction; both give identical diagrams. `cap`
 * bounds the node count.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaryStatus bary_hasse_build(uint64_t base,
                                 uint64_t n,
                                 bool incremental,
                                 size_t cap,
                                 struct BaryHasse **out);

/**
 * # Safety
 * `h` must come from [`bary_hasse_build`] and not have been freed. NULL is ignored.
 */
void bary_hasse_free(struct BaryHasse *h);

/**
 * Node count, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t bary_hasse_node_count(const struct BaryHasse *h);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t bary_hasse_edge_count(const struct BaryHasse *h);

/**
 * Copies the parts of node `index` into `out`.
 *
 * # Safety
 * `h` must be a live handle, `out` must hold `capacity` values, `out_len` must be valid.
 */
enum BaryStatus bary_hasse_node(const struct BaryHasse *h,
                                size_t index,
                                uint64_t *out,
                                size_t capacity,
                                size_t *out_len);

/**
 * Reads edge `index`: `source` covers `target`, reached by firing `position`.
 *
 * # Safety
 * `h` must be a live handle and the out-pointers valid.
 */
enum BaryStatus bary_hasse_edge(const struct BaryHasse *h,
                                size_t index,
                                size_t *source,
                                size_t *target,
                                size_t *position);

/**
 * Node index of a partition, or `BARY_STATUS_OUT_OF_RANGE` if absent.
 *
 * # Safety
 * `h` must be a live handle, `parts` must hold `len` values.
 */
enum BaryStatus bary_hasse_index_of(const struct BaryHasse *h,
                                    const uint64_t *parts,
                                    size_t len,
                                    size_t *out);

/**
 * JSON document `{"basis","n","nodes","edges"}`.
 *
 * # Safety
 * `h` must be a live handle and `out` valid.
 */
enum BaryStatus bary_hasse_to_json(const struct BaryHasse *h, char **out);

/**
 * Graphviz DOT rendering.
 *
 * # Safety
 * `h` must be a live handle and `out` valid.
 */
enum BaryStatus bary_hasse_to_dot(const struct BaryHasse *h, char **out);

/**
 * Enumerates the partitions of `n`, stopping with `BARY_STATUS_CAP_EXCEEDED`
 * past `cap` of them.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaryStatus bary_enumerate(uint64_t base,
                               uint64_t n,
                               size_t cap,
                               struct BaryPartitionList **out);

/**
 * # Safety
 * `list` must come from [`bary_enumerate`] and not have been freed. NULL is ignored.
 */
void bary_list_free(struct BaryPartitionList *list);

/**
 * Number of partitions, or 0 for NULL.
 *
 * # Safety
 * `list` must be NULL or a live handle.
 */
size_t bary_list_len(const struct BaryPartitionList *list);

/**
 * Copies the parts of entry `index` into `out`.
 *
 * # Safety
 * `list` must be a live handle, `out` must hold `capacity` values, `out_len` must be valid.
 */
enum BaryStatus bary_list_get(const struct BaryPartitionList *list,
                              size_t index,
                              uint64_t *out,
                              size_t capacity,
                              size_t *out_len);

/**
 * Whether P lies below Q, i.e. P is reachable from Q by firings.
 *
 * # Safety
 * `p`/`q` must hold `p_len`/`q_len` values and `out` must be valid.
 */
enum BaryStatus bary_leq(uint64_t base,
                         uint64_t n,
                         const uint64_t *p,
                         size_t p_len,
                         const uint64_t *q,
                         size_t q_len,
                         bool *out);

/**
 * Least upper bound of P and Q, written into `out`.
 *
 * # Safety
 * `p`/`q` must hold `p_len`/`q_len` values, `out` must hold `capacity`
 * values and `out_len` must be valid.
 */
enum BaryStatus bary_join(uint64_t base,
                          uint64_t n,
                          const uint64_t *p,
                          size_t p_len,
                          const uint64_t *q,
                          size_t q_len,
                          uint64_t *out,
                          size_t capacity,
                          size_t *out_len);

/**
 * Greatest lower bound of P and Q, written into `out`.
 *
 * # Safety
 * Same as [`bary_join`].
 */
enum BaryStatus bary_meet(uint64_t base,
                          uint64_t n,
                          const uint64_t *p,
                          size_t p_len,
                          const uint64_t *q,
                          size_t q_len,
                          uint64_t *out,
                          size_t capacity,
                          size_t *out_len);

/**
 * Shot vector of P: how often each position fires on the way from `(n)`.
 *
 * # Safety
 * `p` must hold `p_len` values, `out` must hold `capacity` values and
 * `out_len` must be valid.
 */
enum BaryStatus bary_shots(uint64_t base,
                           uint64_t n,
                           const uint64_t *p,
                           size_t p_len,
                           uint64_t *out,
                           size_t capacity,
                           size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BARY_H */
