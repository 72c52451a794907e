/* C interface for natcode. Regenerated by the build script; do not edit. */

#ifndef NATCODE_H
#define NATCODE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum natcode_status {
  /**
   * The call succeeded.
   */
  NATCODE_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  NATCODE_ERR_NULL = 1,
  /**
   * An argument failed to parse (number, selector name, s-expression).
   */
  NATCODE_ERR_PARSE = 2,
  /**
   * The arguments were outside the function's domain.
   */
  NATCODE_ERR_DOMAIN = 3,
} natcode_status;

/**
 * Opaque handle to a tupling function ℕ^d → ℕ.
 */
typedef struct natcode_tupling natcode_tupling;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable description of the most recent failure on this thread.
 * The pointer stays valid until the next failing call on the same thread;
 * do not free it.
 */
const char *natcode_last_error_message(void);

/**
 * Create a tupling function from a selector name (`cantor`,
 * `cantor-swapped`, `cantor-positive`, `rs`, `skolem`, `chowla`, `dyadic`,
 * `fold-cantor`, `fold-rs`) and a dimension.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` must be valid for a
 * single pointer write. On success `*out` owns the handle.
 */
enum natcode_status natcode_tupling_new(const char *name, size_t dim, struct natcode_tupling **out);

/**
 * Release a handle created by `natcode_tupling_new`. NULL is a no-op.
 *
 * # Safety
 * `t` must be a pointer returned by `natcode_tupling_new` that has not
 * been freed already, or NULL.
 */
void natcode_tupling_free(struct natcode_tupling *t);

/**
 * Number of coordinates the function takes; 0 for NULL.
 *
 * # Safety
 * `t` must be a live handle or NULL.
 */
size_t natcode_tupling_dim(const struct natcode_tupling *t);

/**
 * Encode `len` decimal coordinates into a single decimal code.
 *
 * # Safety
 * `t` must be a live handle; `coords` must point to `len` valid strings;
 * `out` must be valid for a single pointer write.
 */
enum natcode_status natcode_encode(const struct natcode_tupling *t,
                                   const char *const *coords,
                                   size_t len,
                                   char **out);

/**
 * Decode a decimal code into space-separated decimal coordinates.
 *
 * # Safety
 * `t` must be a live handle; `code` a valid string; `out` valid for a
 * single pointer write.
 */
enum natcode_status natcode_decode(const struct natcode_tupling *t, const char *code, char **out);

/**
 * Print the tree at a decimal index as an s-expression like `((o o) o)`.
 * `pairing_name` is one of `cantor`, `cantor-swapped`, `rs`, `dyadic`.
 *
 * # Safety
 * String arguments must be valid; `out` valid for a single pointer write.
 */
enum natcode_status natcode_tree_unrank(const char *pairing_name, const char *n, char **out);

/**
 * Parse an s-expression and print its decimal index.
 *
 * # Safety
 * String arguments must be valid; `out` valid for a single pointer write.
 */
enum natcode_status natcode_tree_rank(const char *pairing_name, const char *tree, char **out);

/**
 * Print the sequence at a decimal index, comma-separated (empty string for
 * the empty sequence). `scheme` is `xi` or `zeta`; `family_name` selects
 * the zeta tupling family (`rs` or `fold-cantor`; NULL means `rs`) and is
 * ignored by xi.
 *
 * # Safety
 * String arguments must be valid (`family_name` may be NULL); `out` valid
 * for a single pointer write.
 */
enum natcode_status natcode_seq_unrank(const char *scheme,
                                       const char *pairing_name,
                                       const char *family_name,
                                       const char *n,
                                       char **out);

/**
 * Read a comma-separated sequence (empty string for ()) and print its
 * decimal index. Arguments as for `natcode_seq_unrank`.
 *
 * # Safety
 * String arguments must be valid (`family_name` may be NULL); `out` valid
 * for a single pointer write.
 */
enum natcode_status natcode_seq_rank(const char *scheme,
                                     const char *pairing_name,
                                     const char *family_name,
                                     const char *seq,
                                     char **out);

/**
 * Run the self-check suite over a code/rank prefix and return the number
 * of failed properties (0 means everything passed).
 */
uint64_t natcode_verify(uint64_t limit);

/**
 * Release a string returned through an `out` parameter. NULL is a no-op.
 *
 * # Safety
 * `s` must be a string returned by this library that has not been freed
 * already, or NULL.
 */
void natcode_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NATCODE_H */
