#ifndef BICOLOR_H
#define BICOLOR_H

/* Generated from src/lib.rs by the build script; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The call succeeded.
 */
#define BICOLOR_OK 0

/**
 * The examined object violates its contract; the output document holds the report.
 */
#define BICOLOR_FINDINGS 1

/**
 * The input was rejected; `bicolor_last_error` explains why.
 */
#define BICOLOR_INVALID 2

/**
 * Something failed internally; `bicolor_last_error` explains why.
 */
#define BICOLOR_INTERNAL 3

/**
 * The folded great-circle graph with its vertex aliases. Opaque.
 */
typedef struct bicolor_folded bicolor_folded;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the folded graph from the shipped tables (errata applied) and
 * writes the new handle to `out`.
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
int32_t bicolor_folded_new(struct bicolor_folded **out);

/**
 * Releases a handle from `bicolor_folded_new`. Null is a no-op.
 *
 * # Safety
 * `g` must be null or a pointer from `bicolor_folded_new`, not yet freed.
 */
void bicolor_folded_free(struct bicolor_folded *g);

/**
 * Writes the exact number of solutions to `out` — the full space counts
 * 3685171200, the 1/3/5-pinned family 6. Runs in milliseconds; this is
 * the right call for totals, enumeration is not.
 *
 * # Safety
 * `g` as for `bicolor_folded_free`; `out` must point to writable storage.
 */
int32_t bicolor_count_solutions(const struct bicolor_folded *g, bool fix_135, uint64_t *out);

/**
 * Enumerates solutions and writes a JSON document `{"count", "solutions"}`
 * to `out`. `limit` caps the stream (0 = no cap — with `fix_135` false
 * that means billions of rows; cap it or use `bicolor_count_solutions`).
 *
 * # Safety
 * `g` as for `bicolor_folded_free`; `out` receives a string to release
 * with `bicolor_string_free`.
 */
int32_t bicolor_solve_json(const struct bicolor_folded *g,
                           bool fix_135,
                           bool reversible_only,
                           size_t limit,
                           char **out);

/**
 * Checks a solution document and writes
 * `{"ok", "distribution_reversible", "violations"}` to `out`. Returns 0
 * for a valid solution, 1 when the report is nonempty.
 *
 * # Safety
 * `g` as for `bicolor_folded_free`; `solution_json` must be a
 * NUL-terminated string; `out` as for `bicolor_solve_json`.
 */
int32_t bicolor_verify_json(const struct bicolor_folded *g, const char *solution_json, char **out);

/**
 * Writes the per-level piece table of a valid solution to `out` as CSV
 * (rows the seven pairs, columns the five levels). Returns 1 and the
 * violation report instead when the solution fails verification.
 *
 * # Safety
 * As for `bicolor_verify_json`.
 */
int32_t bicolor_level_table_csv(const struct bicolor_folded *g,
                                const char *solution_json,
                                char **out);

/**
 * Maps one shipped solution table ("ss4", "ss5a" or "ss5b") onto the
 * graph and writes `{"source", "assigned", "open", "violations"}` to
 * `out`. Returns 1 when the table contradicts the graph anywhere — every
 * shipped table does.
 *
 * # Safety
 * `g` as for `bicolor_folded_free`; `label` must be a NUL-terminated
 * string; `out` as for `bicolor_solve_json`.
 */
int32_t bicolor_import_json(const struct bicolor_folded *g, const char *label, char **out);

/**
 * The message of the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bicolor_last_error(void);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string pointer this library handed out, not yet
 * freed.
 */
void bicolor_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOLOR_H */
