#ifndef GRIDPALF_H
#define GRIDPALF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define GRIDPALF_OK 0

#define GRIDPALF_ERR_NULL -1

#define GRIDPALF_ERR_UTF8 -2

#define GRIDPALF_ERR_PARSE -3

#define GRIDPALF_ERR_CONSTRUCT -4

#define GRIDPALF_ERR_BAD_ARG -5

/**
 * Opaque grid diagram handle.
 */
typedef struct GridHandle GridHandle;

/**
 * Opaque fibration handle.
 */
typedef struct PalfHandle PalfHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a grid file. On success stores a new handle in `out` and returns
 * `GRIDPALF_OK`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int gridpalf_grid_parse(const char *text, struct GridHandle **out);

/**
 * # Safety
 * `grid` must come from [`gridpalf_grid_parse`] and not have been freed.
 */
void gridpalf_grid_free(struct GridHandle *grid);

/**
 * Total writhe of the diagram.
 *
 * # Safety
 * `grid` must be a live handle.
 */
int64_t gridpalf_grid_writhe(const struct GridHandle *grid);

/**
 * Thurston-Bennequin number of one component, or `i64::MIN` on a bad index.
 *
 * # Safety
 * `grid` must be a live handle.
 */
int64_t gridpalf_grid_tb(const struct GridHandle *grid, uintptr_t component);

/**
 * Construct the fibration: `strategy` 0 = comb, 1 = flex, 2 = rtl.
 *
 * # Safety
 * `grid` must be a live handle and `out` a valid pointer.
 */
int gridpalf_construct(const struct GridHandle *grid,
                       int strategy,
                       bool include_c0,
                       struct PalfHandle **out);

/**
 * # Safety
 * `palf` must come from [`gridpalf_construct`] and not have been freed.
 */
void gridpalf_palf_free(struct PalfHandle *palf);

/**
 * Number of 1-handles of the regular fiber.
 *
 * # Safety
 * `palf` must be a live handle.
 */
uintptr_t gridpalf_fiber_handles(const struct PalfHandle *palf);

/**
 * Boundary components of the regular fiber.
 *
 * # Safety
 * `palf` must be a live handle.
 */
uintptr_t gridpalf_fiber_boundary_components(const struct PalfHandle *palf);

/**
 * Genus of the regular fiber.
 *
 * # Safety
 * `palf` must be a live handle.
 */
int64_t gridpalf_fiber_genus(const struct PalfHandle *palf);

/**
 * Copy the cyclic boundary word into `buf` (capacity `cap` labels);
 * returns the word length, or a negative error code.
 *
 * # Safety
 * `palf` must be a live handle; `buf` must point to at least `cap` u32s.
 */
int gridpalf_boundary_word(const struct PalfHandle *palf, uint32_t *buf, uintptr_t cap);

/**
 * Full JSON report for a constructed fibration, as a newly allocated
 * string. Free with [`gridpalf_string_free`]. Returns NULL on error.
 *
 * # Safety
 * Both handles must be live.
 */
char *gridpalf_report_json(const struct GridHandle *grid, const struct PalfHandle *palf);

/**
 * # Safety
 * `s` must be a string returned by this library, not yet freed.
 */
void gridpalf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRIDPALF_H */
