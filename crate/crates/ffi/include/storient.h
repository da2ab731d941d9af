/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef STORIENT_H
#define STORIENT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define ST_MODE_SEMI_TRANSITIVE 0

#define ST_MODE_TRANSITIVE 1

#define ST_PRODUCT_CARTESIAN 0

#define ST_PRODUCT_TENSOR 1

#define ST_PRODUCT_LEXICOGRAPHIC 2

#define ST_PRODUCT_STRONG 3

#define ST_TRANSFORM_TO_EMPTY 0

#define ST_TRANSFORM_TO_COMPLETE 1

#define ST_TRANSFORM_TO_MATCHING 2

/**
 * `st_decide` verdicts.
 */
#define ST_VERDICT_ORIENTABLE 1

#define ST_VERDICT_NOT_ORIENTABLE 0

#define ST_VERDICT_FILTERED 2

typedef enum StStatus {
  ST_STATUS_OK = 0,
  ST_STATUS_NULL_POINTER = 1,
  ST_STATUS_INVALID_UTF8 = 2,
  ST_STATUS_FORMAT = 3,
  ST_STATUS_UNSUPPORTED_SIZE = 4,
  ST_STATUS_ARGUMENT = 5,
  ST_STATUS_PRECONDITION = 6,
  ST_STATUS_RESOURCE = 7,
  ST_STATUS_INTERNAL = 8,
} StStatus;

/**
 * Opaque undirected graph.
 */
typedef struct StGraph StGraph;

/**
 * Opaque orientation; carries its underlying graph.
 */
typedef struct StOrientation StOrientation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *st_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void st_string_free(char *s);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum StStatus st_graph_from_graph6(const char *text, struct StGraph **out);

/**
 * Named graph such as `W5`, `C7`, `K2,3`, `diamond`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum StStatus st_graph_from_name(const char *name, struct StGraph **out);

/**
 * # Safety
 * `g` must be a live handle or null.
 */
void st_graph_free(struct StGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum StStatus st_graph_to_graph6(const struct StGraph *g, char **out);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t st_graph_order(const struct StGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t st_graph_edge_count(const struct StGraph *g);

/**
 * Decides orientability. `verdict` receives one of the `ST_VERDICT_*`
 * values; `filtered_vertex` (optional) receives the filter vertex or -1;
 * `witness` (optional) receives an orientation when one was found, else null.
 *
 * # Safety
 * `g` must be a live handle; non-null out-pointers must be writable.
 */
enum StStatus st_decide(const struct StGraph *g,
                        uint32_t mode,
                        int32_t *verdict,
                        int64_t *filtered_vertex,
                        struct StOrientation **witness);

/**
 * Parses digraph text (`n=<k>` then `u->v` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum StStatus st_orientation_from_text(const char *text, struct StOrientation **out);

/**
 * # Safety
 * `o` must be a live handle; `out` must be writable.
 */
enum StStatus st_orientation_to_text(const struct StOrientation *o, char **out);

/**
 * Copy of the orientation's underlying graph.
 *
 * # Safety
 * `o` must be a live handle; `out` must be writable.
 */
enum StStatus st_orientation_graph(const struct StOrientation *o, struct StGraph **out);

/**
 * # Safety
 * `o` must be a live handle; `result` must be writable.
 */
enum StStatus st_orientation_is_semi_transitive(const struct StOrientation *o, bool *result);

/**
 * # Safety
 * `o` must be a live handle or null.
 */
void st_orientation_free(struct StOrientation *o);

/**
 * # Safety
 * `g` and `h` must be live handles; `out` must be writable.
 */
enum StStatus st_product(const struct StGraph *g,
                         const struct StGraph *h,
                         uint32_t kind,
                         struct StGraph **out);

/**
 * Adds the ends of every simple 3-edge path as an edge.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum StStatus st_blowup(const struct StGraph *g, struct StGraph **out);

/**
 * Alternation graph of a UTF-8 word; vertices are its sorted letters.
 *
 * # Safety
 * `word` must be a nul-terminated string; `out` must be writable.
 */
enum StStatus st_word_graph(const char *word, struct StGraph **out);

/**
 * Runs a pipeline from `o` and returns the trace JSON.
 *
 * # Safety
 * `o` must be a live handle; `out` must be writable.
 */
enum StStatus st_transform_json(const struct StOrientation *o, uint32_t mode, char **out);

/**
 * Census report JSON for `n <= 7` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum StStatus st_census_json(uint32_t n, bool connected_only, uint32_t workers, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STORIENT_H */
