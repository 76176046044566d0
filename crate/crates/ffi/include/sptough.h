#ifndef SPTOUGH_H
#define SPTOUGH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SptStatus {
  SPT_STATUS_OK = 0,
  SPT_STATUS_NULL_POINTER = 1,
  SPT_STATUS_INVALID_UTF8 = 2,
  SPT_STATUS_SYNTAX = 3,
  SPT_STATUS_INVALID_INPUT = 4,
  SPT_STATUS_CAPACITY = 5,
  SPT_STATUS_NOT_SERIES_PARALLEL = 6,
  SPT_STATUS_DISCONNECTED = 7,
  SPT_STATUS_DOMAIN = 8,
  SPT_STATUS_BUFFER_TOO_SMALL = 9,
  SPT_STATUS_PANIC = 10,
} SptStatus;

typedef enum SptToughnessKind {
  SPT_TOUGHNESS_KIND_ZERO = 0,
  SPT_TOUGHNESS_KIND_FINITE = 1,
  SPT_TOUGHNESS_KIND_INFINITE = 2,
} SptToughnessKind;

typedef enum SptVerdict {
  SPT_VERDICT_MINIMALLY_TOUGH = 0,
  SPT_VERDICT_NOT_MINIMALLY_TOUGH = 1,
  SPT_VERDICT_OUT_OF_SCOPE = 2,
  SPT_VERDICT_NOT_APPLICABLE = 3,
} SptVerdict;

/*
 Opaque multigraph.
 */
typedef struct SptGraph SptGraph;

/*
 Opaque sp-tree.
 */
typedef struct SptTree SptTree;

/*
 Toughness as `numer / denom` when finite; `0/1` otherwise.
 */
typedef struct SptToughness {
  enum SptToughnessKind kind;
  uint64_t numer;
  uint64_t denom;
} SptToughness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. Valid until
 the next call into the library from the same thread.
 */
const char *spt_last_error(void);

void spt_string_free(char *s);

/*
 Parses an SP expression such as `P(S(e,e),e)`.
 */
enum SptStatus spt_tree_parse(const char *expr, struct SptTree **out);

void spt_tree_free(struct SptTree *tree);

enum SptStatus spt_tree_serialize(const struct SptTree *tree, char **out);

/*
 Canonical code, equal for two trees exactly when their graphs are
 isomorphic with terminals matched up to swapping.
 */
enum SptStatus spt_tree_encode(const struct SptTree *tree, char **out);

enum SptStatus spt_tree_canonicalize(const struct SptTree *tree, struct SptTree **out);

/*
 Builds the graph of a tree. Its source is vertex 0 and its sink vertex 1.
 */
enum SptStatus spt_tree_realize(const struct SptTree *tree, struct SptGraph **out);

struct SptGraph *spt_graph_new(void);

/*
 Reads `u v` lines; `#` starts a comment.
 */
enum SptStatus spt_graph_from_edge_list(const char *edges, struct SptGraph **out);

enum SptStatus spt_graph_add_edge(struct SptGraph *graph, uint32_t u, uint32_t v);

void spt_graph_free(struct SptGraph *graph);

/*
 Vertex count, or 0 for NULL.
 */
size_t spt_graph_vertex_count(const struct SptGraph *graph);

/*
 Edge count, or 0 for NULL.
 */
size_t spt_graph_edge_count(const struct SptGraph *graph);

/*
 Exact toughness. `vertex_cap` 0 selects the default cap.
 */
enum SptStatus spt_toughness(const struct SptGraph *graph,
                             size_t vertex_cap,
                             struct SptToughness *out);

/*
 Copies the witness tough set into `buf`. `len` receives its size even
 when `cap` is too small. A complete graph has no witness and reports
 `Domain`.
 */
enum SptStatus spt_tough_set(const struct SptGraph *graph,
                             size_t vertex_cap,
                             uint32_t *buf,
                             size_t cap,
                             size_t *len);

enum SptStatus spt_is_minimally_tough(const struct SptGraph *graph, size_t vertex_cap, bool *out);

/*
 Structural classification. When `description` is not NULL it receives
 a one-line report to be released with [`spt_string_free`].
 */
enum SptStatus spt_classify(const struct SptGraph *graph,
                            size_t vertex_cap,
                            enum SptVerdict *verdict,
                            char **description);

enum SptStatus spt_graph_to_dot(const struct SptGraph *graph, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SPTOUGH_H */
