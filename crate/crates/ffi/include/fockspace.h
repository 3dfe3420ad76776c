#ifndef FOCKSPACE_H
#define FOCKSPACE_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FsConvention {
  FS_CONVENTION_UPPER = 0,
  FS_CONVENTION_LOWER = 1,
} FsConvention;

// Result codes.
typedef enum FsStatus {
  FS_STATUS_OK = 0,
  FS_STATUS_NULL_POINTER = 1,
  FS_STATUS_INVALID_ARGUMENT = 2,
  FS_STATUS_INVALID_UTF8 = 3,
  FS_STATUS_INVALID_JSON = 4,
  FS_STATUS_PANIC = 5,
} FsStatus;

// A coloured Young diagram with its rank and charge.
typedef struct FsDiagram FsDiagram;

// A truncated crystal graph.
typedef struct FsGraph FsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *fs_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void fs_string_free(char *s);

// Builds a diagram from `len` column depths, weakly decreasing and positive.
//
// # Safety
// `depths` must point to `len` readable values (may be NULL when `len` is 0);
// `out_diagram` must be writable.
enum FsStatus fs_diagram_new(int64_t n,
                             size_t charge,
                             const size_t *depths,
                             size_t len,
                             struct FsDiagram **out_diagram);

// Parses `{"n":..,"charge":..,"columns":[..]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out_diagram` must be writable.
enum FsStatus fs_diagram_from_json(const char *json, struct FsDiagram **out_diagram);

// # Safety
// `diagram` must be a live handle; `out_json` must be writable.
enum FsStatus fs_diagram_to_json(const struct FsDiagram *diagram, char **out_json);

// Number of boxes, or 0 for NULL.
//
// # Safety
// `diagram` must be NULL or a live handle.
size_t fs_diagram_box_count(const struct FsDiagram *diagram);

// # Safety
// `diagram` must be NULL or a handle from this library, not yet freed.
void fs_diagram_free(struct FsDiagram *diagram);

// # Safety
// `diagram` must be a live handle; `out_value` must be writable.
enum FsStatus fs_diagram_epsilon(const struct FsDiagram *diagram, size_t i, size_t *out_value);

// # Safety
// `diagram` must be a live handle; `out_value` must be writable.
enum FsStatus fs_diagram_phi(const struct FsDiagram *diagram, size_t i, size_t *out_value);

// Writes a new handle, or NULL when the result is zero.
//
// # Safety
// `diagram` must be a live handle; `out_diagram` must be writable.
enum FsStatus fs_diagram_e_tilde(const struct FsDiagram *diagram,
                                 size_t i,
                                 struct FsDiagram **out_diagram);

// Writes a new handle, or NULL when the result is zero.
//
// # Safety
// `diagram` must be a live handle; `out_diagram` must be writable.
enum FsStatus fs_diagram_f_tilde(const struct FsDiagram *diagram,
                                 size_t i,
                                 struct FsDiagram **out_diagram);

// Applies an operator word such as `"E1 F0 T2+ Td"` (rightmost first) and
// writes the resulting combination as JSON.
//
// # Safety
// `diagram` must be a live handle, `ops` NUL-terminated, `out_json` writable.
enum FsStatus fs_act(const struct FsDiagram *diagram,
                     const char *ops,
                     enum FsConvention convention,
                     char **out_json);

// Checks the defining relations on every diagram with at most `max_boxes`
// boxes. `out_report` may be NULL; otherwise it receives the JSON report.
//
// # Safety
// `out_checked` and `out_failures` must be writable; `out_report` NULL or writable.
enum FsStatus fs_verify(int64_t n,
                        size_t charge,
                        size_t max_boxes,
                        enum FsConvention convention,
                        uint64_t *out_checked,
                        uint64_t *out_failures,
                        char **out_report);

// Crystal graph of the component of the empty diagram, down to `depth` boxes.
//
// # Safety
// `out_graph` must be writable.
enum FsStatus fs_graph_new(int64_t n, size_t charge, size_t depth, struct FsGraph **out_graph);

// # Safety
// `graph` must be NULL or a live handle.
size_t fs_graph_node_count(const struct FsGraph *graph);

// # Safety
// `graph` must be NULL or a live handle.
size_t fs_graph_edge_count(const struct FsGraph *graph);

// Node `index` as a new diagram handle.
//
// # Safety
// `graph` must be a live handle; `out_diagram` must be writable.
enum FsStatus fs_graph_node(const struct FsGraph *graph,
                            size_t index,
                            struct FsDiagram **out_diagram);

// # Safety
// `graph` must be a live handle; `out_json` must be writable.
enum FsStatus fs_graph_to_json(const struct FsGraph *graph, char **out_json);

// # Safety
// `graph` must be a live handle; `out_dot` must be writable.
enum FsStatus fs_graph_to_dot(const struct FsGraph *graph, char **out_dot);

// # Safety
// `graph` must be NULL or a handle from this library, not yet freed.
void fs_graph_free(struct FsGraph *graph);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FOCKSPACE_H */
