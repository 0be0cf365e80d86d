#ifndef HALIN_PACKING_H
#define HALIN_PACKING_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes returned by every fallible function.
typedef enum HpStatus {
  HP_STATUS_OK = 0,
  // Unsat outcome or invalid coloring.
  HP_STATUS_UNSAT = 3,
  // Search limits hit before resolution.
  HP_STATUS_UNKNOWN = 4,
  // Malformed arguments, JSON, or schedule.
  HP_STATUS_USAGE = 64,
  // Structurally invalid graph.
  HP_STATUS_BAD_GRAPH = 65,
  // Unexpected internal failure.
  HP_STATUS_INTERNAL = 70,
} HpStatus;

// Opaque cubic Halin graph handle.
typedef struct HpGraph HpGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Frees a string returned by this library.
//
// # Safety
// `s` must be null or a pointer previously returned by a `hp_*` function and
// not yet freed.
void hp_string_free(char *s);

// Frees a graph handle.
//
// # Safety
// `g` must be null or a handle previously returned by this library and not
// yet freed.
void hp_graph_free(struct HpGraph *g);

// Parses a graph from the JSON interchange format.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` a valid pointer.
enum HpStatus hp_graph_from_json(const char *json, struct HpGraph **out);

// Builds a named instance: "K4", "prism6", or "G1".
//
// # Safety
// `name` must be a valid NUL-terminated string; `out` a valid pointer.
enum HpStatus hp_graph_named(const char *name, struct HpGraph **out);

// Deterministic random growth with the given internal vertex count and seed.
//
// # Safety
// `out` must be a valid pointer.
enum HpStatus hp_graph_random(uint32_t internal, uint64_t seed, struct HpGraph **out);

// Total number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
uint32_t hp_graph_order(const struct HpGraph *g);

// Serializes a graph into the JSON interchange format. The caller frees the
// string with `hp_string_free`.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum HpStatus hp_graph_to_json(const struct HpGraph *g, char **out);

// Runs a constructive colorer ("1123", "122222", or "lemma1") and returns
// the coloring JSON.
//
// # Safety
// `g` must be a live handle, `schedule` a valid string, `out` valid.
enum HpStatus hp_color(const struct HpGraph *g, const char *schedule, char **out);

// Verifies a coloring JSON against a hyphen-separated schedule. Returns Ok
// for valid, Unsat for invalid, and writes the report JSON when `out` is
// non-null.
//
// # Safety
// `g` must be a live handle; `schedule` and `coloring_json` valid strings.
enum HpStatus hp_verify(const struct HpGraph *g,
                        const char *schedule,
                        const char *coloring_json,
                        char **out);

// Exact decision for a hyphen-separated schedule. Status mirrors the solve
// outcome; the result JSON (status, node count, coloring if Sat) lands in
// `out` when non-null. Zero limits mean the defaults.
//
// # Safety
// `g` must be a live handle; `schedule` a valid string.
enum HpStatus hp_decide(const struct HpGraph *g,
                        const char *schedule,
                        uint64_t node_limit,
                        uint64_t time_limit_ms,
                        char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HALIN_PACKING_H */
