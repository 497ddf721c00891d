/* C interface to the exact resistance-distance engine.
 *
 * All functions returning drd_status set a thread-local error message
 * readable through drd_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * drd_string_free(). Graph handles are released with drd_graph_free().
 * Structured results are JSON text; rationals appear as "num/den" strings.
 */

#ifndef DRD_H
#define DRD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct drd_graph drd_graph;

typedef enum {
  DRD_OK = 0,
  DRD_ERR_INVALID_ARGUMENT = 1,
  DRD_ERR_PRECONDITION = 2,
  DRD_ERR_PARSE = 3,
  DRD_ERR_IO = 4,
  DRD_ERR_INTERNAL = 5
} drd_status;

const char* drd_last_error(void);
void drd_string_free(char* s);
void drd_graph_free(drd_graph* g);

/* endpoints holds 2*edge_count vertex indices: u0 v0 u1 v1 ... */
drd_status drd_graph_create(int n, const int* endpoints, int edge_count,
                            drd_graph** out);
drd_status drd_graph_read_file(const char* path, drd_graph** out);
drd_status drd_graph_parse(const char* text, drd_graph** out);
drd_status drd_graph_write_text(const drd_graph* g, char** out);
int drd_graph_vertex_count(const drd_graph* g);
int drd_graph_edge_count(const drd_graph* g);

/* {"kind":..., "p":..., "q":..., "path_len":...} */
drd_status drd_classify_json(const drd_graph* g, char** out);

/* Wiener, Kirchhoff, degree distance, degree resistance distance, plus
 * per-vertex resistance sums. Requires a connected graph. */
drd_status drd_invariants_json(const drd_graph* g, char** out);

drd_status drd_effective_resistance(const drd_graph* g, int u, int v,
                                    char** out);

/* Exact "num/den" string to a fixed-point decimal with `digits` places. */
drd_status drd_rational_decimal(const char* value, int digits, char** out);

drd_status drd_make_S(int n, int p, int q, drd_graph** out);
drd_status drd_make_P(int n, int p, int q, drd_graph** out);
drd_status drd_make_B_json(const char* shape_json, drd_graph** out);

/* Closed-form values at (n, p, q): the S-family formula, both variants of
 * the P-family formula, and the (3,3) specializations. */
drd_status drd_closed_forms_json(int n, int p, int q, char** out);

/* op: "sigma" [v], "pi" [v], "relocate" [u, w], "rewire" [a, b, c, d],
 * "contract" [a, b], "shrink" [which]. Emits a before/after record with the
 * exact degree resistance distances and the comparison direction; *after
 * receives the transformed graph when non-null. */
drd_status drd_transform(const drd_graph* g, const char* op, const int* args,
                         int nargs, char** outcome_json, drd_graph** after);

/* population: "two-cycle" or "all". Full extremal report as JSON. */
drd_status drd_enumerate_json(int n, const char* population, int jobs,
                              int allow_large, char** out);

/* suite: "lemmas", "theorems", "closed-forms", "solver", or "all".
 * `n` applies to the theorem suite; `seed` to the randomized suites. */
drd_status drd_verify_json(const char* suite, int n, int jobs, uint64_t seed,
                           int allow_large, char** out);

#ifdef __cplusplus
}
#endif

#endif
