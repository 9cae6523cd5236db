/* C ABI for the rainbowsat toolkit.
 *
 * Graphs are opaque handles created by the rsat_* constructors and
 * released with rsat_graph_free(). Fallible calls return an RsatStatus;
 * on any non-OK status, rsat_last_error_message() describes the failure
 * (thread-local, valid until the next failing call on the same thread).
 * Strings returned by the library are released with rsat_string_free().
 */

#ifndef RAINBOWSAT_H
#define RAINBOWSAT_H

#include <stdbool.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct RsatGraph RsatGraph;

typedef enum RsatStatus {
  RSAT_OK = 0,
  RSAT_NULL_ARGUMENT = 1,
  RSAT_INVALID_UTF8 = 2,
  RSAT_PARSE_ERROR = 3,
  RSAT_CONSTRUCT_ERROR = 4,
  RSAT_INFEASIBLE = 5,
  RSAT_INVALID_ARGUMENT = 6,
} RsatStatus;

/* Error reporting ------------------------------------------------------ */

const char *rsat_last_error_message(void);

/* Graph lifecycle ------------------------------------------------------ */

RsatStatus rsat_graph_from_ecg(const char *text, RsatGraph **out);
char *rsat_graph_to_ecg(const RsatGraph *g);
void rsat_graph_free(RsatGraph *g);
void rsat_string_free(char *s);

/* Structural queries --------------------------------------------------- */

uint32_t rsat_graph_vertex_count(const RsatGraph *g);
uint32_t rsat_graph_palette(const RsatGraph *g);
uint64_t rsat_graph_edge_count(const RsatGraph *g);
RsatStatus rsat_graph_is_proper(const RsatGraph *g, bool *out);

/* Constructions -------------------------------------------------------- */

RsatStatus rsat_build_h(uint32_t ell, RsatGraph **out);
RsatStatus rsat_build_h_star(uint32_t ell, RsatGraph **out);
RsatStatus rsat_build_g_star(uint32_t k, uint32_t ell, RsatGraph **out);
RsatStatus rsat_build_rainbow_clique(uint32_t a, uint32_t t, RsatGraph **out);
RsatStatus rsat_assemble_case(uint64_t n, uint32_t ell, RsatGraph **out);

/* Rainbow paths and saturation ----------------------------------------- */

RsatStatus rsat_contains_rainbow_path(const RsatGraph *g, uint64_t order,
                                      bool *out);
RsatStatus rsat_is_saturated(const RsatGraph *g, uint64_t order, uint32_t t,
                             bool *out);
RsatStatus rsat_defect_count(const RsatGraph *g, uint64_t order, uint32_t t,
                             uint64_t *out);

/* Blocked pendant colors: bit (c - 1) of *out_mask is set when color c is
 * blocked at the vertex; *out_all_blocked reports the degenerate case
 * where no rainbow path of the requested order starts there. */
RsatStatus rsat_blocked_colors(const RsatGraph *g, uint32_t vertex,
                               uint64_t order, uint64_t *out_mask,
                               bool *out_all_blocked);

/* Closed-form bounds ---------------------------------------------------- */

uint64_t rsat_bound_new(uint64_t n, uint32_t ell);
uint64_t rsat_bound_old(uint64_t n, uint32_t ell);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAINBOWSAT_H */
