#ifndef RAMLAT_H
#define RAMLAT_H

/* C interface to the ramified-lattice library.
 *
 * Conventions:
 *   - Every function returns a ramlat_status; RAMLAT_OK means success.
 *   - On failure, ramlat_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread.
 *   - Output strings (char**) are heap-allocated; release them with
 *     ramlat_string_free.  Output handles are released with the matching
 *     *_free function.  Nothing is written to out-parameters on failure.
 *   - JSON layouts match the library's documented serializations.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ramlat_status {
  RAMLAT_OK = 0,
  RAMLAT_INVALID_ARGUMENT = 1,
  RAMLAT_PARSE_ERROR = 2,
  RAMLAT_PRECISION_EXHAUSTED = 3,
  RAMLAT_NOT_INVERTIBLE = 4,
  RAMLAT_SINGULAR = 5,
  RAMLAT_RANK_DEFICIENT = 6,
  RAMLAT_NOT_UNIT = 7,
  RAMLAT_NOT_VERTEX = 8,
  RAMLAT_TYPE_UNAVAILABLE = 9,
  RAMLAT_NOT_RATIONAL = 10,
  RAMLAT_NOT_ISOTROPIC = 11,
  RAMLAT_NOT_LAGRANGIAN = 12,
  RAMLAT_CHAIN_VIOLATION = 13,
  RAMLAT_SEARCH_TOO_LARGE = 14,
  RAMLAT_GROUP_TOO_LARGE = 15,
  RAMLAT_INTERNAL = 16
} ramlat_status;

/* Opaque handles. */
typedef struct ramlat_space ramlat_space;
typedef struct ramlat_lattice ramlat_lattice;

/* Thread-local message for the most recent failure on this thread. */
const char* ramlat_last_error(void);

/* Frees a string returned through a char** out-parameter. */
void ramlat_string_free(char* s);

/* ---- hermitian spaces and lattices ---------------------------------- */

/* variant is one of "split-even", "non-split-even", "odd".  epsilon is the
 * unit in pi^2 = epsilon * p; pass 1 for the default presentation. */
ramlat_status ramlat_space_create(uint64_t p, int precision, uint64_t epsilon, int n,
                                  const char* variant, ramlat_space** out);
void ramlat_space_free(ramlat_space* space);

/* {"label": "Split"|"NonSplit", "disc_unit": u, "n": n, "max_vertex_type": t} */
ramlat_status ramlat_space_classify(const ramlat_space* space, char** json_out);
ramlat_status ramlat_space_to_json(const ramlat_space* space, char** json_out);

/* The reference vertex lattice of the given type in a standard space. */
ramlat_status ramlat_lattice_standard(const ramlat_space* space, int t, ramlat_lattice** out);
ramlat_status ramlat_lattice_from_json(const ramlat_space* space, const char* json,
                                       ramlat_lattice** out);
void ramlat_lattice_free(ramlat_lattice* lattice);

ramlat_status ramlat_lattice_type(const ramlat_lattice* lattice, int* type_out);
ramlat_status ramlat_lattice_dual(const ramlat_lattice* lattice, ramlat_lattice** out);
/* Signed index [A : B]. */
ramlat_status ramlat_lattice_index(const ramlat_lattice* a, const ramlat_lattice* b,
                                   int64_t* index_out);
ramlat_status ramlat_lattice_to_json(const ramlat_lattice* lattice, char** json_out);

/* ---- the vertex-lattice complexes ------------------------------------ */

/* Both return [{"type": t, "lattice": {...}}, ...] in canonical order. */
ramlat_status ramlat_complex_sub(const ramlat_lattice* lattice, char** json_out);
ramlat_status ramlat_complex_super(const ramlat_lattice* lattice, uint64_t budget,
                                   char** json_out);

/* kind is "T" (inclusion complex) or "L" (the variant that keeps only
 * maximal-type lattices in even split spaces).  JSON: the graph layout
 * {nodes, edges, center, radius}. */
ramlat_status ramlat_complex_ball(const ramlat_lattice* center, int radius, const char* kind,
                                  uint64_t budget, char** json_out);
ramlat_status ramlat_complex_ball_dot(const ramlat_lattice* center, int radius, const char* kind,
                                      uint64_t budget, char** dot_out);

/* ---- stratified point sets of the symplectic model ------------------- */

/* Census of the point set over F_{p^k} for the standard alternating space
 * of dimension 2m: the stratum-report JSON. */
ramlat_status ramlat_dl_count(uint64_t p, int m, int k, uint64_t budget, char** json_out);

/* Every point with its stratum index and rational component:
 * {"p", "m", "k", "points": [{"U", "i", "component"}, ...]} */
ramlat_status ramlat_dl_strata(uint64_t p, int m, int k, uint64_t budget, char** json_out);

/* Closure sizes over every rational isotropic subspace W of dimension
 * dim_w: {"p", "m", "k", "dim_w", "closures": [{"W", "count"}, ...]} */
ramlat_status ramlat_dl_closure(uint64_t p, int m, int k, int dim_w, uint64_t budget,
                                char** json_out);

/* Flag-side resolution summary:
 * {"p", "m", "k", "flags", "points", "distinct_endpoints", "surjective",
 *  "strict_flags", "top_stratum", "top_bijective"} */
ramlat_status ramlat_dl_resolve(uint64_t p, int m, int k, uint64_t budget, char** json_out);

/* ---- Weyl-group dimensions ------------------------------------------- */

/* {"m", "coxeter_length", "strata": [{"i", "dim"}, ...]} */
ramlat_status ramlat_weyl_dims(int m, char** json_out);

/* ---- verification ----------------------------------------------------- */

/* Runs check `id` (1..10), or all of them when id is 0.  Writes one
 * "[PASS]"/"[FAIL]" line per check to report_out and sets *all_passed_out
 * to 1 exactly when every executed check passed.  The status is RAMLAT_OK
 * even when checks fail; only malformed requests return an error. */
ramlat_status ramlat_verify(int id, uint64_t seed, int* all_passed_out, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* RAMLAT_H */
