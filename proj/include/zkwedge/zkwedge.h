/* zkwedge C interface.
 *
 * Every object is an opaque handle released with its matching *_free function.
 * Functions returning zkw_status leave the message of the last failure in
 * zkw_last_error() (per thread). Strings handed out through char** are
 * released with zkw_string_free.
 *
 * Vertex subsets are 64-bit masks: vertex v is bit v-1.
 */
#ifndef ZKWEDGE_H
#define ZKWEDGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZKW_API __declspec(dllexport)
#else
#define ZKW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef uint64_t zkw_vset;

typedef enum zkw_status {
  ZKW_OK = 0,
  ZKW_ERR_INVALID_ARGUMENT = 1,
  ZKW_ERR_PARSE = 2,
  ZKW_ERR_SIZE_LIMIT = 3,
  ZKW_ERR_NOT_SHIFTED = 4,
  ZKW_ERR_GHOST_VERTEX = 5,
  ZKW_ERR_NON_REGULAR_STEP = 6,
  ZKW_ERR_INVARIANT = 7,
  ZKW_ERR_DIVISION_BY_ZERO = 8,
  ZKW_ERR_INTERNAL = 9
} zkw_status;

typedef enum zkw_subcomplex_kind { ZKW_LINK = 0, ZKW_STAR = 1, ZKW_REST = 2, ZKW_FULL = 3 } zkw_subcomplex_kind;
typedef enum zkw_combine_kind { ZKW_DISJOINT_UNION = 0, ZKW_GLUE = 1, ZKW_JOIN = 2 } zkw_combine_kind;
typedef enum zkw_phase { ZKW_ITERATION1 = 0, ZKW_ITERATION2_PRE = 1, ZKW_ITERATION2_MAIN = 2 } zkw_phase;
typedef enum zkw_trace_part { ZKW_PART_C = 0, ZKW_PART_D = 1, ZKW_PART_E = 2, ZKW_PART_BEFORE = 3, ZKW_PART_AFTER = 4 } zkw_trace_part;
typedef enum zkw_golod_reason { ZKW_GOLOD_NONE = 0, ZKW_GOLOD_SHIFTED = 1, ZKW_GOLOD_WEDGE_F0 = 2 } zkw_golod_reason;

typedef struct zkw_complex zkw_complex;
typedef struct zkw_wedge zkw_wedge;
typedef struct zkw_spheres zkw_spheres;
typedef struct zkw_trace zkw_trace;
typedef struct zkw_betti zkw_betti;
typedef struct zkw_family zkw_family;
typedef struct zkw_ratfun zkw_ratfun;

typedef struct zkw_shift_verdict {
  int shifted;
  int order_length;
  int order[64];       /* order[i] is the vertex placed at position i+1 */
  zkw_vset face;       /* violating triple when not shifted */
  int vertex;
  int replacement;
} zkw_shift_verdict;

typedef struct zkw_step {
  zkw_vset simplex;
  zkw_vset S;
  zkw_vset T;
  zkw_phase phase;
} zkw_step;

typedef struct zkw_golod {
  int golod;
  zkw_golod_reason reason;
} zkw_golod;

ZKW_API const char* zkw_version(void);
ZKW_API const char* zkw_last_error(void);
ZKW_API void zkw_string_free(char* s);

/* Complexes */
ZKW_API zkw_status zkw_complex_parse_scx(const char* text, zkw_complex** out);
ZKW_API zkw_status zkw_complex_to_scx(const zkw_complex* k, char** out);
ZKW_API zkw_status zkw_complex_from_faces(int n, const zkw_vset* faces, size_t count, zkw_complex** out);
ZKW_API zkw_status zkw_complex_skeleton(int n, int q, zkw_complex** out);
ZKW_API void zkw_complex_free(zkw_complex* k);
ZKW_API zkw_vset zkw_complex_ground(const zkw_complex* k);
ZKW_API size_t zkw_complex_maximal_count(const zkw_complex* k);
ZKW_API zkw_vset zkw_complex_maximal_face(const zkw_complex* k, size_t i);
ZKW_API size_t zkw_complex_face_count(const zkw_complex* k);
ZKW_API int zkw_complex_equal(const zkw_complex* a, const zkw_complex* b);
ZKW_API zkw_status zkw_complex_subcomplex(const zkw_complex* k, zkw_subcomplex_kind kind, zkw_vset arg,
                                          zkw_complex** out);
/* face_a[i] is identified with face_b[i]; faces are ignored except for ZKW_GLUE. */
ZKW_API zkw_status zkw_complex_combine(zkw_combine_kind kind, const zkw_complex* a, const zkw_complex* b,
                                       const int* face_a, const int* face_b, size_t face_size, zkw_complex** out);
ZKW_API zkw_status zkw_complex_relabel(const zkw_complex* k, const int* order, size_t length, zkw_complex** out);
ZKW_API zkw_status zkw_is_shifted(const zkw_complex* k, int search, zkw_shift_verdict* out);

/* Wedges */
ZKW_API zkw_status zkw_decompose(const zkw_complex* k, zkw_wedge** out, zkw_trace** trace);
ZKW_API zkw_status zkw_skeleton_fibre(int n, int k, zkw_wedge** out);
ZKW_API size_t zkw_wedge_count(const zkw_wedge* w);
ZKW_API zkw_status zkw_wedge_summand(const zkw_wedge* w, size_t i, int* suspension, zkw_vset* index, uint64_t* mult);
ZKW_API zkw_status zkw_wedge_realize(const zkw_wedge* w, int loop_dim, zkw_spheres** out);
ZKW_API void zkw_wedge_free(zkw_wedge* w);
ZKW_API size_t zkw_spheres_count(const zkw_spheres* s);
ZKW_API zkw_status zkw_spheres_entry(const zkw_spheres* s, size_t i, int* dim, uint64_t* count);
ZKW_API void zkw_spheres_free(zkw_spheres* s);

/* Regular sequences and their construction steps.
 * zkw_regular_sequence builds the sequence from the vertex wedge to Star(1); with run != 0
 * it also runs it from the wedge-inclusion fibre, which can fail with ZKW_ERR_NON_REGULAR_STEP. */
ZKW_API zkw_status zkw_regular_sequence(const zkw_complex* k, int run, zkw_trace** out);
ZKW_API size_t zkw_trace_count(const zkw_trace* t);
ZKW_API zkw_status zkw_trace_step(const zkw_trace* t, size_t i, zkw_step* out);
/* ZKW_ERR_INVALID_ARGUMENT when the trace holds steps only. */
ZKW_API zkw_status zkw_trace_wedge(const zkw_trace* t, size_t i, zkw_trace_part part, zkw_wedge** out);
ZKW_API void zkw_trace_free(zkw_trace* t);

/* Cohomology oracle; threads == 0 uses every core. Results do not depend on threads. */
ZKW_API zkw_status zkw_bigraded_betti(const zkw_complex* k, unsigned threads, zkw_betti** out);
ZKW_API size_t zkw_betti_count(const zkw_betti* b);
ZKW_API zkw_status zkw_betti_entry(const zkw_betti* b, size_t i, zkw_vset* sigma, int* degree, uint64_t* rank,
                                   int* torsion);
ZKW_API int zkw_betti_torsion_free(const zkw_betti* b);
/* Writes min(cap, length) coefficients of the reduced Poincare polynomial; *length gets the full length. */
ZKW_API zkw_status zkw_betti_poincare(const zkw_betti* b, uint64_t* coeffs, size_t cap, size_t* length);
ZKW_API void zkw_betti_free(zkw_betti* b);

/* Families */
ZKW_API zkw_status zkw_family_from_shifted(const zkw_complex* k, zkw_family** out);
ZKW_API zkw_status zkw_family_combine(zkw_combine_kind kind, const zkw_family* a, const zkw_family* b,
                                      const int* face_a, const int* face_b, size_t face_size, zkw_family** out);
ZKW_API int zkw_family_level(const zkw_family* f);
ZKW_API int zkw_family_is_symbolic(const zkw_family* f);
ZKW_API zkw_status zkw_family_complex(const zkw_family* f, zkw_complex** out);
ZKW_API zkw_status zkw_family_wedge(const zkw_family* f, zkw_wedge** out);
ZKW_API zkw_status zkw_family_spheres(const zkw_family* f, zkw_spheres** out);
ZKW_API zkw_status zkw_family_check_oracle(const zkw_family* f, unsigned threads, int* poincare_match,
                                           int* torsion_free);
ZKW_API void zkw_family_free(zkw_family* f);

/* Series */
ZKW_API zkw_status zkw_face_ring_poincare(unsigned n, const uint64_t* p_reduced, size_t length, zkw_ratfun** out);
ZKW_API zkw_status zkw_serre_series(unsigned n, zkw_ratfun** out);
ZKW_API zkw_status zkw_tate_series(unsigned n, unsigned m, zkw_ratfun** out);
/* c[0] is c_1, the coefficient of t^2 in the denominator. */
ZKW_API zkw_status zkw_golod_series(unsigned n, const uint64_t* c, size_t length, zkw_ratfun** out);
ZKW_API zkw_status zkw_ratfun_to_string(const zkw_ratfun* r, char** out);
/* Coefficients t^0..t^order as space-separated decimals. */
ZKW_API zkw_status zkw_ratfun_series(const zkw_ratfun* r, size_t order, char** out);
ZKW_API void zkw_ratfun_free(zkw_ratfun* r);
ZKW_API zkw_status zkw_golod_verdict(const zkw_complex* k, int wedge_certificate, zkw_golod* out);

#ifdef __cplusplus
}
#endif

#endif /* ZKWEDGE_H */
