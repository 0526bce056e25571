/* C interface to the liechar library. Strings returned through `char**` are owned by
 * the caller and released with lc_string_free; handles with their matching *_free. */
#ifndef LIECHAR_H
#define LIECHAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LC_API __declspec(dllexport)
#else
#define LC_API __attribute__((visibility("default")))
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_INVALID_ARGUMENT,
  LC_IO,
  LC_PARSE,
  LC_INDEX_ORDER,
  LC_JACOBI,
  LC_SHAPE,
  LC_RING_MISMATCH,
  LC_DIVISION_BY_ZERO,
  LC_SINGULAR,
  LC_DEGENERATE,
  LC_NOT_FOUND,
  LC_INCONSISTENT, /* a theorem check disagreed with its oracle */
  LC_INTERNAL
} lc_status;

typedef struct lc_poly lc_poly;
typedef struct lc_algebra lc_algebra;

LC_API const char* lc_status_name(lc_status status);
/* Message of the last failed call on this thread, "" if none. */
LC_API const char* lc_last_error(void);
LC_API void lc_string_free(char* s);

/* Polynomials in z0..z{num_vars-1}; num_vars = 0 infers from the text. */
LC_API lc_status lc_poly_parse(const char* text, size_t num_vars, lc_poly** out);
LC_API void lc_poly_free(lc_poly* p);
LC_API size_t lc_poly_num_vars(const lc_poly* p);
LC_API lc_status lc_poly_to_string(const lc_poly* p, char** out);
LC_API lc_status lc_poly_mul(const lc_poly* a, const lc_poly* b, lc_poly** out);
LC_API int lc_poly_equal(const lc_poly* a, const lc_poly* b);
/* *homogeneous = 0 leaves *degree untouched. */
LC_API lc_status lc_poly_structure(const lc_poly* p, int* homogeneous, unsigned* degree, unsigned* z0_multiplicity);
/* *quotient is NULL when d does not divide p. */
LC_API lc_status lc_poly_divide(const lc_poly* p, const lc_poly* d, lc_poly** quotient);
/* Linear factors and residual, e.g. "(z0)^2*(z0+z3+z4)^1*(z0+z3-z4)^1". */
LC_API lc_status lc_poly_factor(const lc_poly* p, int* complete, char** out);

LC_API lc_status lc_algebra_load(const char* path, lc_algebra** out);
/* `base_dir` resolves the iso reference; may be NULL for the current directory. */
LC_API lc_status lc_algebra_parse(const char* text, const char* base_dir, lc_algebra** out);
LC_API void lc_algebra_free(lc_algebra* a);
LC_API size_t lc_algebra_dim(const lc_algebra* a);
LC_API const char* lc_algebra_name(const lc_algebra* a);
LC_API lc_status lc_algebra_render(const lc_algebra* a, char** out);

/* rep_name NULL selects the adjoint representation. */
LC_API lc_status lc_charpoly(const lc_algebra* a, const char* rep_name, lc_poly** out);

typedef struct lc_nilpotency {
  int theorem;   /* p_ad == z0^n */
  int corollary; /* p_ad(1, z) == 1 */
  int oracle;    /* lower central series reaches 0 */
} lc_nilpotency;
/* p_ad may be NULL. */
LC_API lc_status lc_nilpotency_test(const lc_algebra* a, lc_nilpotency* out, lc_poly** p_ad);

typedef struct lc_solvability {
  int oracle;
  int image_solvable;
  int complete;
  int consistent;
} lc_solvability;
/* factorization and outcome may be NULL. */
LC_API lc_status lc_solvability_test(const lc_algebra* a, const char* rep_name, lc_solvability* out,
                                     char** factorization, char** outcome);

typedef struct lc_codim {
  size_t codim;
  unsigned z0_multiplicity;
  int holds;
} lc_codim;
LC_API lc_status lc_codim_check(const lc_algebra* a, lc_codim* out);

/* *verified = 1 when the document's map is a bijective bracket-preserving map from the
 * reference algebra; `details` lists failing pairs otherwise. */
LC_API lc_status lc_verify_iso(const lc_algebra* a, int* verified, char** details);

LC_API lc_status lc_sl2_closed_form(unsigned m, lc_poly** out);
/* spec is `slN:a1,...,a{N-1}`. */
LC_API lc_status lc_linearize(const char* spec, char** out);
/* Resolution product of both linearizations, checked against the tensor character. */
LC_API lc_status lc_resolve(const char* spec_a, const char* spec_b, char** out);

/* format: 0 text, 1 JSON lines. *inconsistent set when any record disagrees with its
 * oracle, *errors when a file failed to load. */
LC_API lc_status lc_report_dir(const char* dir, int format, int timing, size_t width, char** out,
                               int* inconsistent, int* errors);

#ifdef __cplusplus
}
#endif

#endif
