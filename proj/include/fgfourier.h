/* C interface to the finite-group Fourier analysis library.
 *
 * All objects are opaque handles created and destroyed here.  Functions
 * return fgf_status; on anything other than FGF_OK the handle outputs are
 * untouched and fgf_last_error() describes the failure for the calling
 * thread.  Strings returned through char** outputs are heap-allocated and
 * must be released with fgf_string_free().
 *
 * Complex data crosses the boundary as interleaved doubles
 * [re0, im0, re1, im1, ...].  Functions on a group of order n use length
 * 2*n; block operators use one block per irreducible representation, each
 * row-major, concatenated in dual order, total length 2 * sum(dim^2).
 */

#ifndef FGFOURIER_H
#define FGFOURIER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgf_status {
  FGF_OK = 0,
  FGF_ERROR = 1,
  FGF_INVALID_ARGUMENT = 2,
  FGF_PARSE_ERROR = 3,
  FGF_NOT_A_GROUP = 4,
  FGF_NO_CONVERGENCE = 5
} fgf_status;

typedef struct fgf_group fgf_group;
typedef struct fgf_dual fgf_dual;

const char* fgf_version(void);

/* Message for the most recent failure on this thread, or "". */
const char* fgf_last_error(void);

void fgf_string_free(char* s);

/* Group construction.  Specs: cyclic:n, dihedral:n, s:n (2..5), q8,
 * klein4, product:<spec>,<spec>, file:<path to Cayley table>. */
fgf_status fgf_group_from_spec(const char* spec, fgf_group** out);
fgf_status fgf_group_from_cayley(const char* text, fgf_group** out);
void fgf_group_free(fgf_group* g);
int fgf_group_order(const fgf_group* g);
fgf_status fgf_group_cayley(const fgf_group* g, char** out_text);

/* Unitary dual: deterministic for a fixed (group, seed). */
fgf_status fgf_dual_compute(const fgf_group* g, uint64_t seed,
                            fgf_dual** out);
void fgf_dual_free(fgf_dual* d);
int fgf_dual_irrep_count(const fgf_dual* d);
int fgf_dual_total_dim(const fgf_dual* d);
/* Fills dims[0 .. irrep_count-1]. */
fgf_status fgf_dual_dims(const fgf_dual* d, int* dims);
fgf_status fgf_dual_to_json(const fgf_dual* d, char** out_json);

/* Fourier-series norms of a function (length 2*order). */
fgf_status fgf_function_norms(const fgf_dual* d, const double* values,
                              double* norm_a, double* norm_adelta,
                              double* norm_agamma);
/* Operator norms of a block operator (length 2 * sum(dim^2)). */
fgf_status fgf_operator_norms(const fgf_dual* d, const double* values,
                              double* norm_vn, double* norm_adelta_dual);

/* w is a function on G x G, row-major, length 2*n*n; out has length 2*n. */
fgf_status fgf_apply_gamma(const fgf_group* g, const double* w, double* out);
fgf_status fgf_apply_gamma_check(const fgf_group* g, const double* w,
                                 double* out);
/* u, v and out have length 2*n. */
fgf_status fgf_apply_convolve(const fgf_group* g, const double* u,
                              const double* v, double* out);

/* CSV table "pi_prime,pi,n,norm" of the materialized adjoint of the
 * convolution map (check_variant = 0) or its twisted variant
 * (check_variant = 1) at the given amplification level, which replicates
 * the operator along the diagonal. */
fgf_status fgf_adjoint_norm_table(const fgf_dual* d, const double* t,
                                  int level, int check_variant,
                                  char** out_csv);

/* Runs verification checks.  check_ids and groups are ';'-separated lists;
 * NULL or empty selects all checks / the default roster per check.
 * tolerance <= 0 and trials <= 0 select registry defaults; max_level <= 0
 * selects 3.  all_pass and nonconverged_failure may be NULL. */
fgf_status fgf_verify_run(const char* check_ids, const char* groups,
                          uint64_t seed, double tolerance, int trials,
                          int max_level, int* all_pass,
                          int* nonconverged_failure, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FGFOURIER_H */
