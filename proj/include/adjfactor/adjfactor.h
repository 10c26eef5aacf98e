/* C interface to the adjoint-based bivariate factorization library.
 *
 * All functions returning af_status set a human-readable message retrievable
 * via af_last_error(context) on failure.  Strings returned as char* are owned
 * by the caller and released with af_string_free.
 */
#ifndef ADJFACTOR_H
#define ADJFACTOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum af_status {
    AF_OK = 0,
    AF_ERR_PARSE = 1,
    AF_ERR_UNSUPPORTED = 2,
    AF_ERR_RETRY_EXHAUSTED = 3,
    AF_ERR_BAD_INPUT = 4,
    AF_ERR_INTERNAL = 5
} af_status;

typedef struct af_context af_context;
typedef struct af_poly af_poly;
typedef struct af_rational_result af_rational_result;
typedef struct af_absolute_result af_absolute_result;
typedef struct af_basis_result af_basis_result;

typedef struct af_options {
    uint64_t seed;
    int32_t truncation;        /* 0: default policy */
    const char* adjoint_basis; /* contents of an A-space file, or NULL */
} af_options;

typedef struct af_analysis {
    int32_t d;
    int32_t n;
    int32_t s;
    int32_t sbar;
    int32_t dim_a;
    int32_t genus_report;
    int32_t genus_is_geometric; /* 0: arithmetic genus of the partially resolved model */
    int32_t hypothesis;         /* 0 separable, 1 non-separable with (H') */
} af_analysis;

af_context* af_context_new_rationals(void);
/* p must be prime (probabilistically verified); returns NULL on failure */
af_context* af_context_new_prime_field(uint64_t p);
void af_context_free(af_context* ctx);
const char* af_last_error(const af_context* ctx);
const char* af_version(void);

af_status af_poly_parse(af_context* ctx, const char* text, af_poly** out);
void af_poly_free(af_poly* p);
char* af_poly_to_string(const af_poly* p);
int32_t af_poly_total_degree(const af_poly* p);
int32_t af_poly_degx(const af_poly* p);
int32_t af_poly_degy(const af_poly* p);
/* coefficient of x^i y^j, canonically printed (a polynomial in t over an
 * extension, a reduced fraction over Q, a residue over F_p) */
char* af_poly_coeff_string(const af_poly* p, int32_t i, int32_t j);
void af_string_free(char* s);

af_status af_factor_rational(af_context* ctx, const af_poly* f, const af_options* opt,
                             af_rational_result** out);
void af_rational_result_free(af_rational_result* r);
char* af_rational_result_unit(const af_rational_result* r);
size_t af_rational_result_count(const af_rational_result* r);
const af_poly* af_rational_result_factor(const af_rational_result* r, size_t i);

af_status af_factor_absolute(af_context* ctx, const af_poly* f, const af_options* opt,
                             af_absolute_result** out);
void af_absolute_result_free(af_absolute_result* r);
char* af_absolute_result_unit(const af_absolute_result* r);
size_t af_absolute_result_count(const af_absolute_result* r);
char* af_absolute_result_q(const af_absolute_result* r, size_t i);
const af_poly* af_absolute_result_factor(const af_absolute_result* r, size_t i);

af_status af_analyze(af_context* ctx, const af_poly* f, const af_options* opt, af_analysis* out);

/* basis of Adj(degree) (polynomials in x and y) */
af_status af_adjoint_basis(af_context* ctx, const af_poly* f, int32_t degree,
                           const af_options* opt, af_basis_result** out);
/* basis of the space A (polynomials in y) */
af_status af_aspace_basis(af_context* ctx, const af_poly* f, const af_options* opt,
                          af_basis_result** out);
void af_basis_result_free(af_basis_result* r);
size_t af_basis_result_count(const af_basis_result* r);
char* af_basis_result_poly(const af_basis_result* r, size_t i);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ADJFACTOR_H */
