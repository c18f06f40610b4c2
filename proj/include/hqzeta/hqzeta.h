/* hqzeta - (h,q)-Bernoulli numbers/polynomials, (h,q)-zeta functions and
 * Dirichlet (h,q)-L-functions behind a plain C interface.
 *
 * All functions are thread-safe. Handles (hqz_ctx, hqz_char_group) are
 * created/destroyed by the caller; a context may be shared between threads.
 * Functions report failure through hqz_status; hqz_last_error() returns a
 * human-readable reason for the most recent failure on the calling thread.
 */
#ifndef HQZETA_H
#define HQZETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HQZ_API __declspec(dllexport)
#else
#define HQZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hqz_status {
    HQZ_OK = 0,
    HQZ_ERR_BAD_ARGUMENT = 1,        /* malformed argument (tol <= 0, ...) */
    HQZ_ERR_DOMAIN = 2,              /* parameter outside supported domain */
    HQZ_ERR_POLE = 3,                /* s inside the |s-1| guard band */
    HQZ_ERR_CONVERGENCE_DOMAIN = 4,  /* series route undefined for these (q,h) */
    HQZ_ERR_SINGULAR_TERM = 5,       /* singular series term, e.g. (k=0, x=0) */
    HQZ_ERR_PRINCIPAL_CHARACTER = 6, /* principal chi rejected by this operation */
    HQZ_ERR_CAP_EXCEEDED = 7,        /* degree/modulus enumeration cap exceeded */
    HQZ_ERR_NONFINITE = 8,           /* result not representable in binary64 */
    HQZ_ERR_UNKNOWN_SUITE = 9,       /* verify: no such suite */
    HQZ_ERR_INTERNAL = 10
} hqz_status;

HQZ_API const char* hqz_status_name(hqz_status status);

/* Reason for the most recent failure on this thread; empty string if none. */
HQZ_API const char* hqz_last_error(void);

typedef struct hqz_complex {
    double re;
    double im;
} hqz_complex;

/* Result of a truncated series evaluation. tail_bound is a rigorous upper
 * bound on the modulus of the discarded remainder, derived from a geometric
 * envelope; converged == 0 means the term cap was reached before the bound
 * dropped below the requested tolerance (the partial value is still filled
 * in). Closed-form routes report tail_bound 0, terms_used 0, converged 1. */
typedef struct hqz_series_result {
    hqz_complex value;
    double tail_bound;
    uint64_t terms_used;
    int converged;
} hqz_series_result;

typedef enum hqz_route {
    HQZ_ROUTE_CLOSED_FORM = 0,  /* finite alternating sum */
    HQZ_ROUTE_CONVOLUTION = 1,  /* binomial convolution over beta numbers */
    HQZ_ROUTE_SERIES = 2,       /* convergence-controlled infinite series */
    HQZ_ROUTE_DISTRIBUTION = 3  /* chi-beta only: distribution relation */
} hqz_route;

/* ------------------------------------------------------------------ */
/* Evaluation context: series tolerance / term-cap defaults plus the   */
/* per-context beta-number cache.                                      */
/* ------------------------------------------------------------------ */

typedef struct hqz_ctx hqz_ctx;

HQZ_API hqz_ctx* hqz_ctx_new(void);
HQZ_API void hqz_ctx_free(hqz_ctx* ctx);
HQZ_API hqz_status hqz_ctx_set_tol(hqz_ctx* ctx, double tol);
HQZ_API hqz_status hqz_ctx_set_max_terms(hqz_ctx* ctx, uint64_t max_terms);
HQZ_API double hqz_ctx_tol(const hqz_ctx* ctx);
HQZ_API uint64_t hqz_ctx_max_terms(const hqz_ctx* ctx);

/* ------------------------------------------------------------------ */
/* q-kernel                                                            */
/* ------------------------------------------------------------------ */

/* [x]_q = (1 - q^x)/(1 - q), q in (0,1). */
HQZ_API hqz_status hqz_q_number(double x, double q, double* out);
HQZ_API hqz_status hqz_q_number_complex(hqz_complex x, double q, hqz_complex* out);

/* base^exponent via the principal branch of the real logarithm; base > 0. */
HQZ_API hqz_status hqz_complex_pow(double base, hqz_complex exponent,
                                   hqz_complex* out);

/* ------------------------------------------------------------------ */
/* (h,q)-Bernoulli numbers and polynomials                             */
/* ------------------------------------------------------------------ */

/* beta_{n,q}^h(x); x = 0 gives the beta numbers. Degree cap n <= 60. */
HQZ_API hqz_status hqz_beta(hqz_ctx* ctx, hqz_route route, uint32_t n, double x,
                            double q, double h, hqz_series_result* out);

/* Classical Bernoulli polynomial B_n(x) by the defining recurrence, n <= 60. */
HQZ_API hqz_status hqz_classical_bernoulli_poly(uint32_t n, double x, double* out);

/* |LHS - RHS| of the degree-m difference identity over n_steps steps. */
HQZ_API hqz_status hqz_difference_identity_residual(hqz_ctx* ctx, uint32_t m,
                                                    uint32_t n_steps, double q,
                                                    double h, double* out);

/* ------------------------------------------------------------------ */
/* (h,q)-zeta functions                                                */
/* ------------------------------------------------------------------ */

/* Hurwitz form zeta_q(s, x | h), x > 0, |s - 1| >= 1e-8. */
HQZ_API hqz_status hqz_hurwitz_zeta(hqz_ctx* ctx, hqz_complex s, double x,
                                    double q, double h, hqz_series_result* out);

/* zeta_q(s | h) = q^{h-1} zeta_q(s, 1 | h). */
HQZ_API hqz_status hqz_zeta(hqz_ctx* ctx, hqz_complex s, double q, double h,
                            hqz_series_result* out);

/* Exact special value at s = 1-k (k >= 1) through the beta closed form:
 * hurwitz_form != 0: -beta_k(x)/k; otherwise -q^{h-1} beta_k(1)/k. */
HQZ_API hqz_status hqz_zeta_special_value(hqz_ctx* ctx, uint32_t k,
                                          int hurwitz_form, double x, double q,
                                          double h, hqz_complex* out);

/* ------------------------------------------------------------------ */
/* Dirichlet characters mod f                                          */
/* ------------------------------------------------------------------ */

typedef struct hqz_char_group hqz_char_group;

/* All phi(f) characters mod f, principal character first, 1 <= f <= 10^4. */
HQZ_API hqz_status hqz_char_group_new(uint32_t modulus, hqz_char_group** out);
HQZ_API void hqz_char_group_free(hqz_char_group* group);
HQZ_API uint32_t hqz_char_group_size(const hqz_char_group* group);
HQZ_API uint32_t hqz_char_group_modulus(const hqz_char_group* group);

HQZ_API hqz_status hqz_char_eval(const hqz_char_group* group, uint32_t index,
                                 int64_t a, hqz_complex* out);

/* Exact value as a root of unity: chi(a) = e^{2 pi i num/den} (0 <= num < den,
 * gcd(num,den) = 1), or *is_zero = 1 when gcd(a, f) > 1. */
HQZ_API hqz_status hqz_char_exponent(const hqz_char_group* group, uint32_t index,
                                     int64_t a, int* is_zero, int64_t* num,
                                     int64_t* den);

HQZ_API int hqz_char_is_principal(const hqz_char_group* group, uint32_t index);
HQZ_API hqz_status hqz_char_conductor(const hqz_char_group* group,
                                      uint32_t index, uint32_t* out);

/* ------------------------------------------------------------------ */
/* Generalized (h,q)-Bernoulli values and (h,q)-L-functions            */
/* ------------------------------------------------------------------ */

HQZ_API hqz_status hqz_chi_beta(hqz_ctx* ctx, hqz_route route, uint32_t n,
                                double x, const hqz_char_group* group,
                                uint32_t index, double q, double h,
                                hqz_series_result* out);

/* Hurwitz-type L_q^h(s, chi | x), x > 0; accepts any character. */
HQZ_API hqz_status hqz_hurwitz_l(hqz_ctx* ctx, hqz_complex s, double x,
                                 const hqz_char_group* group, uint32_t index,
                                 double q, double h, hqz_series_result* out);

/* Dirichlet-type L_q^h(s, chi), sums from m = 1. Principal characters are
 * rejected unless allow_principal is nonzero. */
HQZ_API hqz_status hqz_l_function(hqz_ctx* ctx, hqz_complex s,
                                  const hqz_char_group* group, uint32_t index,
                                  double q, double h, int allow_principal,
                                  hqz_series_result* out);

/* ------------------------------------------------------------------ */
/* Identity verification                                               */
/* ------------------------------------------------------------------ */

typedef struct hqz_verify_grid {
    const double* q_values;
    size_t n_q;
    const double* h_values;
    size_t n_h;
    const double* x_values;
    size_t n_x;
    const uint32_t* moduli;
    size_t n_moduli;
    uint32_t max_degree;
} hqz_verify_grid;

typedef struct hqz_verify_report {
    const char* identity_id; /* valid only during the callback */
    const char* instance;    /* valid only during the callback */
    hqz_complex lhs;
    hqz_complex rhs;
    double residual;
    double tolerance;
    int passed;
} hqz_verify_report;

typedef void (*hqz_verify_callback)(const hqz_verify_report* report,
                                    void* user_data);

/* Runs one suite ("all" for every suite in order). grid == NULL uses the
 * default verification grid. tol_override > 0 replaces each identity's base
 * tolerance. The callback may be NULL when only the counts are wanted. */
HQZ_API hqz_status hqz_verify_run(hqz_ctx* ctx, const char* suite,
                                  const hqz_verify_grid* grid,
                                  double tol_override, hqz_verify_callback cb,
                                  void* user_data, uint32_t* n_passed,
                                  uint32_t* n_total);

/* Comma-separated list of known suite names. */
HQZ_API const char* hqz_verify_suites(void);

#ifdef __cplusplus
}
#endif

#endif /* HQZETA_H */
