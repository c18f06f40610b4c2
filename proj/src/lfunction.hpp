// Generalized (h,q)-Bernoulli values attached to a Dirichlet character and
// the (h,q)-L-functions with their special values.
#pragma once

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "qkernel.hpp"

#include <complex>

namespace hqz {

enum class ChiBetaRoute { Distribution, ClosedForm, Series };

struct ChiBetaResult {
    std::complex<double> value{};
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
    ChiBetaRoute route = ChiBetaRoute::Distribution;
};

// Distribution relation: [f]_q^{n-1} sum_a chi(a) q^{(h-1)a}
// beta_{n,q^f}^h((x+a)/f).
ChiBetaResult chi_beta_distribution(unsigned n, double x,
                                    const CharacterTable& chi,
                                    const QParams& params);

// Double finite sum with the l = 0, h = 1 weight handled as the limit
// (1-q)/(f ln(1/q)).
ChiBetaResult chi_beta_closed(unsigned n, double x, const CharacterTable& chi,
                              const QParams& params);

// Character-twisted two-series form; at (n=0, x=0) the n-weighted sum is
// dropped by convention.
ChiBetaResult chi_beta_series(unsigned n, double x, const CharacterTable& chi,
                              const QParams& params, const SumOptions& opts);

// Hurwitz-type L_q^h(s, chi | x), x > 0; any character.
SeriesResult hurwitz_l(std::complex<double> s, double x,
                       const CharacterTable& chi, const QParams& params,
                       const SumOptions& opts);

// Dirichlet-type L_q^h(s, chi), sums from m = 1; principal characters are
// rejected unless allow_principal is set.
SeriesResult l_function(std::complex<double> s, const CharacterTable& chi,
                        const QParams& params, const SumOptions& opts,
                        bool allow_principal = false);

// Working-precision variants for the verification suites.
BigComplex chi_beta_distribution_big(unsigned n, const big& x,
                                     const CharacterTable& chi,
                                     const QParams& params);
BigComplex chi_beta_closed_big(unsigned n, const big& x,
                               const CharacterTable& chi,
                               const QParams& params);
SeriesSum<BigComplex> chi_beta_series_big(unsigned n, double x,
                                          const CharacterTable& chi,
                                          const QParams& params,
                                          const SumOptions& opts);
SeriesSum<BigComplex> hurwitz_l_big(std::complex<double> s, double x,
                                    const CharacterTable& chi,
                                    const QParams& params,
                                    const SumOptions& opts);
SeriesSum<BigComplex> l_function_big(std::complex<double> s,
                                     const CharacterTable& chi,
                                     const QParams& params,
                                     const SumOptions& opts,
                                     bool allow_principal = false);

}  // namespace hqz
