// Hurwitz-type (h,q)-zeta zeta_q(s, x | h) and the (h,q)-zeta zeta_q(s | h),
// with exact special values at non-positive integers through the beta route.
#pragma once

#include "bernoulli.hpp"
#include "qkernel.hpp"

#include <complex>
#include <optional>

namespace hqz {

// Both series of the defining display, summed with rigorous geometric tails;
// pole guard band |s - 1| >= 1e-8.
SeriesResult hurwitz_zeta_q(std::complex<double> s, double x,
                            const QParams& params, const SumOptions& opts);

// zeta_q(s | h) = q^{h-1} zeta_q(s, 1 | h); sums start at n = 1.
SeriesResult zeta_q(std::complex<double> s, const QParams& params,
                    const SumOptions& opts);

// Truncation-free special value at s = 1-k, k >= 1:
//   with x: -beta_k(x)/k;  without: -q^{h-1} beta_k(1)/k.
std::complex<double> zeta_special_value(unsigned k, std::optional<double> x,
                                        const QParams& params);

// Working-precision variants for the verification suites.
SeriesSum<BigComplex> hurwitz_zeta_q_big(std::complex<double> s, double x,
                                         const QParams& params,
                                         const SumOptions& opts);
SeriesSum<BigComplex> zeta_q_big(std::complex<double> s, const QParams& params,
                                 const SumOptions& opts);

namespace detail_zeta {
void validate_s(std::complex<double> s);
void validate_series_domain(const QParams& params);
SeriesResult round_result(const SeriesSum<BigComplex>& s);
}  // namespace detail_zeta

}  // namespace hqz
