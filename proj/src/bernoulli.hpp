// (h,q)-Bernoulli numbers and polynomials through three independent routes,
// plus the classical Bernoulli oracle for q->1 limits.
#pragma once

#include "qkernel.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace hqz {

// Degree cap shared by every degree-like parameter (binomial table bound).
inline constexpr unsigned kMaxDegree = 60;

enum class BetaRoute { ClosedForm, Convolution, Series };

struct BetaResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
    BetaRoute route = BetaRoute::ClosedForm;
};

// Binomial coefficients C(n, l) for n <= kMaxDegree, exact at working
// precision.
const std::vector<std::vector<big>>& binomial_table();

// y / [f y]_q with the y -> 0 limit (1-q)/(f ln(1/q)); the l = 0 weight of
// the closed forms at h = 1.
big beta_weight(const big& y, const big& q, unsigned f = 1);

// Finite alternating sum at working precision (any finite h, x >= 0).
big beta_closed_big(unsigned n, const big& x, const big& q, const big& h);

// beta numbers 0..nmax via the closed form at x = 0.
std::vector<big> beta_numbers_big(unsigned nmax, const big& q, const big& h);

// Binomial convolution ([x]_q + q^x beta)^n over precomputed beta numbers.
big beta_convolution_big(unsigned n, const big& x, const big& q, const big& h,
                         const std::vector<big>& numbers);

// Per-context beta-number cache keyed by (q, h); readers get copies so the
// cache can be shared between threads.
class BetaCache {
public:
    std::vector<big> numbers(const QParams& params, unsigned nmax);

private:
    std::mutex mu_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<big>> map_;
};

BetaResult beta_closed_form(unsigned n, double x, const QParams& params);
BetaResult beta_convolution(unsigned n, double x, const QParams& params,
                            BetaCache& cache);
BetaResult beta_series(unsigned k, double x, const QParams& params,
                       const SumOptions& opts);

// Working-precision series value for the verification suites.
SeriesSum<big> beta_series_big(unsigned k, double x, const QParams& params,
                               const SumOptions& opts);

// |LHS - RHS| of Theorem 3's difference identity: the left side through the
// closed form, the right side through direct finite sums. For m = 0 the
// m-weighted first sum is taken as 0.
double difference_identity_residual(unsigned m, unsigned n_steps,
                                    const QParams& params);

// Classical Bernoulli polynomial B_n(x) by the defining recurrence, n <= 60.
double classical_bernoulli_poly(unsigned n, double x);
big classical_bernoulli_poly_big(unsigned n, const big& x);

}  // namespace hqz
