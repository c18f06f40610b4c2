#include "bernoulli.hpp"

#include "series_core.hpp"

#include <bit>
#include <cmath>

namespace hqz {

namespace {

void check_degree(unsigned n) {
    if (n > kMaxDegree)
        throw Error(errc::cap_exceeded, "degree exceeds the n <= 60 cap");
}

void check_x(double x) {
    require_finite(x, "x");
    if (x < 0.0) throw Error(errc::domain, "x must be >= 0");
}

double finish(const big& v, const char* what) {
    const double d = static_cast<double>(v);
    if (!std::isfinite(d))
        throw Error(errc::nonfinite, std::string(what) + " overflows binary64");
    return d;
}

}  // namespace

const std::vector<std::vector<big>>& binomial_table() {
    static const std::vector<std::vector<big>> table = [] {
        std::vector<std::vector<big>> t(kMaxDegree + 1);
        for (unsigned n = 0; n <= kMaxDegree; ++n) {
            t[n].assign(n + 1, big(1));
            for (unsigned l = 1; l < n; ++l) t[n][l] = t[n - 1][l - 1] + t[n - 1][l];
        }
        return t;
    }();
    return table;
}

big beta_weight(const big& y, const big& q, unsigned f) {
    using boost::multiprecision::pow;
    if (y == 0) return (1 - q) / (static_cast<long>(f) * big_ln_inv_q(q));
    return y * (1 - q) / (1 - pow(q, static_cast<long>(f) * y));
}

big beta_closed_big(unsigned n, const big& x, const big& q, const big& h) {
    using boost::multiprecision::pow;
    const auto& C = binomial_table();
    const big qx = pow(q, x);
    big ql(1);  // q^{l x}
    big acc(0);
    for (unsigned l = 0; l <= n; ++l) {
        const big term = C[n][l] * ql * beta_weight(l + h - 1, q);
        acc += (l % 2 == 0) ? term : -term;
        ql *= qx;
    }
    return acc / powi(1 - q, static_cast<long>(n));
}

std::vector<big> beta_numbers_big(unsigned nmax, const big& q, const big& h) {
    std::vector<big> out;
    out.reserve(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n)
        out.push_back(beta_closed_big(n, big(0), q, h));
    return out;
}

big beta_convolution_big(unsigned n, const big& x, const big& q, const big& h,
                         const std::vector<big>& numbers) {
    using boost::multiprecision::pow;
    const auto& C = binomial_table();
    const big xq = q_number_big(x, q);
    const big qx = pow(q, x);
    big ql(1);  // q^{l x}
    big acc(0);
    for (unsigned l = 0; l <= n; ++l) {
        acc += C[n][l] * ql * numbers[l] * powi(xq, static_cast<long>(n - l));
        ql *= qx;
    }
    return acc;
}

std::vector<big> BetaCache::numbers(const QParams& params, unsigned nmax) {
    const auto key = std::make_pair(std::bit_cast<std::uint64_t>(params.q),
                                    std::bit_cast<std::uint64_t>(params.h));
    std::lock_guard<std::mutex> lock(mu_);
    auto& vec = map_[key];
    if (vec.size() <= nmax) {
        const big q(params.q), h(params.h);
        for (unsigned n = static_cast<unsigned>(vec.size()); n <= nmax; ++n)
            vec.push_back(beta_closed_big(n, big(0), q, h));
    }
    return std::vector<big>(vec.begin(), vec.begin() + nmax + 1);
}

BetaResult beta_closed_form(unsigned n, double x, const QParams& params) {
    check_degree(n);
    check_x(x);
    const big v = beta_closed_big(n, big(x), big(params.q), big(params.h));
    return {finish(v, "beta"), 0.0, 0, true, BetaRoute::ClosedForm};
}

BetaResult beta_convolution(unsigned n, double x, const QParams& params,
                            BetaCache& cache) {
    check_degree(n);
    check_x(x);
    const auto numbers = cache.numbers(params, n);
    const big v =
        beta_convolution_big(n, big(x), big(params.q), big(params.h), numbers);
    return {finish(v, "beta"), 0.0, 0, true, BetaRoute::Convolution};
}

SeriesSum<big> beta_series_big(unsigned k, double x, const QParams& params,
                               const SumOptions& opts) {
    check_degree(k);
    check_x(x);
    if (!params.series_route_ok())
        throw Error(errc::convergence_domain,
                    "series route needs h > 1 or h = 1");
    if (k == 0 && x == 0.0)
        throw Error(errc::singular_term,
                    "(k=0, x=0) has an undefined [0]_q^{-1} term; use the "
                    "closed form");
    auto a = series::beta_family_series(k, x, params, nullptr, opts);
    return {a.value.re, a.tail_bound, a.terms_used, a.converged};
}

BetaResult beta_series(unsigned k, double x, const QParams& params,
                       const SumOptions& opts) {
    auto s = beta_series_big(k, x, params, opts);
    return {finish(s.value, "beta"), s.tail_bound, s.terms_used, s.converged,
            BetaRoute::Series};
}

double difference_identity_residual(unsigned m, unsigned n_steps,
                                    const QParams& params) {
    check_degree(m);
    if (n_steps == 0) throw Error(errc::bad_argument, "n_steps must be >= 1");
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    const big q(params.q), h(params.h);

    const big lhs = pow(q, (h - 1) * static_cast<long>(n_steps)) *
                        beta_closed_big(m, big(static_cast<long>(n_steps)), q, h) -
                    beta_closed_big(m, big(0), q, h);

    big first(0);
    if (m >= 1) {
        for (unsigned l = 0; l < n_steps; ++l)
            first += pow(q, h * static_cast<long>(l)) *
                     powi(q_number_big(big(static_cast<long>(l)), q),
                          static_cast<long>(m) - 1);
        first *= static_cast<long>(m);
    }
    big second(0);
    for (unsigned l = 0; l < n_steps; ++l)
        second += pow(q, (h - 1) * static_cast<long>(l)) *
                  powi(q_number_big(big(static_cast<long>(l)), q),
                       static_cast<long>(m));
    const big rhs = first - (h - 1) * (1 - q) * second;
    return finish(abs(lhs - rhs), "residual");
}

namespace {

const std::vector<big>& classical_bernoulli_numbers() {
    static const std::vector<big> table = [] {
        const auto& C = binomial_table();
        std::vector<big> B{big(1)};
        for (unsigned n = 1; n <= kMaxDegree; ++n) {
            big acc(0);
            // C(n+1, l) from C(n, .) since the table stops at kMaxDegree
            big cnl(1);  // C(n+1, 0)
            for (unsigned l = 0; l < n; ++l) {
                acc += cnl * B[l];
                cnl = cnl * (static_cast<long>(n) + 1 - static_cast<long>(l)) /
                      (static_cast<long>(l) + 1);
            }
            B.push_back(-acc / (static_cast<long>(n) + 1));
        }
        return B;
    }();
    return table;
}

}  // namespace

big classical_bernoulli_poly_big(unsigned n, const big& x) {
    const auto& C = binomial_table();
    const auto& B = classical_bernoulli_numbers();
    big acc(0);
    for (unsigned l = 0; l <= n; ++l)
        acc += C[n][l] * B[l] * powi(x, static_cast<long>(n - l));
    return acc;
}

double classical_bernoulli_poly(unsigned n, double x) {
    check_degree(n);
    require_finite(x, "x");
    return finish(classical_bernoulli_poly_big(n, big(x)), "B_n(x)");
}

}  // namespace hqz
