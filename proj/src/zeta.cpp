#include "zeta.hpp"

#include "series_core.hpp"

#include <cmath>

namespace hqz {

namespace detail_zeta {

void validate_s(std::complex<double> s) {
    require_finite(s.real(), "re(s)");
    require_finite(s.imag(), "im(s)");
    if (std::abs(s - 1.0) < kPoleGuard)
        throw Error(errc::pole, "s lies inside the |s-1| < 1e-8 pole guard band");
}

void validate_series_domain(const QParams& params) {
    if (!params.series_route_ok())
        throw Error(errc::convergence_domain,
                    "series route needs h > 1 or h = 1");
}

SeriesResult round_result(const SeriesSum<BigComplex>& s) {
    const std::complex<double> v = to_complex(s.value);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(errc::nonfinite, "value overflows binary64");
    return {v, s.tail_bound, s.terms_used, s.converged};
}

}  // namespace detail_zeta

SeriesSum<BigComplex> hurwitz_zeta_q_big(std::complex<double> s, double x,
                                         const QParams& params,
                                         const SumOptions& opts) {
    detail_zeta::validate_s(s);
    require_finite(x, "x");
    if (!(x > 0.0)) throw Error(errc::domain, "x must be > 0");
    detail_zeta::validate_series_domain(params);
    auto a = series::zeta_family_series(s, x, 0, params, nullptr, opts);
    return {a.value, a.tail_bound, a.terms_used, a.converged};
}

SeriesSum<BigComplex> zeta_q_big(std::complex<double> s, const QParams& params,
                                 const SumOptions& opts) {
    detail_zeta::validate_s(s);
    detail_zeta::validate_series_domain(params);
    auto a = series::zeta_family_series(s, 0.0, 1, params, nullptr, opts);
    return {a.value, a.tail_bound, a.terms_used, a.converged};
}

SeriesResult hurwitz_zeta_q(std::complex<double> s, double x,
                            const QParams& params, const SumOptions& opts) {
    return detail_zeta::round_result(hurwitz_zeta_q_big(s, x, params, opts));
}

SeriesResult zeta_q(std::complex<double> s, const QParams& params,
                    const SumOptions& opts) {
    return detail_zeta::round_result(zeta_q_big(s, params, opts));
}

std::complex<double> zeta_special_value(unsigned k, std::optional<double> x,
                                        const QParams& params) {
    if (k == 0) throw Error(errc::bad_argument, "k must be >= 1");
    if (k > kMaxDegree)
        throw Error(errc::cap_exceeded, "degree exceeds the n <= 60 cap");
    using boost::multiprecision::pow;
    const big q(params.q), h(params.h);
    big v;
    if (x.has_value()) {
        require_finite(*x, "x");
        if (!(*x > 0.0)) throw Error(errc::domain, "x must be > 0");
        v = -beta_closed_big(k, big(*x), q, h) / static_cast<long>(k);
    } else {
        v = -pow(q, h - 1) * beta_closed_big(k, big(1), q, h) /
            static_cast<long>(k);
    }
    const double d = static_cast<double>(v);
    if (!std::isfinite(d))
        throw Error(errc::nonfinite, "value overflows binary64");
    return {d, 0.0};
}

}  // namespace hqz
