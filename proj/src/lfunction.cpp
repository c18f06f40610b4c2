#include "lfunction.hpp"

#include "series_core.hpp"
#include "zeta.hpp"

#include <cmath>

namespace hqz {

namespace {

void check_nx(unsigned n, double x) {
    if (n > kMaxDegree)
        throw Error(errc::cap_exceeded, "degree exceeds the n <= 60 cap");
    require_finite(x, "x");
    if (x < 0.0) throw Error(errc::domain, "x must be >= 0");
}

std::complex<double> finish(const BigComplex& v) {
    const std::complex<double> d = to_complex(v);
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
        throw Error(errc::nonfinite, "value overflows binary64");
    return d;
}

}  // namespace

BigComplex chi_beta_distribution_big(unsigned n, const big& x,
                                     const CharacterTable& chi,
                                     const QParams& params) {
    using boost::multiprecision::pow;
    const unsigned f = chi.modulus();
    const big q(params.q), h(params.h);
    const big qf = powi(q, static_cast<long>(f));
    const big qh1 = pow(q, h - 1);
    BigComplex acc{};
    for (unsigned a = 0; a < f; ++a) {
        if (chi.is_zero(a)) continue;
        const big inner =
            beta_closed_big(n, (x + static_cast<long>(a)) / static_cast<long>(f),
                            qf, h);
        acc += chi.evaluate_big(a) * (powi(qh1, static_cast<long>(a)) * inner);
    }
    const big scale = powi(q_number_big(big(static_cast<long>(f)), q),
                           static_cast<long>(n) - 1);
    return acc * scale;
}

BigComplex chi_beta_closed_big(unsigned n, const big& x,
                               const CharacterTable& chi,
                               const QParams& params) {
    using boost::multiprecision::pow;
    const unsigned f = chi.modulus();
    const big q(params.q), h(params.h);
    const auto& C = binomial_table();
    const big qh1 = pow(q, h - 1);
    BigComplex acc{};
    for (unsigned a = 0; a < f; ++a) {
        if (chi.is_zero(a)) continue;
        const big qxa = pow(q, x + static_cast<long>(a));
        big ql(1);  // q^{l (x+a)}
        big inner(0);
        for (unsigned l = 0; l <= n; ++l) {
            const big term = C[n][l] * ql * beta_weight(l + h - 1, q, f);
            inner += (l % 2 == 0) ? term : -term;
            ql *= qxa;
        }
        acc += chi.evaluate_big(a) * (powi(qh1, static_cast<long>(a)) * inner);
    }
    return acc * (1 / powi(1 - q, static_cast<long>(n)));
}

ChiBetaResult chi_beta_distribution(unsigned n, double x,
                                    const CharacterTable& chi,
                                    const QParams& params) {
    check_nx(n, x);
    const BigComplex v = chi_beta_distribution_big(n, big(x), chi, params);
    return {finish(v), 0.0, 0, true, ChiBetaRoute::Distribution};
}

ChiBetaResult chi_beta_closed(unsigned n, double x, const CharacterTable& chi,
                              const QParams& params) {
    check_nx(n, x);
    const BigComplex v = chi_beta_closed_big(n, big(x), chi, params);
    return {finish(v), 0.0, 0, true, ChiBetaRoute::ClosedForm};
}

SeriesSum<BigComplex> chi_beta_series_big(unsigned n, double x,
                                          const CharacterTable& chi,
                                          const QParams& params,
                                          const SumOptions& opts) {
    check_nx(n, x);
    if (!params.series_route_ok())
        throw Error(errc::convergence_domain,
                    "series route needs h > 1 or h = 1");
    const auto big_chi = series::BigChi::from(chi);
    auto a = series::beta_family_series(n, x, params, &big_chi, opts);
    return {a.value, a.tail_bound, a.terms_used, a.converged};
}

ChiBetaResult chi_beta_series(unsigned n, double x, const CharacterTable& chi,
                              const QParams& params, const SumOptions& opts) {
    auto s = chi_beta_series_big(n, x, chi, params, opts);
    return {finish(s.value), s.tail_bound, s.terms_used, s.converged,
            ChiBetaRoute::Series};
}

SeriesSum<BigComplex> hurwitz_l_big(std::complex<double> s, double x,
                                    const CharacterTable& chi,
                                    const QParams& params,
                                    const SumOptions& opts) {
    detail_zeta::validate_s(s);
    require_finite(x, "x");
    if (!(x > 0.0)) throw Error(errc::domain, "x must be > 0");
    detail_zeta::validate_series_domain(params);
    const auto big_chi = series::BigChi::from(chi);
    auto a = series::zeta_family_series(s, x, 0, params, &big_chi, opts);
    return {a.value, a.tail_bound, a.terms_used, a.converged};
}

SeriesSum<BigComplex> l_function_big(std::complex<double> s,
                                     const CharacterTable& chi,
                                     const QParams& params,
                                     const SumOptions& opts,
                                     bool allow_principal) {
    detail_zeta::validate_s(s);
    detail_zeta::validate_series_domain(params);
    if (chi.is_principal() && !allow_principal)
        throw Error(errc::principal_character,
                    "Dirichlet-type L rejects principal characters");
    const auto big_chi = series::BigChi::from(chi);
    auto a = series::zeta_family_series(s, 0.0, 1, params, &big_chi, opts);
    return {a.value, a.tail_bound, a.terms_used, a.converged};
}

SeriesResult hurwitz_l(std::complex<double> s, double x,
                       const CharacterTable& chi, const QParams& params,
                       const SumOptions& opts) {
    return detail_zeta::round_result(hurwitz_l_big(s, x, chi, params, opts));
}

SeriesResult l_function(std::complex<double> s, const CharacterTable& chi,
                        const QParams& params, const SumOptions& opts,
                        bool allow_principal) {
    return detail_zeta::round_result(
        l_function_big(s, chi, params, opts, allow_principal));
}

}  // namespace hqz
