// Shared evaluator for the two-series sums behind the beta/zeta/L family:
//     S1 = sum_{m>=n0} chi(m) q^{h m + x} [x+m]_q^{p1}
//     S2 = sum_{m>=n0} chi(m) q^{(h-1) m} [x+m]_q^{p2}
// with rigorous geometric tail bounds, evaluated at working precision.
//
// At h = 1 the q^{(h-1)m} family does not converge; the assemblers substitute
// the h->1 limit of the whole second term,
//     lim (h-1)(1-q) sum q^{(h-1)m} chi(m) [x+m]_q^k
//         = (1-q)^{1-k} S_chi / (f ln(1/q)),
// where S_chi is the full-period character sum (1 for the plain case f = 1,
// phi(f) for principal chi, 0 for non-principal chi).
#pragma once

#include "dirichlet.hpp"
#include "qkernel.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace hqz::series {

// Character data lifted to working precision once per evaluation.
struct BigChi {
    unsigned f = 1;
    std::vector<BigComplex> values;  // size f, exact zeros off the units
    long s_chi = 1;                  // full-period sum: phi(f) or 0

    static BigChi from(const CharacterTable& chi) {
        BigChi out;
        out.f = chi.modulus();
        out.values.reserve(out.f);
        for (unsigned a = 0; a < out.f; ++a)
            out.values.push_back(chi.evaluate_big(a));
        out.s_chi = chi.is_principal()
                        ? static_cast<long>(euler_phi(chi.modulus()))
                        : 0;
        return out;
    }
};

// One raw power sum. g is the per-index decay exponent (h or h-1), c the
// constant q-power offset (x for S1, 0 for S2).
struct RawSpec {
    big q;
    double q_d = 0.5;
    double g = 1.0;
    double c = 0.0;
    double x = 0.0;
    std::size_t n0 = 0;
    double tol = kDefaultTol;
    std::size_t max_terms = kDefaultMaxTerms;
};

// sup_{m>=n0} |chi(m) q^{g m + c} [x+m]_q^{p}| <= coeff * (q^g)^{m-n0} with
// coeff constant: [x+m]_q increases from [x+n0]_q towards 1/(1-q), so the sup
// of base^{p_re} sits at an end of that range (positive real bases).
inline double envelope_coeff(const RawSpec& r, double p_re) {
    const double b0 = q_number(r.x + static_cast<double>(r.n0), r.q_d);
    const double bsup = 1.0 / (1.0 - r.q_d);
    const double m = std::max(std::pow(b0, p_re), std::pow(bsup, p_re));
    return std::pow(r.q_d, r.g * static_cast<double>(r.n0) + r.c) * m;
}

namespace detail {

template <class Scalar, class PowFn, class TwistFn>
SeriesSum<Scalar> raw_sum(const RawSpec& r, double p_re, PowFn&& pw,
                          TwistFn&& tw) {
    using boost::multiprecision::pow;
    const double ratio = std::pow(r.q_d, r.g);
    const double coeff = envelope_coeff(r, p_re);
    const big qg_step = pow(r.q, big(r.g));
    big qgm = pow(r.q, big(r.g) * static_cast<long>(r.n0) + big(r.c));
    big qxm = pow(r.q, big(r.x) + static_cast<long>(r.n0));
    const big inv_1mq = 1 / (1 - r.q);
    auto term = [&](std::size_t j) -> Scalar {
        Scalar t = tw(r.n0 + j, qgm, (1 - qxm) * inv_1mq, pw);
        qgm *= qg_step;
        qxm *= r.q;
        return t;
    };
    return sum_geometric_tail_as<Scalar>(term, ratio,
                                         [coeff](std::size_t) { return coeff; },
                                         r.tol, r.max_terms);
}

struct PowInt {
    long e;
    big operator()(const big& base) const { return powi(base, e); }
};
struct PowReal {
    big e;
    big operator()(const big& base) const {
        return boost::multiprecision::pow(base, e);
    }
};
struct PowCplx {
    big re, im;
    BigComplex operator()(const big& base) const {
        return big_pow_complex(base, re, im);
    }
};

}  // namespace detail

// Untwisted real-exponent sums (scalar big).
template <class Pow>
SeriesSum<big> raw_sum_plain(const RawSpec& r, double p_re, const Pow& pw) {
    return detail::raw_sum<big>(
        r, p_re,
        pw, [](std::size_t, const big& qgm, const big& base, const Pow& p) {
            return qgm * p(base);
        });
}

// Character-twisted sums and/or complex exponents (scalar BigComplex).
template <class Pow>
SeriesSum<BigComplex> raw_sum_chi(const RawSpec& r, double p_re, const Pow& pw,
                                  const BigChi& chi) {
    return detail::raw_sum<BigComplex>(
        r, p_re, pw,
        [&chi](std::size_t m, const big& qgm, const big& base, const Pow& p) {
            const BigComplex& cv = chi.values[m % chi.f];
            if (cv.re == 0 && cv.im == 0) return BigComplex{};
            if constexpr (std::is_same_v<decltype(p(base)), big>)
                return cv * (qgm * p(base));
            else
                return p(base) * cv * qgm;
        });
}

template <class Pow>
SeriesSum<BigComplex> raw_sum_cplx(const RawSpec& r, double p_re,
                                   const Pow& pw) {
    return detail::raw_sum<BigComplex>(
        r, p_re,
        pw, [](std::size_t, const big& qgm, const big& base, const Pow& p) {
            return p(base) * qgm;
        });
}

struct Assembled {
    BigComplex value{};
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
};

// beta_k(x)-type series (Cor. 2 / Thm 8 / Cor 10):
//     -k S1(p = k-1) + (h-1)(1-q) S2(p = k)  [or the h=1 limit term].
// Caller validates the convergence flags and the singular (k=0, x=0) plain
// cell; the twisted convention drops S1 entirely at k=0.
inline Assembled beta_family_series(unsigned k, double x, const QParams& prm,
                                    const BigChi* chi, const SumOptions& opts) {
    const big q(prm.q);
    const unsigned f = chi ? chi->f : 1;
    const long s_chi = chi ? chi->s_chi : 1;
    const bool has_first = k >= 1;
    const bool has_second = prm.h > 1.0;
    const double w2 = has_second ? (prm.h - 1.0) * (1.0 - prm.q) : 0.0;
    const int parts = (has_first ? 1 : 0) + (has_second ? 1 : 0);

    Assembled out;
    if (has_first) {
        RawSpec r{q, prm.q, prm.h, x, x, 0, opts.tol / (parts * double(k)),
                  opts.max_terms};
        detail::PowInt pw{static_cast<long>(k) - 1};
        if (chi) {
            auto s = raw_sum_chi(r, double(k) - 1.0, pw, *chi);
            out.value += s.value * big(-static_cast<long>(k));
            out.tail_bound += double(k) * s.tail_bound;
            out.terms_used += s.terms_used;
            out.converged = out.converged && s.converged;
        } else {
            auto s = raw_sum_plain(r, double(k) - 1.0, pw);
            out.value += BigComplex{s.value * -static_cast<long>(k), big(0)};
            out.tail_bound += double(k) * s.tail_bound;
            out.terms_used += s.terms_used;
            out.converged = out.converged && s.converged;
        }
    }
    if (has_second) {
        RawSpec r{q, prm.q, prm.h - 1.0, 0.0, x, 0, opts.tol / (parts * w2),
                  opts.max_terms};
        detail::PowInt pw{static_cast<long>(k)};
        const big w2b = (big(prm.h) - 1) * (1 - q);
        if (chi) {
            auto s = raw_sum_chi(r, double(k), pw, *chi);
            out.value += s.value * w2b;
            out.tail_bound += w2 * s.tail_bound;
            out.terms_used += s.terms_used;
            out.converged = out.converged && s.converged;
        } else {
            auto s = raw_sum_plain(r, double(k), pw);
            out.value += BigComplex{s.value * w2b, big(0)};
            out.tail_bound += w2 * s.tail_bound;
            out.terms_used += s.terms_used;
            out.converged = out.converged && s.converged;
        }
    } else if (prm.h == 1.0 && s_chi != 0) {
        // limit term (1-q)^{1-k} S_chi / (f ln(1/q)), exact
        const big lim = powi(1 - q, 1 - static_cast<long>(k)) * s_chi /
                        (big(static_cast<long>(f)) * big_ln_inv_q(q));
        out.value += BigComplex{lim, big(0)};
    }
    return out;
}

// zeta_q(s, x | h)-type series (Defs. 4/6/11, Eq. 19):
//     S1(p = -s) + ((h-1)(1-q)/(s-1)) S2(p = 1-s)  [or the h=1 limit term].
// n0 = 0 with x > 0 for the Hurwitz forms, n0 = 1 with x = 0 otherwise.
inline Assembled zeta_family_series(std::complex<double> s, double x,
                                    std::size_t n0, const QParams& prm,
                                    const BigChi* chi, const SumOptions& opts) {
    const big q(prm.q);
    const unsigned f = chi ? chi->f : 1;
    const long s_chi = chi ? chi->s_chi : 1;
    const bool has_second = prm.h > 1.0;
    const double abs_sm1 = std::abs(s - 1.0);
    const double w2 =
        has_second ? std::abs(prm.h - 1.0) * (1.0 - prm.q) / abs_sm1 : 0.0;
    const int parts = 1 + (has_second ? 1 : 0);

    const bool s_real = s.imag() == 0.0;
    const bool s_int = s_real && std::nearbyint(s.real()) == s.real() &&
                       std::abs(s.real()) < 1e9;

    Assembled out;

    auto eval_sum = [&](double g, double c, std::complex<double> p,
                        double tol) -> SeriesSum<BigComplex> {
        RawSpec r{q, prm.q, g, c, x, n0, tol, opts.max_terms};
        if (s_int) {
            detail::PowInt pw{static_cast<long>(p.real())};
            if (chi) return raw_sum_chi(r, p.real(), pw, *chi);
            auto v = raw_sum_plain(r, p.real(), pw);
            return {BigComplex{v.value, big(0)}, v.tail_bound, v.terms_used,
                    v.converged};
        }
        if (s_real) {
            detail::PowReal pw{big(p.real())};
            if (chi) return raw_sum_chi(r, p.real(), pw, *chi);
            auto v = raw_sum_plain(r, p.real(), pw);
            return {BigComplex{v.value, big(0)}, v.tail_bound, v.terms_used,
                    v.converged};
        }
        detail::PowCplx pw{big(p.real()), big(p.imag())};
        if (chi) return raw_sum_chi(r, p.real(), pw, *chi);
        return raw_sum_cplx(r, p.real(), pw);
    };

    auto s1 = eval_sum(prm.h, x, -s, opts.tol / parts);
    out.value += s1.value;
    out.tail_bound += s1.tail_bound;
    out.terms_used += s1.terms_used;
    out.converged = s1.converged;

    if (has_second) {
        auto s2 = eval_sum(prm.h - 1.0, 0.0, 1.0 - s, opts.tol / (parts * w2));
        const BigComplex pref =
            BigComplex{(big(prm.h) - 1) * (1 - q), big(0)} /
            BigComplex{big(s.real()) - 1, big(s.imag())};
        out.value += pref * s2.value;
        out.tail_bound += w2 * s2.tail_bound;
        out.terms_used += s2.terms_used;
        out.converged = out.converged && s2.converged;
    } else if (prm.h == 1.0 && s_chi != 0) {
        // limit term (1-q)^s S_chi / ((s-1) f ln(1/q)), exact
        const BigComplex num =
            big_pow_complex(1 - q, big(s.real()), big(s.imag())) * big(s_chi);
        const BigComplex den =
            BigComplex{big(s.real()) - 1, big(s.imag())} *
            (big(static_cast<long>(f)) * big_ln_inv_q(q));
        out.value += num / den;
    }
    return out;
}

}  // namespace hqz::series
