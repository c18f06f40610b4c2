// Foundational arithmetic: q-numbers, principal-branch complex powers, and
// the convergence-controlled summation engine with geometric tail bounds.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqz {

// Internal working precision. Identity residuals at 1e-10..1e-11 are checked
// on grids where the closed-form sums have condition numbers up to ~1e45;
// binary64 cannot reach them (see tests), 60 digits can with a wide margin.
using big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

struct BigComplex {
    big re{};
    big im{};

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigComplex& a, const big& s) {
    return {a.re * s, a.im * s};
}
inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const big d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline big abs_big(const BigComplex& a) {
    return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im);
}
inline std::complex<double> to_complex(const BigComplex& a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

enum class errc {
    ok = 0,
    bad_argument,
    domain,
    pole,
    convergence_domain,
    singular_term,
    principal_character,
    cap_exceeded,
    nonfinite,
    unknown_suite,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 1000000;
inline constexpr double kPoleGuard = 1e-8;

struct SumOptions {
    double tol = kDefaultTol;
    std::size_t max_terms = kDefaultMaxTerms;
};

// The deformation pair. Constructors validate 0 < q < 1 and finite h and
// derive the series-convergence flags: the q^{hn} family needs h > 0, the
// q^{(h-1)n} family needs h > 1, with h = 1 handled as a limit downstream.
struct QParams {
    double q = 0.5;
    double h = 1.0;

    static QParams make(double q, double h) {
        if (!std::isfinite(q) || !(q > 0.0) || !(q < 1.0))
            throw Error(errc::domain, "q must lie in (0,1)");
        if (!std::isfinite(h))
            throw Error(errc::domain, "h must be finite");
        return QParams{q, h};
    }

    bool series_first_ok() const { return h > 0.0; }
    bool series_second_ok() const { return h > 1.0 || h == 1.0; }
    bool series_route_ok() const { return series_first_ok() && series_second_ok(); }
};

struct SeriesResult {
    std::complex<double> value{};
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
};

// --------------------------------------------------------------------
// q-numbers and principal-branch powers (public binary64 operations)
// --------------------------------------------------------------------

inline double q_number(double x, double q) {
    if (!std::isfinite(q) || !(q > 0.0) || !(q < 1.0))
        throw Error(errc::domain, "q must lie in (0,1)");
    if (!std::isfinite(x)) throw Error(errc::domain, "x must be finite");
    // 1 - q^x via expm1 keeps full accuracy for x near 0.
    return -std::expm1(x * std::log(q)) / (1.0 - q);
}

inline std::complex<double> q_number_complex(std::complex<double> x, double q) {
    if (!std::isfinite(q) || !(q > 0.0) || !(q < 1.0))
        throw Error(errc::domain, "q must lie in (0,1)");
    const std::complex<double> qx = std::exp(x * std::log(q));
    return (1.0 - qx) / (1.0 - q);
}

inline std::complex<double> complex_pow(double base, std::complex<double> exponent) {
    if (!std::isfinite(base) || !(base > 0.0))
        throw Error(errc::domain, "complex_pow requires a positive real base");
    return std::exp(exponent * std::log(base));
}

// --------------------------------------------------------------------
// Summation engine
// --------------------------------------------------------------------

namespace detail {

// Neumaier-compensated accumulator for the binary64 engine.
struct CompensatedReal {
    double sum = 0.0;
    double comp = 0.0;

    void add(double t) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
    }
    double get() const { return sum + comp; }
};

template <class Scalar>
struct Accumulator {
    Scalar value{};
    void add(const Scalar& t) { value += t; }
    Scalar get() const { return value; }
};

template <>
struct Accumulator<std::complex<double>> {
    CompensatedReal re, im;
    void add(const std::complex<double>& t) {
        re.add(t.real());
        im.add(t.imag());
    }
    std::complex<double> get() const { return {re.get(), im.get()}; }
};

}  // namespace detail

template <class Scalar>
struct SeriesSum {
    Scalar value{};
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
    bool converged = true;
};

// Sums term_fn(0) + term_fn(1) + ... with an a-priori geometric tail bound.
// Contract: |term_fn(n)| <= coeff_bound_fn(n) * ratio_bound^n with
// coeff_bound_fn non-increasing over the summed range. Truncation happens at
// the first N with coeff_bound_fn(N) * ratio_bound^N / (1 - ratio_bound) <=
// tol; if N would exceed max_terms the partial sum is returned with
// converged = false (not an error). term_fn is invoked exactly once per index,
// in order, so it may maintain incremental state.
template <class Scalar, class TermFn, class CoeffFn>
SeriesSum<Scalar> sum_geometric_tail_as(TermFn&& term_fn, double ratio_bound,
                                        CoeffFn&& coeff_bound_fn, double tol,
                                        std::size_t max_terms) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw Error(errc::bad_argument, "tol must be positive");
    if (!(ratio_bound > 0.0) || !(ratio_bound < 1.0))
        throw Error(errc::bad_argument, "ratio_bound must lie in (0,1)");
    if (max_terms == 0)
        throw Error(errc::bad_argument, "max_terms must be positive");

    const double inv_gap = 1.0 / (1.0 - ratio_bound);
    detail::Accumulator<Scalar> acc;
    double ratio_pow = 1.0;
    for (std::size_t n = 0; n < max_terms; ++n) {
        if ((n & 4095u) == 0u && n != 0u)
            ratio_pow = std::pow(ratio_bound, static_cast<double>(n));
        const double bound = coeff_bound_fn(n) * ratio_pow * inv_gap;
        if (bound <= tol)
            return {acc.get(), bound, n, true};
        acc.add(term_fn(n));
        ratio_pow *= ratio_bound;
    }
    const double bound = coeff_bound_fn(max_terms) *
                         std::pow(ratio_bound, static_cast<double>(max_terms)) *
                         inv_gap;
    return {acc.get(), bound, max_terms, false};
}

// The public engine: binary64 terms with compensated accumulation.
template <class TermFn, class CoeffFn>
SeriesResult sum_geometric_tail(TermFn&& term_fn, double ratio_bound,
                                CoeffFn&& coeff_bound_fn, double tol,
                                std::size_t max_terms) {
    auto r = sum_geometric_tail_as<std::complex<double>>(
        std::forward<TermFn>(term_fn), ratio_bound,
        std::forward<CoeffFn>(coeff_bound_fn), tol, max_terms);
    return {r.value, r.tail_bound, r.terms_used, r.converged};
}

// --------------------------------------------------------------------
// Internal-precision helpers
// --------------------------------------------------------------------

inline big big_ln_inv_q(const big& q) { return -boost::multiprecision::log(q); }

// [z]_q at working precision.
inline big q_number_big(const big& z, const big& q) {
    using boost::multiprecision::pow;
    return (1 - pow(q, z)) / (1 - q);
}

// Integer power; powi(0, 0) = 1 by the empty-product convention used by the
// series forms.
inline big powi(const big& base, long e) {
    if (e == 0) return big(1);
    if (e < 0) return 1 / powi(base, -e);
    big acc(1), b = base;
    unsigned long u = static_cast<unsigned long>(e);
    while (u != 0) {
        if (u & 1u) acc *= b;
        b *= b;
        u >>= 1;
    }
    return acc;
}

// base^(re + i*im) for base > 0 through the real logarithm.
inline BigComplex big_pow_complex(const big& base, const big& re, const big& im) {
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::sin;
    const big lb = log(base);
    const big mag = exp(re * lb);
    const big ang = im * lb;
    return {mag * cos(ang), mag * sin(ang)};
}

inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw Error(errc::bad_argument, std::string(name) + " must be finite");
}

}  // namespace hqz
