#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkernel.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace hqz;
using cplx = std::complex<double>;

TEST_CASE("q_number basic values") {
    CHECK(q_number(0.0, 0.5) == 0.0);
    CHECK(q_number(1.0, 0.5) == 1.0);
    CHECK(q_number(2.0, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(q_number(3.0, 0.5) == doctest::Approx(1.75).epsilon(1e-15));
}

TEST_CASE("q_number domain errors") {
    CHECK_THROWS_AS(q_number(1.0, 0.0), Error);
    CHECK_THROWS_AS(q_number(1.0, 1.0), Error);
    CHECK_THROWS_AS(q_number(1.0, -0.5), Error);
    CHECK_THROWS_AS(q_number(1.0, 1.5), Error);
    try {
        q_number(1.0, 2.0);
    } catch (const Error& e) {
        CHECK(e.code() == errc::domain);
    }
}

TEST_CASE("q_number monotone increasing and bounded") {
    for (double q : {0.3, 0.5, 0.9}) {
        double prev = -1.0;
        for (double x = 0.0; x <= 10.0; x += 0.25) {
            const double v = q_number(x, q);
            CHECK(v >= 0.0);
            CHECK(v < 1.0 / (1.0 - q));
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("q_number q->1 Taylor bound at sampled points") {
    // |[x]_q - x| <= 10 eps x^2 holds for x away from 0 (deviation is
    // ~eps x(1-x)/2, so tiny x is excluded from the sample).
    for (double eps : {1e-6, 1e-8}) {
        const double q = 1.0 - eps;
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
            CHECK(std::abs(q_number(x, q) - x) <= 10.0 * eps * x * x);
    }
}

TEST_CASE("q_number_complex agrees with the real route and handles periods") {
    CHECK(std::abs(q_number_complex({0.0, 0.0}, 0.3)) == 0.0);
    CHECK(std::abs(q_number_complex({1.0, 0.0}, 0.3) - cplx(1.0, 0.0)) < 1e-15);
    for (double x : {0.5, 2.0, 7.25})
        CHECK(std::abs(q_number_complex({x, 0.0}, 0.7) - q_number(x, 0.7)) <
              1e-14);
    // q^x walks the unit circle: x = (2 pi / ln 2) i gives q^x = e^{-2 pi i}
    const double y = 2.0 * M_PI / std::log(2.0);
    CHECK(std::abs(q_number_complex({0.0, y}, 0.5)) < 1e-14);
}

TEST_CASE("complex_pow principal branch") {
    CHECK(std::abs(complex_pow(2.0, {0.0, 0.0}) - cplx(1.0, 0.0)) == 0.0);
    CHECK(std::abs(complex_pow(1.5, {2.0, 0.0}) - cplx(2.25, 0.0)) < 1e-15);
    // Euler: e^{i pi} = -1, checked against the independent library route
    const double e = std::exp(1.0);
    CHECK(std::abs(complex_pow(e, {0.0, M_PI}) - cplx(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(complex_pow(e, {0.0, M_PI}) -
                   std::pow(cplx(e, 0.0), cplx(0.0, M_PI))) < 1e-15);
    CHECK_THROWS_AS(complex_pow(0.0, {1.0, 0.0}), Error);
    CHECK_THROWS_AS(complex_pow(-2.0, {1.0, 0.0}), Error);
}

TEST_CASE("complex_pow additivity in the exponent") {
    const std::vector<cplx> ss{{0.0, 0.0}, {1.0, 0.0},  {-2.5, 0.0},
                               {0.5, 1.3}, {-1.0, -2.0}, {3.0, 0.7}};
    for (double b : {0.5, 1.5, 3.0})
        for (const auto& s1 : ss)
            for (const auto& s2 : ss) {
                const cplx lhs = complex_pow(b, s1 + s2);
                const cplx rhs = complex_pow(b, s1) * complex_pow(b, s2);
                CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(lhs)));
            }
}

TEST_CASE("|complex_pow| = base^{re}") {
    for (double b : {0.25, 2.0, 7.5})
        for (const cplx s : {cplx(0.5, 1.3), cplx(-2.0, 3.0), cplx(1.0, -0.5)})
            CHECK(std::abs(complex_pow(b, s)) ==
                  doctest::Approx(std::pow(b, s.real())).epsilon(1e-14));
}

TEST_CASE("sum_geometric_tail: plain geometric series") {
    double p = 1.0;
    auto term = [&p](std::size_t) {
        const double t = p;
        p *= 0.5;
        return cplx(t, 0.0);
    };
    auto r = sum_geometric_tail(term, 0.5, [](std::size_t) { return 1.0; },
                                1e-12, 1000000);
    CHECK(r.converged);
    CHECK(r.terms_used == 41);  // first N with 0.5^{N-1} <= 1e-12
    CHECK(r.tail_bound <= 1e-12);
    CHECK(std::abs(r.value - cplx(2.0, 0.0)) <= 1e-12);
}

TEST_CASE("sum_geometric_tail: term cap reached is not an error") {
    auto r = sum_geometric_tail(
        [](std::size_t n) { return cplx(std::pow(0.9, double(n)), 0.0); }, 0.9,
        [](std::size_t) { return 1.0; }, 1e-12, 10);
    CHECK_FALSE(r.converged);
    CHECK(r.terms_used == 10);
    CHECK(r.tail_bound == doctest::Approx(std::pow(0.9, 10) / 0.1).epsilon(1e-12));
}

TEST_CASE("sum_geometric_tail: q-number series closed form") {
    // sum q^{2n} [n+1]_q^0 = 1/(1-q^2) = 4/3 at q = 1/2
    auto r = sum_geometric_tail(
        [](std::size_t n) { return cplx(std::pow(0.25, double(n)), 0.0); },
        0.25, [](std::size_t) { return 1.0; }, 1e-12, 1000000);
    CHECK(r.converged);
    CHECK(std::abs(r.value - cplx(4.0 / 3.0, 0.0)) <= 1e-12);
}

TEST_CASE("sum_geometric_tail argument validation") {
    auto one = [](std::size_t) { return cplx(1.0, 0.0); };
    auto c1 = [](std::size_t) { return 1.0; };
    CHECK_THROWS_AS(sum_geometric_tail(one, 0.5, c1, 0.0, 10), Error);
    CHECK_THROWS_AS(sum_geometric_tail(one, 0.5, c1, -1e-9, 10), Error);
    CHECK_THROWS_AS(sum_geometric_tail(one, 0.0, c1, 1e-9, 10), Error);
    CHECK_THROWS_AS(sum_geometric_tail(one, 1.0, c1, 1e-9, 10), Error);
    CHECK_THROWS_AS(sum_geometric_tail(one, 0.5, c1, 1e-9, 0), Error);
}

TEST_CASE("re-summing at tol/10 moves the value by less than the tail bound") {
    // a few decay shapes: pure geometric, polynomially weighted, oscillating
    struct Shape {
        double ratio;
        std::function<cplx(std::size_t)> term;
        std::function<double(std::size_t)> coeff;
    };
    std::vector<Shape> shapes;
    shapes.push_back({0.6,
                      [](std::size_t n) {
                          return cplx(std::pow(0.6, double(n)), 0.0);
                      },
                      [](std::size_t) { return 1.0; }});
    shapes.push_back({0.8,
                      [](std::size_t n) {
                          const double v = std::pow(0.8, double(n)) /
                                           (1.0 + double(n));
                          return cplx(v, -0.5 * v);
                      },
                      [](std::size_t) { return 2.0; }});
    shapes.push_back({0.35,
                      [](std::size_t n) {
                          const double v = std::pow(0.35, double(n));
                          return cplx((n % 2 == 0) ? v : -v, v);
                      },
                      [](std::size_t) { return 2.0; }});
    for (auto& sh : shapes)
        for (double tol : {1e-6, 1e-9, 1e-11}) {
            auto coarse = sum_geometric_tail(sh.term, sh.ratio, sh.coeff, tol,
                                             1000000);
            auto fine = sum_geometric_tail(sh.term, sh.ratio, sh.coeff,
                                           tol / 10.0, 1000000);
            REQUIRE(coarse.converged);
            REQUIRE(fine.converged);
            CHECK(std::abs(coarse.value - fine.value) < coarse.tail_bound);
        }
}

TEST_CASE("QParams validation and convergence flags") {
    CHECK_THROWS_AS(QParams::make(0.0, 1.0), Error);
    CHECK_THROWS_AS(QParams::make(1.0, 1.0), Error);
    CHECK_THROWS_AS(QParams::make(0.5, std::nan("")), Error);
    const auto p1 = QParams::make(0.5, 1.0);
    CHECK(p1.series_first_ok());
    CHECK(p1.series_second_ok());
    CHECK(p1.series_route_ok());
    const auto p2 = QParams::make(0.5, 0.5);
    CHECK(p2.series_first_ok());
    CHECK_FALSE(p2.series_second_ok());
    CHECK_FALSE(p2.series_route_ok());
    const auto p3 = QParams::make(0.5, -1.0);
    CHECK_FALSE(p3.series_first_ok());
    CHECK(QParams::make(0.5, 3.5).series_route_ok());
}
