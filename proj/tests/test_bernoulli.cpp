#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernoulli.hpp"

#include <cmath>

using namespace hqz;

namespace {
double rel_err(double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}
}  // namespace

// Reference values computed independently at 60 digits from the defining
// alternating sum.
TEST_CASE("closed form reference values") {
    const QParams p52 = QParams::make(0.5, 2.0);
    CHECK(beta_closed_form(0, 0.0, p52).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(beta_closed_form(1, 0.0, p52).value ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(beta_closed_form(1, 1.0, p52).value ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(beta_closed_form(2, 0.0, p52).value ==
          doctest::Approx(4.0 / 21.0).epsilon(1e-15));
    CHECK(beta_closed_form(3, 1.0, p52).value ==
          doctest::Approx(16.0 / 105.0).epsilon(1e-15));

    CHECK(rel_err(beta_closed_form(2, 0.5, QParams::make(0.3, 3.0)).value,
                  0.04296136432863408758823439) < 1e-15);
    CHECK(rel_err(beta_closed_form(20, 2.7, QParams::make(0.9, 3.5)).value,
                  257296.1604482271579582877) < 1e-14);
    CHECK(rel_err(beta_closed_form(15, 0.0, QParams::make(0.9, 2.0)).value,
                  3.657814710759650353988479) < 1e-14);
    CHECK(rel_err(beta_closed_form(8, 1.0, QParams::make(0.9, 1.0)).value,
                  -0.03852189266669322083025742) < 1e-14);
    CHECK(rel_err(beta_closed_form(5, 2.7, QParams::make(0.3, 1.0)).value,
                  2.436785773298982196202455) < 1e-15);
}

TEST_CASE("h = 1 closed form uses the limit weight") {
    const QParams p = QParams::make(0.5, 1.0);
    // beta_0 = (1-q)/ln(1/q)
    CHECK(beta_closed_form(0, 0.0, p).value ==
          doctest::Approx(0.7213475204444817036799623).epsilon(1e-15));
    CHECK(beta_closed_form(2, 0.0, p).value ==
          doctest::Approx(0.2187234151112601480531827).epsilon(1e-15));
    // continuity in h: h = 1 +- 1e-8 brackets the limit value
    const double lo = beta_closed_form(0, 0.0, QParams::make(0.5, 1.0 - 1e-8)).value;
    const double hi = beta_closed_form(0, 0.0, QParams::make(0.5, 1.0 + 1e-8)).value;
    const double mid = beta_closed_form(0, 0.0, p).value;
    CHECK(std::abs(lo - mid) < 1e-8);
    CHECK(std::abs(hi - mid) < 1e-8);
}

TEST_CASE("beta_0 is independent of x") {
    for (double q : {0.3, 0.9})
        for (double h : {1.0, 2.0, 3.5}) {
            const QParams p = QParams::make(q, h);
            const double b0 = beta_closed_form(0, 0.0, p).value;
            for (double x : {0.5, 1.0, 7.3})
                CHECK(beta_closed_form(0, x, p).value == b0);
        }
    // n = 0 convolution keeps only the beta_0 term
    BetaCache cache;
    const QParams p = QParams::make(0.9, 3.0);
    CHECK(beta_convolution(0, 7.3, p, cache).value ==
          doctest::Approx(2.0 / q_number(2.0, 0.9)).epsilon(1e-15));
}

TEST_CASE("convolution route equals closed form") {
    BetaCache cache;
    for (double q : {0.3, 0.5, 0.9})
        for (double h : {1.0, 2.0, 3.5}) {
            const QParams p = QParams::make(q, h);
            for (unsigned n : {0u, 1u, 5u, 12u, 20u}) {
                // x = 0 collapses to the cached number itself
                CHECK(beta_convolution(n, 0.0, p, cache).value ==
                      beta_closed_form(n, 0.0, p).value);
                for (double x : {0.5, 1.0, 2.7}) {
                    const double c = beta_closed_form(n, x, p).value;
                    const double v = beta_convolution(n, x, p, cache).value;
                    CHECK(std::abs(c - v) <= 1e-10 * (1.0 + std::abs(c)));
                }
            }
        }
}

TEST_CASE("series route reference instances") {
    SumOptions opts;
    const QParams p52 = QParams::make(0.5, 2.0);
    auto r = beta_series(1, 1.0, p52, opts);
    CHECK(r.converged);
    CHECK(r.route == BetaRoute::Series);
    CHECK(std::abs(r.value - 2.0 / 3.0) <= r.tail_bound);
    CHECK(r.tail_bound <= opts.tol);
    CHECK(r.terms_used <= opts.max_terms);

    // x = 0 variant
    auto r0 = beta_series(1, 0.0, p52, opts);
    CHECK(std::abs(r0.value + 2.0 / 3.0) <= r0.tail_bound);

    const QParams p33 = QParams::make(0.3, 3.0);
    auto r2 = beta_series(2, 0.5, p33, opts);
    CHECK(std::abs(r2.value - beta_closed_form(2, 0.5, p33).value) <= 1e-10);

    // h = 1 needs the nonzero limit of the second term
    const QParams p51 = QParams::make(0.5, 1.0);
    auto r3 = beta_series(2, 0.0, p51, opts);
    CHECK(std::abs(r3.value - 0.2187234151112601480531827) <=
          std::max(1e-12, r3.tail_bound));
}

TEST_CASE("series route agreement across the stress cells") {
    SumOptions opts;
    for (auto [n, x, q, h] : {std::tuple{20u, 2.7, 0.9, 3.5},
                              std::tuple{19u, 0.5, 0.9, 1.0},
                              std::tuple{15u, 0.0, 0.9, 2.0},
                              std::tuple{10u, 1.0, 0.3, 1.0}}) {
        const QParams p = QParams::make(q, h);
        const double c = beta_closed_form(n, x, p).value;
        const auto s = beta_series(n, x, p, opts);
        REQUIRE(s.converged);
        CHECK(std::abs(c - s.value) <= std::max(1e-9, 10.0 * s.tail_bound) *
                                           (1.0 + std::abs(c)));
    }
}

TEST_CASE("series route errors") {
    SumOptions opts;
    CHECK_THROWS_AS(beta_series(0, 0.0, QParams::make(0.5, 2.0), opts), Error);
    try {
        beta_series(0, 0.0, QParams::make(0.5, 2.0), opts);
    } catch (const Error& e) {
        CHECK(e.code() == errc::singular_term);
    }
    // k = 0 with x > 0 is fine and equals beta_0
    CHECK(beta_series(0, 0.5, QParams::make(0.5, 2.0), opts).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(beta_series(2, 0.0, QParams::make(0.5, 0.5), opts), Error);
    try {
        beta_series(2, 0.0, QParams::make(0.5, 0.5), opts);
    } catch (const Error& e) {
        CHECK(e.code() == errc::convergence_domain);
    }
    CHECK_THROWS_AS(beta_series(2, -1.0, QParams::make(0.5, 2.0), opts), Error);
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(beta_closed_form(61, 0.0, QParams::make(0.5, 2.0)), Error);
    CHECK_NOTHROW(beta_closed_form(60, 0.0, QParams::make(0.5, 2.0)));
    CHECK_THROWS_AS(classical_bernoulli_poly(61, 0.0), Error);
}

TEST_CASE("difference identity residuals") {
    CHECK(difference_identity_residual(1, 1, QParams::make(0.5, 2.0)) <= 1e-13);
    CHECK(difference_identity_residual(2, 1, QParams::make(0.7, 3.0)) <= 1e-12);
    CHECK(difference_identity_residual(3, 5, QParams::make(0.7, 2.5)) <= 1e-10);
    // m = 0 convention: the m-weighted sum is dropped, identity still holds
    CHECK(difference_identity_residual(0, 4, QParams::make(0.5, 2.0)) <= 1e-13);
    CHECK(difference_identity_residual(0, 3, QParams::make(0.9, 1.0)) <= 1e-13);
    for (double q : {0.3, 0.5, 0.9})
        for (double h : {1.0, 2.0, 3.5})
            for (unsigned m : {1u, 4u, 10u})
                for (unsigned n : {1u, 3u, 8u})
                    CHECK(difference_identity_residual(m, n,
                                                       QParams::make(q, h)) <=
                          1e-10);
}

TEST_CASE("Kronecker identity and its n = 0 exception") {
    for (double q : {0.3, 0.5, 0.9})
        for (double h : {1.0, 2.0, 3.5}) {
            const QParams p = QParams::make(q, h);
            for (unsigned n = 1; n <= 15; ++n) {
                const double lhs = std::pow(q, h - 1.0) *
                                       beta_closed_form(n, 1.0, p).value -
                                   beta_closed_form(n, 0.0, p).value;
                const double delta = (n == 1) ? 1.0 : 0.0;
                CHECK(std::abs(lhs - delta) <= 1e-11);
            }
            // n = 0: q^{h-1} beta_0 - beta_0 = (q^{h-1}-1) beta_0, not 0
            const double b0 = beta_closed_form(0, 0.0, p).value;
            const double lhs0 = std::pow(q, h - 1.0) * b0 - b0;
            CHECK(lhs0 == doctest::Approx((std::pow(q, h - 1.0) - 1.0) * b0)
                              .epsilon(1e-13));
            if (h != 1.0) CHECK(std::abs(lhs0) > 1e-3);
        }
}

TEST_CASE("classical Bernoulli oracle") {
    CHECK(classical_bernoulli_poly(0, 3.7) == 1.0);
    CHECK(classical_bernoulli_poly(1, 0.0) == doctest::Approx(-0.5).epsilon(1e-16));
    CHECK(classical_bernoulli_poly(2, 0.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(classical_bernoulli_poly(12, 0.0) ==
          doctest::Approx(-691.0 / 2730.0).epsilon(1e-14));
    // B_2(x) = x^2 - x + 1/6, B_3(x) = x^3 - 1.5 x^2 + 0.5 x
    for (double x : {0.0, 0.5, 2.0, -1.5}) {
        CHECK(classical_bernoulli_poly(2, x) ==
              doctest::Approx(x * x - x + 1.0 / 6.0).epsilon(1e-14));
        CHECK(classical_bernoulli_poly(3, x) ==
              doctest::Approx(x * x * x - 1.5 * x * x + 0.5 * x).epsilon(1e-14));
    }
}

TEST_CASE("classical limit of the closed form") {
    for (double h : {1.0, 2.0, 5.0})
        for (unsigned n = 0; n <= 8; ++n)
            for (double x : {0.0, 1.0, 0.5}) {
                const double b = classical_bernoulli_poly(n, x);
                const double d3 =
                    std::abs(beta_closed_form(n, x, QParams::make(1.0 - 1e-3, h))
                                 .value -
                             b);
                const double d4 =
                    std::abs(beta_closed_form(n, x, QParams::make(1.0 - 1e-4, h))
                                 .value -
                             b);
                CHECK(d4 <= 1e-2);
                if (d3 > 1e-12) CHECK(d4 < d3);
            }
}
