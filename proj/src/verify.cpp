#include "verify.hpp"

#include "dirichlet.hpp"
#include "lfunction.hpp"
#include "series_core.hpp"
#include "zeta.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <random>

namespace hqz {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::pow;

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, format);
    std::vsnprintf(buf, sizeof buf, format, ap);
    va_end(ap);
    return buf;
}

struct Runner {
    const VerifyGrid& grid;
    EvalContext& ctx;
    double tol_override;
    const ReportSink& sink;
    VerifySummary summary;

    double base_tol(double spec_tol) const {
        return tol_override > 0.0 ? tol_override : spec_tol;
    }

    void emit(const std::string& id, const std::string& instance,
              std::complex<double> lhs, std::complex<double> rhs,
              double residual, double tolerance) {
        VerifyReport r{id, instance, lhs, rhs, residual, tolerance,
                       residual <= tolerance};
        ++summary.total;
        if (r.passed) ++summary.passed;
        if (sink) sink(r);
    }

    void emit_big(const std::string& id, const std::string& instance,
                  const BigComplex& lhs, const BigComplex& rhs,
                  double tolerance) {
        emit(id, instance, to_complex(lhs), to_complex(rhs),
             static_cast<double>(abs_big(lhs - rhs)), tolerance);
    }
};

// ----------------------------------------------------------------- //
// route-agreement: Eq. (3) vs Prop. 1 vs Cor. 2                      //
// ----------------------------------------------------------------- //
void suite_route_agreement(Runner& run) {
    for (double qd : run.grid.q) {
        for (double hd : run.grid.h) {
            const QParams prm = QParams::make(qd, hd);
            const big q(qd), h(hd);
            const auto numbers = run.ctx.cache.numbers(prm, run.grid.max_degree);
            for (unsigned n = 0; n <= run.grid.max_degree; ++n) {
                for (double xd : run.grid.x) {
                    const std::string inst =
                        fmt("n=%u x=%g q=%g h=%g", n, xd, qd, hd);
                    const big closed = beta_closed_big(n, big(xd), q, h);
                    const big conv =
                        beta_convolution_big(n, big(xd), q, h, numbers);
                    const double scale =
                        1.0 + std::abs(static_cast<double>(closed));
                    run.emit("route-agreement", inst + " closed-vs-convolution",
                             {static_cast<double>(closed), 0.0},
                             {static_cast<double>(conv), 0.0},
                             static_cast<double>(abs(closed - conv)),
                             run.base_tol(1e-10) * scale);
                    if (prm.series_route_ok() && !(n == 0 && xd == 0.0)) {
                        const auto ser =
                            beta_series_big(n, xd, prm, run.ctx.opts);
                        run.emit("route-agreement", inst + " closed-vs-series",
                                 {static_cast<double>(closed), 0.0},
                                 {static_cast<double>(ser.value), 0.0},
                                 static_cast<double>(abs(closed - ser.value)),
                                 std::max(run.base_tol(1e-9),
                                          10.0 * ser.tail_bound));
                    }
                }
            }
        }
    }
}

// ----------------------------------------------------------------- //
// thm3: difference identity; both sides independent                  //
// ----------------------------------------------------------------- //
void suite_thm3(Runner& run) {
    for (double qd : run.grid.q)
        for (double hd : run.grid.h) {
            const QParams prm = QParams::make(qd, hd);
            for (unsigned m = 0; m <= 10; ++m)
                for (unsigned n = 1; n <= 8; ++n) {
                    const double r = difference_identity_residual(m, n, prm);
                    run.emit("thm3",
                             fmt("m=%u n_steps=%u q=%g h=%g", m, n, qd, hd),
                             {r, 0.0}, {0.0, 0.0}, r, run.base_tol(1e-10));
                }
        }
}

// ----------------------------------------------------------------- //
// eq6: beta_0 value and the Kronecker identity                       //
// ----------------------------------------------------------------- //
void suite_eq6(Runner& run) {
    for (double qd : run.grid.q)
        for (double hd : run.grid.h) {
            const big q(qd), h(hd);
            const big b0_expected = beta_weight(h - 1, q);
            for (double xd : run.grid.x) {
                const big b0 = beta_closed_big(0, big(xd), q, h);
                run.emit("eq6", fmt("beta0 x=%g q=%g h=%g", xd, qd, hd),
                         {static_cast<double>(b0), 0.0},
                         {static_cast<double>(b0_expected), 0.0},
                         static_cast<double>(abs(b0 - b0_expected)),
                         run.base_tol(1e-11));
            }
            const big qh1 = pow(q, h - 1);
            for (unsigned n = 1; n <= 15; ++n) {
                const big lhs = qh1 * beta_closed_big(n, big(1), q, h) -
                                beta_closed_big(n, big(0), q, h);
                const big delta = (n == 1) ? 1 : 0;
                run.emit("eq6", fmt("kronecker n=%u q=%g h=%g", n, qd, hd),
                         {static_cast<double>(lhs), 0.0},
                         {static_cast<double>(delta), 0.0},
                         static_cast<double>(abs(lhs - delta)),
                         run.base_tol(1e-11));
            }
        }
}

// ----------------------------------------------------------------- //
// thm5: zeta_q(1-k, x | h) = -beta_k(x)/k                            //
// ----------------------------------------------------------------- //
void suite_thm5(Runner& run) {
    static const double xs[] = {0.5, 1.0, 2.0};
    for (double qd : run.grid.q)
        for (double hd : run.grid.h) {
            const QParams prm = QParams::make(qd, hd);
            if (!prm.series_route_ok()) continue;
            for (unsigned k = 1; k <= 6; ++k)
                for (double xd : xs) {
                    const auto lhs = hurwitz_zeta_q_big(
                        {1.0 - static_cast<double>(k), 0.0}, xd, prm,
                        run.ctx.opts);
                    const big rhs =
                        -beta_closed_big(k, big(xd), big(qd), big(hd)) /
                        static_cast<long>(k);
                    run.emit("thm5", fmt("k=%u x=%g q=%g h=%g", k, xd, qd, hd),
                             to_complex(lhs.value),
                             {static_cast<double>(rhs), 0.0},
                             static_cast<double>(
                                 abs_big(lhs.value - BigComplex{rhs, big(0)})),
                             std::max(run.base_tol(1e-9),
                                      10.0 * lhs.tail_bound));
                }
        }
}

// ----------------------------------------------------------------- //
// cor7: zeta_q(1-k | h) = -beta_k/k for k >= 2; at k = 1 the         //
// Eq. (10)-route value holds and the literal statement misses by     //
// exactly delta_{11} = 1 (documented erratum check).                 //
// ----------------------------------------------------------------- //
void suite_cor7(Runner& run) {
    for (double qd : run.grid.q)
        for (double hd : run.grid.h) {
            const QParams prm = QParams::make(qd, hd);
            if (!prm.series_route_ok()) continue;
            const big q(qd), h(hd);
            for (unsigned k = 2; k <= run.grid.max_degree; ++k) {
                const auto lhs = zeta_q_big({1.0 - static_cast<double>(k), 0.0},
                                            prm, run.ctx.opts);
                const big rhs = -beta_closed_big(k, big(0), q, h) /
                                static_cast<long>(k);
                run.emit("cor7", fmt("k=%u q=%g h=%g", k, qd, hd),
                         to_complex(lhs.value), {static_cast<double>(rhs), 0.0},
                         static_cast<double>(
                             abs_big(lhs.value - BigComplex{rhs, big(0)})),
                         std::max(run.base_tol(1e-9), 10.0 * lhs.tail_bound));
            }
            // k = 1
            const auto z0 = zeta_q_big({0.0, 0.0}, prm, run.ctx.opts);
            const big eq10 = -pow(q, h - 1) * beta_closed_big(1, big(1), q, h);
            run.emit("cor7-erratum",
                     fmt("k=1 eq10-route q=%g h=%g", qd, hd),
                     to_complex(z0.value), {static_cast<double>(eq10), 0.0},
                     static_cast<double>(
                         abs_big(z0.value - BigComplex{eq10, big(0)})),
                     std::max(run.base_tol(1e-9), 10.0 * z0.tail_bound));
            // literal Corollary 7 at k = 1 must fail by exactly 1
            const big lit = -beta_closed_big(1, big(0), q, h);
            const double miss = static_cast<double>(
                abs_big(z0.value - BigComplex{lit, big(0)}));
            run.emit("cor7-erratum",
                     fmt("k=1 literal-fails-by-1 q=%g h=%g", qd, hd),
                     to_complex(z0.value), {static_cast<double>(lit), 0.0},
                     std::abs(miss - 1.0),
                     std::max(run.base_tol(1e-9), 10.0 * z0.tail_bound));
        }
}

// ----------------------------------------------------------------- //
// chi-route-agreement: Eq. (11) vs Eq. (12) vs Thm 8 / Cor 10        //
// ----------------------------------------------------------------- //
void suite_chi_routes(Runner& run) {
    static const double xs[] = {0.0, 0.5, 1.0};
    const unsigned nmax = std::min(run.grid.max_degree, 12u);
    for (std::uint32_t f : run.grid.moduli) {
        const auto chars = characters_mod(f);
        for (const auto& chi : chars)
            for (double qd : run.grid.q)
                for (double hd : run.grid.h) {
                    const QParams prm = QParams::make(qd, hd);
                    for (unsigned n = 0; n <= nmax; ++n)
                        for (double xd : xs) {
                            const std::string inst =
                                fmt("n=%u x=%g f=%u chi=%u q=%g h=%g", n, xd, f,
                                    chi.index(), qd, hd);
                            const BigComplex cl =
                                chi_beta_closed_big(n, big(xd), chi, prm);
                            const BigComplex di =
                                chi_beta_distribution_big(n, big(xd), chi, prm);
                            const double scale =
                                1.0 + std::abs(to_complex(cl));
                            run.emit("chi-route-agreement",
                                     inst + " closed-vs-distribution",
                                     to_complex(cl), to_complex(di),
                                     static_cast<double>(abs_big(cl - di)),
                                     run.base_tol(1e-10) * scale);
                            if (prm.series_route_ok()) {
                                const auto ser = chi_beta_series_big(
                                    n, xd, chi, prm, run.ctx.opts);
                                run.emit("chi-route-agreement",
                                         inst + " closed-vs-series",
                                         to_complex(cl), to_complex(ser.value),
                                         static_cast<double>(
                                             abs_big(cl - ser.value)),
                                         std::max(run.base_tol(1e-9),
                                                  10.0 * ser.tail_bound));
                            }
                        }
                }
    }
}

// ----------------------------------------------------------------- //
// thm12: L_q^h(1-k, chi | x) = -beta_{k,chi}(x)/k                    //
// ----------------------------------------------------------------- //
void suite_thm12(Runner& run) {
    static const double xs[] = {0.5, 1.0};
    for (std::uint32_t f : run.grid.moduli) {
        const auto chars = characters_mod(f);
        for (const auto& chi : chars)
            for (double qd : run.grid.q)
                for (double hd : run.grid.h) {
                    const QParams prm = QParams::make(qd, hd);
                    if (!prm.series_route_ok()) continue;
                    for (unsigned k = 1; k <= 5; ++k)
                        for (double xd : xs) {
                            const auto lhs = hurwitz_l_big(
                                {1.0 - static_cast<double>(k), 0.0}, xd, chi,
                                prm, run.ctx.opts);
                            const BigComplex rhs =
                                chi_beta_closed_big(k, big(xd), chi, prm) *
                                big(-1.0 / static_cast<double>(k));
                            run.emit(
                                "thm12",
                                fmt("k=%u x=%g f=%u chi=%u q=%g h=%g", k, xd, f,
                                    chi.index(), qd, hd),
                                to_complex(lhs.value), to_complex(rhs),
                                static_cast<double>(abs_big(lhs.value - rhs)),
                                std::max(run.base_tol(1e-9),
                                         10.0 * lhs.tail_bound));
                        }
                }
    }
}

// ----------------------------------------------------------------- //
// eq19: L_q^h(1-k, chi) = -beta_{k,chi}/k for non-principal chi      //
// ----------------------------------------------------------------- //
void suite_eq19(Runner& run) {
    for (std::uint32_t f : run.grid.moduli) {
        const auto chars = characters_mod(f);
        for (const auto& chi : chars) {
            if (chi.is_principal()) continue;
            for (double qd : run.grid.q)
                for (double hd : run.grid.h) {
                    const QParams prm = QParams::make(qd, hd);
                    if (!prm.series_route_ok()) continue;
                    for (unsigned k = 1; k <= 5; ++k) {
                        const auto lhs = l_function_big(
                            {1.0 - static_cast<double>(k), 0.0}, chi, prm,
                            run.ctx.opts);
                        const BigComplex rhs =
                            chi_beta_closed_big(k, big(0), chi, prm) *
                            big(-1.0 / static_cast<double>(k));
                        run.emit("eq19",
                                 fmt("k=%u f=%u chi=%u q=%g h=%g", k, f,
                                     chi.index(), qd, hd),
                                 to_complex(lhs.value), to_complex(rhs),
                                 static_cast<double>(abs_big(lhs.value - rhs)),
                                 std::max(run.base_tol(1e-9),
                                          10.0 * lhs.tail_bound));
                    }
                }
        }
    }
}

// ----------------------------------------------------------------- //
// classical-limit: q -> 1 recovers B_n(x), B_{1,chi4} = -1/2, and    //
// zeta(2), zeta(4); deviations shrink monotonically in eps.          //
// ----------------------------------------------------------------- //
void suite_classical(Runner& run) {
    static const double eps_list[] = {1e-3, 1e-4, 1e-5};
    static const double hs[] = {1.0, 2.0, 5.0};
    static const double xs[] = {0.0, 1.0, 0.5};

    auto emit_monotone = [&](const std::string& inst, const double dev[3]) {
        const double r1 = dev[1] / std::max(dev[0], 1e-300);
        const double r2 = dev[2] / std::max(dev[1], 1e-300);
        run.emit("classical-limit", inst + " monotone", {dev[1], 0.0},
                 {dev[2], 0.0}, std::max(r1, r2), 1.0);
    };

    for (double hd : hs)
        for (unsigned n = 0; n <= 8; ++n)
            for (double xd : xs) {
                double dev[3];
                for (int i = 0; i < 3; ++i) {
                    const big q = 1 - big(eps_list[i]);
                    dev[i] = static_cast<double>(
                        abs(beta_closed_big(n, big(xd), q, big(hd)) -
                            classical_bernoulli_poly_big(n, big(xd))));
                }
                const std::string inst = fmt("beta n=%u x=%g h=%g", n, xd, hd);
                run.emit("classical-limit", inst + " eps=1e-4", {dev[1], 0.0},
                         {0.0, 0.0}, dev[1], run.base_tol(1e-2));
                emit_monotone(inst, dev);
            }

    const auto chi4 = characters_mod(4);
    const CharacterTable& chi = chi4[1];
    for (double hd : hs) {
        double dev[3];
        for (int i = 0; i < 3; ++i) {
            const QParams prm = QParams::make(1.0 - eps_list[i], hd);
            const BigComplex v = chi_beta_distribution_big(1, big(0), chi, prm);
            dev[i] = static_cast<double>(abs_big(v - BigComplex{big(-0.5), big(0)}));
        }
        const std::string inst = fmt("chi-beta f=4 n=1 h=%g", hd);
        run.emit("classical-limit", inst + " eps=1e-4", {dev[1], 0.0},
                 {-0.5, 0.0}, dev[1], run.base_tol(1e-2));
        emit_monotone(inst, dev);
    }

    // zeta_q(2m | 1) -> pi^2/6, pi^4/90; long q -> 1 series
    static const big pi_big = 4 * boost::multiprecision::atan(big(1));
    const big targets[2] = {pi_big * pi_big / 6,
                            pi_big * pi_big * pi_big * pi_big / 90};
    const double s_vals[2] = {2.0, 4.0};
    SumOptions zopts;
    zopts.tol = 1e-7;
    zopts.max_terms = 8000000;
    for (int t = 0; t < 2; ++t) {
        double dev[3];
        for (int i = 0; i < 3; ++i) {
            const QParams prm = QParams::make(1.0 - eps_list[i], 1.0);
            const auto z = zeta_q_big({s_vals[t], 0.0}, prm, zopts);
            dev[i] = static_cast<double>(
                abs_big(z.value - BigComplex{targets[t], big(0)}));
        }
        const std::string inst = fmt("zeta s=%g h=1", s_vals[t]);
        run.emit("classical-limit", inst + " eps=1e-4", {dev[1], 0.0},
                 {static_cast<double>(targets[t]), 0.0}, dev[1],
                 run.base_tol(2e-3));
        emit_monotone(inst, dev);
    }
}

// ----------------------------------------------------------------- //
// characters: counts, orthogonality, multiplicativity, exact orders  //
// ----------------------------------------------------------------- //
void suite_characters(Runner& run) {
    for (std::uint32_t f = 1; f <= 200; ++f) {
        const auto chars = characters_mod(f);
        const double count = static_cast<double>(chars.size());
        const double phi = static_cast<double>(euler_phi(f));
        run.emit("characters", fmt("count f=%u", f), {count, 0.0}, {phi, 0.0},
                 std::abs(count - phi), 0.5);
    }

    std::mt19937_64 rng(0x5eedu);
    for (std::uint32_t f = 1; f <= 50; ++f) {
        const auto chars = characters_mod(f);
        for (const auto& chi : chars) {
            detail::Accumulator<std::complex<double>> acc;
            for (std::uint32_t a = 0; a < f; ++a) acc.add(chi.evaluate(a));
            const std::complex<double> sum = acc.get();
            const std::complex<double> target =
                chi.is_principal()
                    ? std::complex<double>(euler_phi(f), 0.0)
                    : std::complex<double>(0.0, 0.0);
            run.emit("characters",
                     fmt("orthogonality f=%u chi=%u", f, chi.index()), sum,
                     target, std::abs(sum - target), run.base_tol(1e-12));

            double worst = 0.0;
            std::uniform_int_distribution<std::int64_t> dist(0, 4 * f + 7);
            for (int i = 0; i < 1000; ++i) {
                const std::int64_t a = dist(rng), b = dist(rng);
                const auto d =
                    chi.evaluate(a * b) - chi.evaluate(a) * chi.evaluate(b);
                worst = std::max(worst, std::abs(d));
            }
            run.emit("characters",
                     fmt("multiplicativity f=%u chi=%u", f, chi.index()),
                     {worst, 0.0}, {0.0, 0.0}, worst, run.base_tol(1e-13));

            const std::uint64_t ord = chi.order();
            unsigned violations = 0;
            for (std::uint32_t a = 0; a < f; ++a) {
                const auto& v = chi.exponent(a);
                if (!v.zero && (static_cast<std::int64_t>(ord) * v.num) % v.den != 0)
                    ++violations;
            }
            run.emit("characters",
                     fmt("root-of-unity-order f=%u chi=%u", f, chi.index()),
                     {static_cast<double>(ord), 0.0}, {0.0, 0.0},
                     static_cast<double>(violations), 0.5);
        }
    }
}

// ----------------------------------------------------------------- //
// tail-bounds: re-evaluation at tol/100 moves the value by less than //
// the reported tail bound                                            //
// ----------------------------------------------------------------- //
void suite_tail_bounds(Runner& run) {
    std::mt19937_64 rng(0x7a11b07dULL);
    std::uniform_real_distribution<double> uq(0.2, 0.95);
    std::uniform_real_distribution<double> uh(1.2, 4.0);
    std::uniform_real_distribution<double> ux(0.3, 3.0);
    std::uniform_real_distribution<double> us(-3.0, 4.0);
    std::uniform_real_distribution<double> ui(-2.0, 2.0);
    const auto chi5 = characters_mod(5);

    SumOptions coarse, fine;
    coarse.tol = 1e-8;
    fine.tol = 1e-10;

    for (int i = 0; i < 100; ++i) {
        const double qd = uq(rng);
        const double hd = (i % 4 == 0) ? 1.0 : uh(rng);
        double sre = us(rng);
        if (std::abs(sre - 1.0) < 0.05) sre += 0.1;
        const double sim = (i % 3 == 0) ? ui(rng) : 0.0;
        const std::complex<double> s{sre, sim};
        const QParams prm = QParams::make(qd, hd);

        SeriesSum<BigComplex> a, b;
        std::string inst;
        switch (i % 3) {
            case 0: {
                a = zeta_q_big(s, prm, coarse);
                b = zeta_q_big(s, prm, fine);
                inst = fmt("zeta s=%g%+gi q=%g h=%g", sre, sim, qd, hd);
                break;
            }
            case 1: {
                const double xd = ux(rng);
                a = hurwitz_zeta_q_big(s, xd, prm, coarse);
                b = hurwitz_zeta_q_big(s, xd, prm, fine);
                inst = fmt("hurwitz-zeta s=%g%+gi x=%g q=%g h=%g", sre, sim, xd,
                           qd, hd);
                break;
            }
            default: {
                const double xd = ux(rng);
                const auto& chi = chi5[1 + (i / 3) % 3];
                a = hurwitz_l_big(s, xd, chi, prm, coarse);
                b = hurwitz_l_big(s, xd, chi, prm, fine);
                inst = fmt("hurwitz-L f=5 chi=%u s=%g%+gi x=%g q=%g h=%g",
                           chi.index(), sre, sim, xd, qd, hd);
                break;
            }
        }
        const double moved = static_cast<double>(abs_big(a.value - b.value));
        run.emit("tail-bounds", inst, to_complex(a.value), to_complex(b.value),
                 moved, a.tail_bound);
    }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{
        "route-agreement", "thm3",  "eq6",
        "thm5",            "cor7",  "chi-route-agreement",
        "thm12",           "eq19",  "classical-limit",
        "characters",      "tail-bounds"};
    return names;
}

VerifySummary run_verify_suite(const std::string& suite, const VerifyGrid& grid,
                               EvalContext& ctx, double tol_override,
                               const ReportSink& sink) {
    Runner run{grid, ctx, tol_override, sink, {}};
    auto dispatch = [&](const std::string& name) {
        if (name == "route-agreement") suite_route_agreement(run);
        else if (name == "thm3") suite_thm3(run);
        else if (name == "eq6") suite_eq6(run);
        else if (name == "thm5") suite_thm5(run);
        else if (name == "cor7") suite_cor7(run);
        else if (name == "chi-route-agreement") suite_chi_routes(run);
        else if (name == "thm12") suite_thm12(run);
        else if (name == "eq19") suite_eq19(run);
        else if (name == "classical-limit") suite_classical(run);
        else if (name == "characters") suite_characters(run);
        else if (name == "tail-bounds") suite_tail_bounds(run);
        else throw Error(errc::unknown_suite, "unknown suite: " + name);
    };
    if (suite == "all") {
        for (const auto& name : verify_suite_names()) dispatch(name);
    } else {
        dispatch(suite);
    }
    return run.summary;
}

}  // namespace hqz
