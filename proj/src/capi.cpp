// extern "C" surface: opaque handles, status codes, thread-local error text.
#include "hqzeta/hqzeta.h"

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "lfunction.hpp"
#include "qkernel.hpp"
#include "verify.hpp"
#include "zeta.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

namespace {

thread_local std::string g_last_error;

hqz_status to_status(hqz::errc code) {
    using hqz::errc;
    switch (code) {
        case errc::ok: return HQZ_OK;
        case errc::bad_argument: return HQZ_ERR_BAD_ARGUMENT;
        case errc::domain: return HQZ_ERR_DOMAIN;
        case errc::pole: return HQZ_ERR_POLE;
        case errc::convergence_domain: return HQZ_ERR_CONVERGENCE_DOMAIN;
        case errc::singular_term: return HQZ_ERR_SINGULAR_TERM;
        case errc::principal_character: return HQZ_ERR_PRINCIPAL_CHARACTER;
        case errc::cap_exceeded: return HQZ_ERR_CAP_EXCEEDED;
        case errc::nonfinite: return HQZ_ERR_NONFINITE;
        case errc::unknown_suite: return HQZ_ERR_UNKNOWN_SUITE;
    }
    return HQZ_ERR_INTERNAL;
}

template <class Fn>
hqz_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return HQZ_OK;
    } catch (const hqz::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HQZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return HQZ_ERR_INTERNAL;
    }
}

hqz_status arg_error(const char* what) {
    g_last_error = what;
    return HQZ_ERR_BAD_ARGUMENT;
}

hqz_series_result pack(const hqz::SeriesResult& r) {
    return {{r.value.real(), r.value.imag()},
            r.tail_bound,
            static_cast<uint64_t>(r.terms_used),
            r.converged ? 1 : 0};
}

hqz_series_result pack(const hqz::BetaResult& r) {
    return {{r.value, 0.0},
            r.tail_bound,
            static_cast<uint64_t>(r.terms_used),
            r.converged ? 1 : 0};
}

hqz_series_result pack(const hqz::ChiBetaResult& r) {
    return {{r.value.real(), r.value.imag()},
            r.tail_bound,
            static_cast<uint64_t>(r.terms_used),
            r.converged ? 1 : 0};
}

}  // namespace

struct hqz_ctx {
    hqz::EvalContext impl;
};

struct hqz_char_group {
    std::vector<hqz::CharacterTable> chars;
    uint32_t modulus = 1;
};

namespace {
const hqz::CharacterTable* get_char(const hqz_char_group* group,
                                    uint32_t index) {
    if (!group || index >= group->chars.size()) return nullptr;
    return &group->chars[index];
}
}  // namespace

extern "C" {

const char* hqz_status_name(hqz_status status) {
    switch (status) {
        case HQZ_OK: return "ok";
        case HQZ_ERR_BAD_ARGUMENT: return "bad-argument";
        case HQZ_ERR_DOMAIN: return "domain";
        case HQZ_ERR_POLE: return "pole";
        case HQZ_ERR_CONVERGENCE_DOMAIN: return "convergence-domain";
        case HQZ_ERR_SINGULAR_TERM: return "singular-term";
        case HQZ_ERR_PRINCIPAL_CHARACTER: return "principal-character";
        case HQZ_ERR_CAP_EXCEEDED: return "cap-exceeded";
        case HQZ_ERR_NONFINITE: return "nonfinite";
        case HQZ_ERR_UNKNOWN_SUITE: return "unknown-suite";
        case HQZ_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* hqz_last_error(void) { return g_last_error.c_str(); }

hqz_ctx* hqz_ctx_new(void) { return new (std::nothrow) hqz_ctx; }

void hqz_ctx_free(hqz_ctx* ctx) { delete ctx; }

hqz_status hqz_ctx_set_tol(hqz_ctx* ctx, double tol) {
    if (!ctx) return arg_error("null context");
    if (!(tol > 0.0) || !std::isfinite(tol))
        return arg_error("tol must be positive");
    ctx->impl.opts.tol = tol;
    return HQZ_OK;
}

hqz_status hqz_ctx_set_max_terms(hqz_ctx* ctx, uint64_t max_terms) {
    if (!ctx) return arg_error("null context");
    if (max_terms == 0) return arg_error("max_terms must be positive");
    ctx->impl.opts.max_terms = static_cast<std::size_t>(max_terms);
    return HQZ_OK;
}

double hqz_ctx_tol(const hqz_ctx* ctx) { return ctx ? ctx->impl.opts.tol : 0.0; }

uint64_t hqz_ctx_max_terms(const hqz_ctx* ctx) {
    return ctx ? ctx->impl.opts.max_terms : 0;
}

hqz_status hqz_q_number(double x, double q, double* out) {
    if (!out) return arg_error("null output");
    return guarded([&] { *out = hqz::q_number(x, q); });
}

hqz_status hqz_q_number_complex(hqz_complex x, double q, hqz_complex* out) {
    if (!out) return arg_error("null output");
    return guarded([&] {
        const auto v = hqz::q_number_complex({x.re, x.im}, q);
        *out = {v.real(), v.imag()};
    });
}

hqz_status hqz_complex_pow(double base, hqz_complex exponent, hqz_complex* out) {
    if (!out) return arg_error("null output");
    return guarded([&] {
        const auto v = hqz::complex_pow(base, {exponent.re, exponent.im});
        *out = {v.real(), v.imag()};
    });
}

hqz_status hqz_beta(hqz_ctx* ctx, hqz_route route, uint32_t n, double x,
                    double q, double h, hqz_series_result* out) {
    if (!ctx || !out) return arg_error("null context or output");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        switch (route) {
            case HQZ_ROUTE_CLOSED_FORM:
                *out = pack(hqz::beta_closed_form(n, x, params));
                break;
            case HQZ_ROUTE_CONVOLUTION:
                *out = pack(hqz::beta_convolution(n, x, params, ctx->impl.cache));
                break;
            case HQZ_ROUTE_SERIES:
                *out = pack(hqz::beta_series(n, x, params, ctx->impl.opts));
                break;
            default:
                throw hqz::Error(hqz::errc::bad_argument,
                                 "route must be closed-form, convolution or "
                                 "series");
        }
    });
}

hqz_status hqz_classical_bernoulli_poly(uint32_t n, double x, double* out) {
    if (!out) return arg_error("null output");
    return guarded([&] { *out = hqz::classical_bernoulli_poly(n, x); });
}

hqz_status hqz_difference_identity_residual(hqz_ctx* ctx, uint32_t m,
                                            uint32_t n_steps, double q,
                                            double h, double* out) {
    if (!ctx || !out) return arg_error("null context or output");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        *out = hqz::difference_identity_residual(m, n_steps, params);
    });
}

hqz_status hqz_hurwitz_zeta(hqz_ctx* ctx, hqz_complex s, double x, double q,
                            double h, hqz_series_result* out) {
    if (!ctx || !out) return arg_error("null context or output");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        *out = pack(hqz::hurwitz_zeta_q({s.re, s.im}, x, params, ctx->impl.opts));
    });
}

hqz_status hqz_zeta(hqz_ctx* ctx, hqz_complex s, double q, double h,
                    hqz_series_result* out) {
    if (!ctx || !out) return arg_error("null context or output");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        *out = pack(hqz::zeta_q({s.re, s.im}, params, ctx->impl.opts));
    });
}

hqz_status hqz_zeta_special_value(hqz_ctx* ctx, uint32_t k, int hurwitz_form,
                                  double x, double q, double h,
                                  hqz_complex* out) {
    if (!ctx || !out) return arg_error("null context or output");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        const auto v = hqz::zeta_special_value(
            k, hurwitz_form ? std::optional<double>(x) : std::nullopt, params);
        *out = {v.real(), v.imag()};
    });
}

hqz_status hqz_char_group_new(uint32_t modulus, hqz_char_group** out) {
    if (!out) return arg_error("null output");
    *out = nullptr;
    return guarded([&] {
        auto group = std::make_unique<hqz_char_group>();
        group->chars = hqz::characters_mod(modulus);
        group->modulus = modulus;
        *out = group.release();
    });
}

void hqz_char_group_free(hqz_char_group* group) { delete group; }

uint32_t hqz_char_group_size(const hqz_char_group* group) {
    return group ? static_cast<uint32_t>(group->chars.size()) : 0;
}

uint32_t hqz_char_group_modulus(const hqz_char_group* group) {
    return group ? group->modulus : 0;
}

hqz_status hqz_char_eval(const hqz_char_group* group, uint32_t index, int64_t a,
                         hqz_complex* out) {
    const auto* chi = get_char(group, index);
    if (!chi || !out) return arg_error("bad character handle or index");
    const auto v = chi->evaluate(a);
    *out = {v.real(), v.imag()};
    return HQZ_OK;
}

hqz_status hqz_char_exponent(const hqz_char_group* group, uint32_t index,
                             int64_t a, int* is_zero, int64_t* num,
                             int64_t* den) {
    const auto* chi = get_char(group, index);
    if (!chi || !is_zero || !num || !den)
        return arg_error("bad character handle or index");
    const auto& v = chi->exponent(a);
    *is_zero = v.zero ? 1 : 0;
    *num = v.num;
    *den = v.den;
    return HQZ_OK;
}

int hqz_char_is_principal(const hqz_char_group* group, uint32_t index) {
    const auto* chi = get_char(group, index);
    return (chi && chi->is_principal()) ? 1 : 0;
}

hqz_status hqz_char_conductor(const hqz_char_group* group, uint32_t index,
                              uint32_t* out) {
    const auto* chi = get_char(group, index);
    if (!chi || !out) return arg_error("bad character handle or index");
    *out = chi->conductor();
    return HQZ_OK;
}

hqz_status hqz_chi_beta(hqz_ctx* ctx, hqz_route route, uint32_t n, double x,
                        const hqz_char_group* group, uint32_t index, double q,
                        double h, hqz_series_result* out) {
    const auto* chi = get_char(group, index);
    if (!ctx || !chi || !out) return arg_error("bad handle or index");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        switch (route) {
            case HQZ_ROUTE_DISTRIBUTION:
                *out = pack(hqz::chi_beta_distribution(n, x, *chi, params));
                break;
            case HQZ_ROUTE_CLOSED_FORM:
                *out = pack(hqz::chi_beta_closed(n, x, *chi, params));
                break;
            case HQZ_ROUTE_SERIES:
                *out = pack(hqz::chi_beta_series(n, x, *chi, params,
                                                 ctx->impl.opts));
                break;
            default:
                throw hqz::Error(hqz::errc::bad_argument,
                                 "route must be distribution, closed-form or "
                                 "series");
        }
    });
}

hqz_status hqz_hurwitz_l(hqz_ctx* ctx, hqz_complex s, double x,
                         const hqz_char_group* group, uint32_t index, double q,
                         double h, hqz_series_result* out) {
    const auto* chi = get_char(group, index);
    if (!ctx || !chi || !out) return arg_error("bad handle or index");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        *out = pack(
            hqz::hurwitz_l({s.re, s.im}, x, *chi, params, ctx->impl.opts));
    });
}

hqz_status hqz_l_function(hqz_ctx* ctx, hqz_complex s,
                          const hqz_char_group* group, uint32_t index, double q,
                          double h, int allow_principal,
                          hqz_series_result* out) {
    const auto* chi = get_char(group, index);
    if (!ctx || !chi || !out) return arg_error("bad handle or index");
    return guarded([&] {
        const auto params = hqz::QParams::make(q, h);
        *out = pack(hqz::l_function({s.re, s.im}, *chi, params, ctx->impl.opts,
                                    allow_principal != 0));
    });
}

const char* hqz_verify_suites(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& name : hqz::verify_suite_names()) {
            if (!s.empty()) s += ",";
            s += name;
        }
        return s;
    }();
    return joined.c_str();
}

hqz_status hqz_verify_run(hqz_ctx* ctx, const char* suite,
                          const hqz_verify_grid* grid, double tol_override,
                          hqz_verify_callback cb, void* user_data,
                          uint32_t* n_passed, uint32_t* n_total) {
    if (!ctx || !suite) return arg_error("null context or suite");
    return guarded([&] {
        hqz::VerifyGrid g;
        if (grid) {
            if (grid->q_values)
                g.q.assign(grid->q_values, grid->q_values + grid->n_q);
            if (grid->h_values)
                g.h.assign(grid->h_values, grid->h_values + grid->n_h);
            if (grid->x_values)
                g.x.assign(grid->x_values, grid->x_values + grid->n_x);
            if (grid->moduli)
                g.moduli.assign(grid->moduli, grid->moduli + grid->n_moduli);
            if (grid->max_degree != 0) g.max_degree = grid->max_degree;
        }
        hqz::ReportSink sink;
        if (cb) {
            sink = [cb, user_data](const hqz::VerifyReport& r) {
                hqz_verify_report c;
                c.identity_id = r.identity_id.c_str();
                c.instance = r.instance.c_str();
                c.lhs = {r.lhs.real(), r.lhs.imag()};
                c.rhs = {r.rhs.real(), r.rhs.imag()};
                c.residual = r.residual;
                c.tolerance = r.tolerance;
                c.passed = r.passed ? 1 : 0;
                cb(&c, user_data);
            };
        }
        const auto summary = hqz::run_verify_suite(suite, g, ctx->impl,
                                                   tol_override, sink);
        if (n_passed) *n_passed = summary.passed;
        if (n_total) *n_total = summary.total;
    });
}

}  // extern "C"
