// hqzeta command-line front end: evaluation, table sweeps, character
// listings, and the identity-verification suites. Links the C API only.
#include "hqzeta/hqzeta.h"

#include <CLI11.hpp>

#include "complex_parse.hpp"
#include "kvconfig.hpp"

#include <complex>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

// ------------------------------------------------------------------ //
// formatting                                                          //
// ------------------------------------------------------------------ //

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

struct Field {
    enum Kind { Num, Str, Bool };
    std::string key;
    std::string text;  // canonical text (numbers unquoted, bools true/false)
    Kind kind = Num;
    bool omit_when_empty = false;
};

Field fnum(std::string key, double v) { return {std::move(key), g17(v), Field::Num}; }
Field fint(std::string key, long long v) {
    return {std::move(key), std::to_string(v), Field::Num};
}
Field fstr(std::string key, std::string v) {
    return {std::move(key), std::move(v), Field::Str};
}
Field fbool(std::string key, bool v) {
    return {std::move(key), v ? "true" : "false", Field::Bool};
}
Field fempty(std::string key) { return {std::move(key), "", Field::Str, true}; }

class Writer {
public:
    Writer(bool json, bool header, std::string command)
        : json_(json), header_(header), command_(std::move(command)) {}

    void meta() {
        if (!header_) return;
        if (json_) {
            std::cout << "{\"meta\":{\"tool\":\"hqzeta\",\"version\":\""
                      << kVersion << "\",\"command\":\""
                      << json_escape(command_) << "\"}}\n";
        } else {
            std::cout << "# hqzeta " << kVersion << " " << command_ << "\n";
        }
    }

    void columns(const std::vector<std::string>& names) {
        if (json_ || !header_) return;
        for (std::size_t i = 0; i < names.size(); ++i)
            std::cout << (i ? "," : "") << names[i];
        std::cout << "\n";
    }

    void row(const std::vector<Field>& fields) {
        if (json_) {
            std::cout << "{";
            bool first = true;
            for (const auto& f : fields) {
                if (f.omit_when_empty && f.text.empty()) continue;
                std::cout << (first ? "" : ",") << "\"" << f.key << "\":";
                if (f.kind == Field::Str)
                    std::cout << "\"" << json_escape(f.text) << "\"";
                else
                    std::cout << f.text;
                first = false;
            }
            std::cout << "}\n";
        } else {
            for (std::size_t i = 0; i < fields.size(); ++i)
                std::cout << (i ? "," : "") << fields[i].text;
            std::cout << "\n";
        }
    }

    // verify summary: always printed, even with --no-header
    void summary(std::uint32_t passed, std::uint32_t total) {
        if (json_)
            std::cout << "{\"summary\":{\"passed\":" << passed
                      << ",\"total\":" << total << "}}\n";
        else
            std::cout << "# passed " << passed << "/" << total << "\n";
    }

private:
    bool json_;
    bool header_;
    std::string command_;
};

int fail_usage(const std::string& msg) {
    std::cerr << "error: usage: " << msg << "\n";
    return 2;
}

int fail_status(hqz_status st) {
    std::cerr << "error: " << hqz_status_name(st) << ": " << hqz_last_error()
              << "\n";
    return 2;
}

// ------------------------------------------------------------------ //
// list parsing                                                        //
// ------------------------------------------------------------------ //

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// integers: "3", "1,2,5", "0:8" (inclusive range)
bool parse_int_list(const std::string& s, std::vector<long long>& out) {
    for (const auto& tok : split_commas(s)) {
        const auto colon = tok.find(':');
        if (colon != std::string::npos) {
            long long a, b;
            try {
                a = std::stoll(tok.substr(0, colon));
                b = std::stoll(tok.substr(colon + 1));
            } catch (...) {
                return false;
            }
            if (b < a) return false;
            for (long long v = a; v <= b; ++v) out.push_back(v);
        } else {
            try {
                std::size_t used = 0;
                out.push_back(std::stoll(tok, &used));
                if (used != tok.size()) return false;
            } catch (...) {
                return false;
            }
        }
    }
    return true;
}

bool parse_double_list(const std::string& s, std::vector<double>& out) {
    for (const auto& tok : split_commas(s)) {
        double v;
        if (!hqzcli::parse_double(tok, v)) return false;
        out.push_back(v);
    }
    return true;
}

bool parse_complex_list(const std::string& s,
                        std::vector<std::complex<double>>& out) {
    for (const auto& tok : split_commas(s)) {
        double re, im;
        if (!hqzcli::parse_complex(tok, re, im)) return false;
        out.emplace_back(re, im);
    }
    return true;
}

// ------------------------------------------------------------------ //
// configuration                                                       //
// ------------------------------------------------------------------ //

struct Config {
    double tol = 1e-12;
    std::uint64_t max_terms = 1000000;
    std::vector<double> grid_q{0.3, 0.5, 0.9};
    std::vector<double> grid_h{1.0, 2.0, 3.5};
    std::vector<double> grid_x{0.0, 0.5, 1.0, 2.7};
    std::vector<std::uint32_t> grid_moduli{1, 3, 4, 5, 8};
    std::uint32_t grid_max_degree = 10;
};

bool apply_config_file(const std::string& path, Config& cfg,
                       std::string& error) {
    hqzcli::KvConfig kv;
    if (!hqzcli::load_kv_config(path, kv, error)) return false;
    auto doubles = [&](const char* key, std::vector<double>& out) {
        auto it = kv.find(key);
        if (it == kv.end()) return true;
        std::vector<double> v;
        for (const auto& tok : it->second) {
            double d;
            if (!hqzcli::parse_double(tok, d)) {
                error = std::string("config: bad number in ") + key;
                return false;
            }
            v.push_back(d);
        }
        if (v.empty()) {
            error = std::string("config: empty list for ") + key;
            return false;
        }
        out = std::move(v);
        return true;
    };
    if (!doubles("grid.q", cfg.grid_q)) return false;
    if (!doubles("grid.h", cfg.grid_h)) return false;
    if (!doubles("grid.x", cfg.grid_x)) return false;
    if (auto it = kv.find("grid.moduli"); it != kv.end()) {
        std::vector<std::uint32_t> v;
        for (const auto& tok : it->second) {
            try {
                v.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            } catch (...) {
                error = "config: bad modulus in grid.moduli";
                return false;
            }
        }
        if (v.empty()) {
            error = "config: empty list for grid.moduli";
            return false;
        }
        cfg.grid_moduli = std::move(v);
    }
    if (auto it = kv.find("grid.max_degree"); it != kv.end() && !it->second.empty()) {
        try {
            cfg.grid_max_degree = static_cast<std::uint32_t>(std::stoul(it->second[0]));
        } catch (...) {
            error = "config: bad grid.max_degree";
            return false;
        }
    }
    if (auto it = kv.find("tol"); it != kv.end() && !it->second.empty()) {
        if (!hqzcli::parse_double(it->second[0], cfg.tol)) {
            error = "config: bad tol";
            return false;
        }
    }
    if (auto it = kv.find("max_terms"); it != kv.end() && !it->second.empty()) {
        try {
            cfg.max_terms = std::stoull(it->second[0]);
        } catch (...) {
            error = "config: bad max_terms";
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------------ //
// shared evaluation state                                             //
// ------------------------------------------------------------------ //

struct CtxDeleter {
    void operator()(hqz_ctx* p) const { hqz_ctx_free(p); }
};
struct GroupDeleter {
    void operator()(hqz_char_group* p) const { hqz_char_group_free(p); }
};

struct Engine {
    std::unique_ptr<hqz_ctx, CtxDeleter> ctx{hqz_ctx_new()};
    std::map<std::uint32_t, std::unique_ptr<hqz_char_group, GroupDeleter>> groups;

    hqz_char_group* group(std::uint32_t f, hqz_status& st) {
        auto it = groups.find(f);
        if (it != groups.end()) {
            st = HQZ_OK;
            return it->second.get();
        }
        hqz_char_group* g = nullptr;
        st = hqz_char_group_new(f, &g);
        if (st != HQZ_OK) return nullptr;
        groups[f] = std::unique_ptr<hqz_char_group, GroupDeleter>(g);
        return g;
    }
};

const char* route_name(hqz_route r) {
    switch (r) {
        case HQZ_ROUTE_CLOSED_FORM: return "closed-form";
        case HQZ_ROUTE_CONVOLUTION: return "convolution";
        case HQZ_ROUTE_SERIES: return "series";
        case HQZ_ROUTE_DISTRIBUTION: return "distribution";
    }
    return "?";
}

// ------------------------------------------------------------------ //
// eval / table                                                        //
// ------------------------------------------------------------------ //

struct SweepOptions {
    std::string target;
    std::vector<long long> n{};
    std::vector<std::complex<double>> s{};
    std::vector<double> x{};
    std::vector<double> q{};
    std::vector<double> h{};
    std::vector<long long> moduli{};
    std::vector<long long> chi_index{};  // empty => all characters
    hqz_route route = HQZ_ROUTE_CLOSED_FORM;
    bool allow_principal = false;
};

bool target_uses_degree(const std::string& t) {
    return t == "beta" || t == "chi-beta";
}
bool target_uses_s(const std::string& t) { return !target_uses_degree(t); }
bool target_uses_x(const std::string& t) {
    return t == "beta" || t == "chi-beta" || t == "hurwitz-zeta" ||
           t == "hurwitz-L";
}
bool target_uses_chi(const std::string& t) {
    return t == "chi-beta" || t == "L" || t == "hurwitz-L";
}

std::vector<std::string> sweep_columns(const std::string& t) {
    std::vector<std::string> cols{"target"};
    if (target_uses_degree(t)) cols.push_back("route");
    if (target_uses_degree(t)) cols.push_back("n");
    if (target_uses_s(t)) {
        cols.push_back("s_re");
        cols.push_back("s_im");
    }
    if (target_uses_x(t)) cols.push_back("x");
    if (target_uses_chi(t)) {
        cols.push_back("modulus");
        cols.push_back("char_index");
    }
    cols.push_back("q");
    cols.push_back("h");
    cols.push_back("value_re");
    cols.push_back("value_im");
    cols.push_back("tail_bound");
    cols.push_back("terms_used");
    cols.push_back("status");
    return cols;
}

struct RowResult {
    bool ok = false;          // status == ok (converged)
    bool usable_value = false;
    std::string status = "ok";
    hqz_series_result r{};
};

// One grid point. Inputs that do not apply to the target are ignored.
RowResult eval_point(Engine& eng, const SweepOptions& sw, long long n,
                     std::complex<double> s, double x, std::uint32_t f,
                     std::uint32_t chi, double q, double h) {
    RowResult out;
    hqz_status st = HQZ_OK;
    hqz_series_result r{};
    if (sw.target == "beta") {
        st = hqz_beta(eng.ctx.get(), sw.route, static_cast<std::uint32_t>(n), x,
                      q, h, &r);
    } else if (sw.target == "chi-beta") {
        auto* g = eng.group(f, st);
        if (g)
            st = hqz_chi_beta(eng.ctx.get(), sw.route,
                              static_cast<std::uint32_t>(n), x, g, chi, q, h,
                              &r);
    } else if (sw.target == "zeta") {
        st = hqz_zeta(eng.ctx.get(), {s.real(), s.imag()}, q, h, &r);
    } else if (sw.target == "hurwitz-zeta") {
        st = hqz_hurwitz_zeta(eng.ctx.get(), {s.real(), s.imag()}, x, q, h, &r);
    } else if (sw.target == "L") {
        auto* g = eng.group(f, st);
        if (g)
            st = hqz_l_function(eng.ctx.get(), {s.real(), s.imag()}, g, chi, q,
                                h, sw.allow_principal ? 1 : 0, &r);
    } else if (sw.target == "hurwitz-L") {
        auto* g = eng.group(f, st);
        if (g)
            st = hqz_hurwitz_l(eng.ctx.get(), {s.real(), s.imag()}, x, g, chi,
                               q, h, &r);
    }
    if (st != HQZ_OK) {
        out.status = hqz_status_name(st);
        return out;
    }
    out.r = r;
    out.usable_value = true;
    if (!r.converged) {
        out.status = "no-convergence";
        return out;
    }
    out.ok = true;
    return out;
}

std::vector<Field> sweep_row(const SweepOptions& sw, long long n,
                             std::complex<double> s, double x, std::uint32_t f,
                             std::uint32_t chi, double q, double h,
                             const RowResult& res, bool echo_route) {
    std::vector<Field> fields;
    fields.push_back(fstr("target", sw.target));
    if (echo_route) fields.push_back(fstr("route", route_name(sw.route)));
    if (target_uses_degree(sw.target)) fields.push_back(fint("n", n));
    if (target_uses_s(sw.target)) {
        fields.push_back(fnum("s_re", s.real()));
        fields.push_back(fnum("s_im", s.imag()));
    }
    if (target_uses_x(sw.target)) fields.push_back(fnum("x", x));
    if (target_uses_chi(sw.target)) {
        fields.push_back(fint("modulus", f));
        fields.push_back(fint("char_index", chi));
    }
    fields.push_back(fnum("q", q));
    fields.push_back(fnum("h", h));
    if (res.usable_value) {
        fields.push_back(fnum("value_re", res.r.value.re));
        fields.push_back(fnum("value_im", res.r.value.im));
        fields.push_back(fnum("tail_bound", res.r.tail_bound));
        fields.push_back(fint("terms_used",
                              static_cast<long long>(res.r.terms_used)));
    } else {
        fields.push_back(fempty("value_re"));
        fields.push_back(fempty("value_im"));
        fields.push_back(fempty("tail_bound"));
        fields.push_back(fempty("terms_used"));
    }
    fields.push_back(fstr("status", res.status));
    return fields;
}

// Shared sweep executor; `single` enforces the eval contract (one grid point,
// exit 2/3 on failure) while table mode reports failures as rows.
int run_sweep(Engine& eng, Writer& writer, const SweepOptions& sw, bool single) {
    const bool deg = target_uses_degree(sw.target);
    const bool use_s = target_uses_s(sw.target);
    const bool use_x = target_uses_x(sw.target);
    const bool use_chi = target_uses_chi(sw.target);

    std::vector<long long> ns = deg ? sw.n : std::vector<long long>{0};
    std::vector<std::complex<double>> ss =
        use_s ? sw.s : std::vector<std::complex<double>>{{0.0, 0.0}};
    std::vector<double> xs = use_x ? sw.x : std::vector<double>{0.0};
    std::vector<long long> fs = use_chi ? sw.moduli : std::vector<long long>{1};
    std::vector<double> qs = sw.q, hs = sw.h;

    if ((deg && ns.empty()) || (use_s && ss.empty()) || (use_x && xs.empty()) ||
        (use_chi && fs.empty()) || qs.empty() || hs.empty())
        return fail_usage("every parameter grid must be non-empty for " +
                          sw.target);
    for (long long v : ns)
        if (v < 0) return fail_usage("degrees must be >= 0");
    for (long long v : fs)
        if (v < 1) return fail_usage("moduli must be >= 1");

    if (single) {
        std::size_t points = ns.size() * ss.size() * xs.size() * fs.size() *
                             qs.size() * hs.size() *
                             std::max<std::size_t>(sw.chi_index.size(), 1);
        if (points != 1)
            return fail_usage("eval expects exactly one value per parameter");
    }

    writer.meta();
    writer.columns(sweep_columns(sw.target));

    bool any_bad = false;
    bool any_unconverged = false;
    for (long long n : ns)
        for (const auto& s : ss)
            for (double x : xs)
                for (long long fl : fs) {
                    // resolve character indices for this modulus
                    std::vector<std::uint32_t> chis{0};
                    if (use_chi) {
                        hqz_status st = HQZ_OK;
                        auto* g = eng.group(static_cast<std::uint32_t>(fl), st);
                        if (!g) {
                            if (single) return fail_status(st);
                            chis = {0};  // emit one failed row below
                            for (double q : qs)
                                for (double h : hs) {
                                    RowResult res;
                                    res.status = hqz_status_name(st);
                                    writer.row(sweep_row(
                                        sw, n, s, x,
                                        static_cast<std::uint32_t>(fl), 0, q, h,
                                        res, deg));
                                    any_bad = true;
                                }
                            continue;
                        }
                        if (sw.chi_index.empty()) {
                            chis.clear();
                            for (std::uint32_t i = 0; i < hqz_char_group_size(g);
                                 ++i)
                                chis.push_back(i);
                        } else {
                            chis.clear();
                            for (long long i : sw.chi_index)
                                chis.push_back(static_cast<std::uint32_t>(i));
                        }
                    }
                    for (std::uint32_t chi : chis)
                        for (double q : qs)
                            for (double h : hs) {
                                const RowResult res = eval_point(
                                    eng, sw, n, s, x,
                                    static_cast<std::uint32_t>(fl), chi, q, h);
                                if (single && !res.usable_value) {
                                    std::cerr << "error: " << res.status << ": "
                                              << hqz_last_error() << "\n";
                                    return 2;
                                }
                                writer.row(sweep_row(
                                    sw, n, s, x, static_cast<std::uint32_t>(fl),
                                    chi, q, h, res, deg));
                                if (!res.ok) any_bad = true;
                                if (res.usable_value && !res.r.converged)
                                    any_unconverged = true;
                            }
                }
    if (single) return any_unconverged ? 3 : 0;
    return any_bad ? 4 : 0;
}

// ------------------------------------------------------------------ //
// chars                                                               //
// ------------------------------------------------------------------ //

int run_chars(Engine& eng, Writer& writer, long long modulus, bool json) {
    if (modulus < 1) return fail_usage("modulus must be >= 1");
    hqz_status st = HQZ_OK;
    auto* g = eng.group(static_cast<std::uint32_t>(modulus), st);
    if (!g) return fail_status(st);

    writer.meta();
    writer.columns({"modulus", "index", "principal", "conductor", "order",
                    "residue", "num", "den"});
    const std::uint32_t f = hqz_char_group_modulus(g);
    for (std::uint32_t i = 0; i < hqz_char_group_size(g); ++i) {
        std::uint32_t cond = 0;
        hqz_char_conductor(g, i, &cond);
        const bool principal = hqz_char_is_principal(g, i) != 0;
        // order = lcm of value denominators
        long long order = 1;
        std::vector<std::array<long long, 3>> values;
        for (std::uint32_t a = 0; a < f; ++a) {
            int zero = 0;
            std::int64_t num = 0, den = 1;
            hqz_char_exponent(g, i, a, &zero, &num, &den);
            if (zero) continue;
            values.push_back({static_cast<long long>(a), num, den});
            order = order / std::gcd(order, den) * den;
        }
        if (json) {
            std::cout << "{\"modulus\":" << f << ",\"index\":" << i
                      << ",\"principal\":" << (principal ? "true" : "false")
                      << ",\"conductor\":" << cond << ",\"order\":" << order
                      << ",\"values\":[";
            for (std::size_t k = 0; k < values.size(); ++k)
                std::cout << (k ? "," : "") << "[" << values[k][0] << ","
                          << values[k][1] << "," << values[k][2] << "]";
            std::cout << "]}\n";
        } else {
            for (const auto& v : values) {
                std::vector<Field> row{
                    fint("modulus", f),       fint("index", i),
                    fbool("principal", principal), fint("conductor", cond),
                    fint("order", order),     fint("residue", v[0]),
                    fint("num", v[1]),        fint("den", v[2])};
                writer.row(row);
            }
        }
    }
    return 0;
}

// ------------------------------------------------------------------ //
// verify                                                              //
// ------------------------------------------------------------------ //

struct VerifyState {
    Writer* writer;
    std::uint32_t passed = 0;
    std::uint32_t total = 0;
};

void verify_cb(const hqz_verify_report* r, void* user) {
    auto* st = static_cast<VerifyState*>(user);
    std::vector<Field> row{
        fstr("identity", r->identity_id), fstr("instance", r->instance),
        fnum("lhs_re", r->lhs.re),        fnum("lhs_im", r->lhs.im),
        fnum("rhs_re", r->rhs.re),        fnum("rhs_im", r->rhs.im),
        fnum("residual", r->residual),    fnum("tolerance", r->tolerance),
        fbool("passed", r->passed != 0)};
    st->writer->row(row);
    ++st->total;
    if (r->passed) ++st->passed;
}

int run_verify(Engine& eng, Writer& writer, const Config& cfg,
               std::vector<std::string> suites, double tol_override) {
    if (suites.empty()) suites = {"all"};
    // validate names first so nothing is emitted on a bad selector
    const std::string known = hqz_verify_suites();
    for (const auto& s : suites) {
        if (s == "all") continue;
        const std::string wrapped = "," + known + ",";
        if (wrapped.find("," + s + ",") == std::string::npos) {
            std::cerr << "error: unknown-suite: unknown suite: " << s
                      << " (known: all," << known << ")\n";
            return 2;
        }
    }

    hqz_verify_grid grid{};
    grid.q_values = cfg.grid_q.data();
    grid.n_q = cfg.grid_q.size();
    grid.h_values = cfg.grid_h.data();
    grid.n_h = cfg.grid_h.size();
    grid.x_values = cfg.grid_x.data();
    grid.n_x = cfg.grid_x.size();
    grid.moduli = cfg.grid_moduli.data();
    grid.n_moduli = cfg.grid_moduli.size();
    grid.max_degree = cfg.grid_max_degree;

    writer.meta();
    writer.columns({"identity", "instance", "lhs_re", "lhs_im", "rhs_re",
                    "rhs_im", "residual", "tolerance", "passed"});
    VerifyState state{&writer};
    for (const auto& s : suites) {
        std::uint32_t p = 0, t = 0;
        const hqz_status st = hqz_verify_run(eng.ctx.get(), s.c_str(), &grid,
                                             tol_override, verify_cb, &state,
                                             &p, &t);
        if (st != HQZ_OK) return fail_status(st);
    }
    writer.summary(state.passed, state.total);
    return state.passed == state.total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(h,q)-Bernoulli / (h,q)-zeta / (h,q)-L-function toolkit"};
    app.fallthrough();
    app.set_help_flag("--help", "print help");  // --h is a parameter

    std::string format = "csv";
    bool no_header = false;
    std::string config_path;
    double tol = 0.0;            // 0 = use config/default
    std::uint64_t max_terms = 0; // 0 = use config/default
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-header", no_header, "suppress metadata/header lines");
    app.add_option("--config", config_path, "key-value config file");
    app.add_option("--tol", tol, "series tolerance (default 1e-12)");
    app.add_option("--max-terms", max_terms, "series term cap (default 1e6)");

    // ---- eval / table -------------------------------------------- //
    auto add_sweep = [&](CLI::App* parent, const std::string& name,
                         std::map<std::string, SweepOptions>& store) {
        static const std::vector<std::string> targets{
            "beta", "chi-beta", "zeta", "hurwitz-zeta", "L", "hurwitz-L"};
        for (const auto& t : targets) {
            auto* cmd = parent->add_subcommand(t, name + " " + t);
            cmd->set_help_flag("--help", "print help");
            auto& sw = store[t];
            sw.target = t;
            if (target_uses_degree(t)) {
                cmd->add_option_function<std::string>(
                       "--n",
                       [&sw](const std::string& v) {
                           if (!parse_int_list(v, sw.n))
                               throw CLI::ValidationError("--n",
                                                          "bad integer list");
                       },
                       "degree(s): int, list or a:b range")
                    ->required();
                std::string routes = t == "beta"
                                         ? "closed-form|convolution|series"
                                         : "distribution|closed-form|series";
                cmd->add_option_function<std::string>(
                    "--route",
                    [&sw, t](const std::string& v) {
                        if (v == "closed-form")
                            sw.route = HQZ_ROUTE_CLOSED_FORM;
                        else if (v == "convolution" && t == "beta")
                            sw.route = HQZ_ROUTE_CONVOLUTION;
                        else if (v == "series")
                            sw.route = HQZ_ROUTE_SERIES;
                        else if (v == "distribution" && t == "chi-beta")
                            sw.route = HQZ_ROUTE_DISTRIBUTION;
                        else
                            throw CLI::ValidationError("--route",
                                                       "unknown route");
                    },
                    "evaluation route: " + routes);
                sw.route = t == "beta" ? HQZ_ROUTE_CLOSED_FORM
                                       : HQZ_ROUTE_DISTRIBUTION;
            }
            if (target_uses_s(t))
                cmd->add_option_function<std::string>(
                       "--s",
                       [&sw](const std::string& v) {
                           if (!parse_complex_list(v, sw.s))
                               throw CLI::ValidationError(
                                   "--s", "bad complex list (a+bi)");
                       },
                       "s value(s), complex: e.g. \"0.5+1.3i\"")
                    ->required();
            if (target_uses_x(t)) {
                auto* opt = cmd->add_option_function<std::string>(
                    "--x",
                    [&sw](const std::string& v) {
                        if (!parse_double_list(v, sw.x))
                            throw CLI::ValidationError("--x", "bad number list");
                    },
                    "shift value(s)");
                if (t == "hurwitz-zeta" || t == "hurwitz-L") opt->required();
                else opt->default_str("0");
            }
            if (target_uses_chi(t)) {
                cmd->add_option_function<std::string>(
                       "--modulus",
                       [&sw](const std::string& v) {
                           if (!parse_int_list(v, sw.moduli))
                               throw CLI::ValidationError("--modulus",
                                                          "bad integer list");
                       },
                       "character modulus/moduli")
                    ->required();
                cmd->add_option_function<std::string>(
                    "--char-index",
                    [&sw](const std::string& v) {
                        if (v == "all") return;
                        if (!parse_int_list(v, sw.chi_index))
                            throw CLI::ValidationError("--char-index",
                                                       "bad integer list");
                    },
                    "character index/indices (default: all)");
                if (t == "L")
                    cmd->add_flag("--allow-principal", sw.allow_principal,
                                  "accept principal characters");
            }
            cmd->add_option_function<std::string>(
                   "--q",
                   [&sw](const std::string& v) {
                       if (!parse_double_list(v, sw.q))
                           throw CLI::ValidationError("--q", "bad number list");
                   },
                   "deformation parameter(s) in (0,1)")
                ->required();
            cmd->add_option_function<std::string>(
                   "--h",
                   [&sw](const std::string& v) {
                       if (!parse_double_list(v, sw.h))
                           throw CLI::ValidationError("--h", "bad number list");
                   },
                   "weight parameter(s)")
                ->required();
        }
        parent->require_subcommand(1);
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one point");
    auto* table_cmd = app.add_subcommand("table", "sweep a parameter grid");
    std::map<std::string, SweepOptions> eval_opts, table_opts;
    add_sweep(eval_cmd, "eval", eval_opts);
    add_sweep(table_cmd, "table", table_opts);

    // ---- chars ---------------------------------------------------- //
    auto* chars_cmd = app.add_subcommand("chars", "list characters mod f");
    long long chars_modulus = 0;
    chars_cmd->add_option("modulus", chars_modulus, "modulus f")->required();

    // ---- verify ---------------------------------------------------- //
    auto* verify_cmd =
        app.add_subcommand("verify", "run identity-verification suites");
    std::vector<std::string> verify_suites;
    double verify_tol = 0.0;
    verify_cmd->add_option("suites", verify_suites,
                           "suite names or 'all' (default all)");
    verify_cmd->add_option(
        "--tol", verify_tol,
        "override the per-identity base tolerance for the selected suites");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    Config cfg;
    if (!config_path.empty()) {
        std::string err;
        if (!apply_config_file(config_path, cfg, err)) return fail_usage(err);
    }
    if (tol != 0.0) {
        if (!(tol > 0.0)) return fail_usage("--tol must be positive");
        cfg.tol = tol;
    }
    if (max_terms != 0) cfg.max_terms = max_terms;

    Engine eng;
    if (!eng.ctx) {
        std::cerr << "error: internal: cannot allocate context\n";
        return 2;
    }
    hqz_ctx_set_tol(eng.ctx.get(), cfg.tol);
    hqz_ctx_set_max_terms(eng.ctx.get(), cfg.max_terms);

    std::string command;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command += " ";
        command += argv[i];
    }
    Writer writer(format == "json", !no_header, command);

    if (*eval_cmd || *table_cmd) {
        const bool single = static_cast<bool>(*eval_cmd);
        auto& store = single ? eval_opts : table_opts;
        auto* parent = single ? eval_cmd : table_cmd;
        for (auto* sub : parent->get_subcommands())
            return run_sweep(eng, writer, store[sub->get_name()], single);
        return fail_usage("missing target");
    }
    if (*chars_cmd)
        return run_chars(eng, writer, chars_modulus, format == "json");
    if (*verify_cmd)
        return run_verify(eng, writer, cfg, verify_suites, verify_tol);
    return fail_usage("missing subcommand");
}
