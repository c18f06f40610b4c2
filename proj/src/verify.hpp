// Identity-verification suites: every identity of the library evaluated over
// a parameter grid with per-instance pass/fail reports.
#pragma once

#include "bernoulli.hpp"
#include "qkernel.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hqz {

struct VerifyReport {
    std::string identity_id;
    std::string instance;
    std::complex<double> lhs{};
    std::complex<double> rhs{};
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyGrid {
    std::vector<double> q{0.3, 0.5, 0.9};
    std::vector<double> h{1.0, 2.0, 3.5};
    std::vector<double> x{0.0, 0.5, 1.0, 2.7};
    std::vector<std::uint32_t> moduli{1, 3, 4, 5, 8};
    unsigned max_degree = 10;
};

struct VerifySummary {
    std::uint32_t passed = 0;
    std::uint32_t total = 0;
};

// Shared evaluation state: series options plus the beta-number cache.
struct EvalContext {
    SumOptions opts;
    BetaCache cache;
};

using ReportSink = std::function<void(const VerifyReport&)>;

const std::vector<std::string>& verify_suite_names();

// Runs one named suite ("all" runs every suite in order). tol_override > 0
// replaces each identity's base tolerance. Reports stream to sink (may be
// empty) in a deterministic order.
VerifySummary run_verify_suite(const std::string& suite, const VerifyGrid& grid,
                               EvalContext& ctx, double tol_override,
                               const ReportSink& sink);

}  // namespace hqz
