// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include <tanperiod/bell.hpp>
#include <tanperiod/cli.hpp>
#include <tanperiod/half_return.hpp>
#include <tanperiod/oracle.hpp>
#include <tanperiod/period.hpp>

#include "support/test_support.hpp"

using namespace tptest;

namespace
{

using Clock = std::chrono::steady_clock;

struct CliResult {
    int status;
    nlohmann::json body;
};

CliResult run_cli(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, nlohmann::json::parse(out.str())};
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Each check returns an empty string on success, otherwise the reason.
std::string c1()
{
    const auto start = Clock::now();
    const CliResult p = run_cli({"period", "--input", data_path("fold_fold"), "--order", "4"});
    if (p.status != 0 || p.body["That"] != nlohmann::json({"0", "4", "0", "0", "0"})) {
        return "period constants differ from (0, 4, 0, 0, 0)";
    }
    const CliResult s = run_cli({"simulate", "--input", data_path("fold_fold"), "--grid", "0.1:0.1:1"});
    if (s.status != 0) {
        return "simulate failed";
    }
    const double period = s.body["measurements"][0]["period"].get<double>();
    if (std::fabs(period - 0.4) > 1e-8) {
        return "numeric period " + std::to_string(period);
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        return "took " + std::to_string(elapsed) + " s";
    }
    return {};
}

std::string check_t1(const char *name, const ExactScalar &expected, long double period_at_01)
{
    const PiecewiseField f = fixture(name);
    const PeriodData d = period_constants(f, 1);
    if (d.t_hat[1] != expected) {
        return std::string(name) + ": T1 = " + d.t_hat[1].to_string();
    }
    if (corollary_values(f).second != d.t_hat[1]) {
        return std::string(name) + ": closed form disagrees";
    }
    const long double period = numeric_period(f, 0.1L, SimulationConfig{}).period;
    if (std::fabs(period - period_at_01) > 1e-8L) {
        return std::string(name) + ": numeric period " + std::to_string(static_cast<double>(period));
    }
    return {};
}

std::string c2()
{
    return check_t1("asymmetric", q(3), 0.3L);
}

std::string c3()
{
    const Classification c = classify(fixture("cusp_fold"));
    if (c.k_plus != 2 || c.k_minus != 1) {
        return "multiplicities (" + std::to_string(c.k_plus) + ", " + std::to_string(c.k_minus) + ")";
    }
    return check_t1("cusp_fold", q(4), 0.4L);
}

std::vector<PiecewiseField> center_population()
{
    std::vector<PiecewiseField> fields;
    for (const char *name : {"fold_fold", "asymmetric", "cusp_fold", "quartic_center", "cubic_center"}) {
        fields.push_back(fixture(name));
    }
    Rng rng(2024);
    for (int n = 0; n < 60; ++n) {
        fields.push_back(random_center(rng, 4, 1 + n % 2));
    }
    return fields;
}

std::string c4()
{
    int n = 0;
    for (const PiecewiseField &f : center_population()) {
        const Classification c = classify(f);
        const PeriodData d = period_constants(f, std::min(2, max_period_order(f, c)));
        if (d.t_hat[0] != q(0) || !(d.t_hat[1] > q(0))) {
            return "field " + std::to_string(n) + ": " + dump_field(f);
        }
        ++n;
    }
    return n >= 55 ? std::string() : "too few fields";
}

std::string c5()
{
    for (const PiecewiseField &f : center_population()) {
        const Classification c = classify(f);
        const PeriodData d = period_constants(f, std::min(2, max_period_order(f, c)));
        const auto [t0, t1] = corollary_values(f);
        if (t0 != d.t_hat[0] || t1 != d.t_hat[1]) {
            return "mismatch on " + dump_field(f);
        }
    }
    return {};
}

std::string c6()
{
    const SimulationConfig cfg = [] {
        SimulationConfig c;
        c.x_grid = SimulationConfig::log_grid(1e-3L, 1e-1L, 12);
        return c;
    }();
    for (const char *name : {"fold_fold", "asymmetric", "cusp_fold"}) {
        const PiecewiseField f = fixture(name);
        const PiecewiseField r = reparametrized_field(f, classify(f));
        const auto original = measure_grid(f, cfg);
        const auto tilde = measure_grid(r, cfg);
        for (std::size_t i = 0; i < original.size(); ++i) {
            const long double expected = 2.0L * (original[i].x0 - original[i].landing_x_plus);
            if (std::fabs(tilde[i].period - expected) > 1e-7L) {
                return std::string(name) + " at x0 = " + std::to_string(static_cast<double>(original[i].x0));
            }
        }
    }
    return {};
}

std::string c7()
{
    for (int p = 1; p <= 8; ++p) {
        for (int k = 1; k <= p; ++k) {
            const int m = p - k + 1;
            const auto xs = symbols(m);
            if (partial_bell(p, k, xs) != brute_force_partial_bell(p, k, xs)) {
                return "B(" + std::to_string(p) + ", " + std::to_string(k) + ") differs from enumeration";
            }
            std::vector<SymPoly> scaled;
            for (int j = 0; j < m; ++j) {
                scaled.push_back(ExactScalar::factorial(static_cast<unsigned>(j + 1))
                                 * xs[static_cast<std::size_t>(j)]);
            }
            const ExactScalar ratio
                = ExactScalar::factorial(static_cast<unsigned>(p)) / ExactScalar::factorial(static_cast<unsigned>(k));
            if (!(ratio * ordinary_bell(p, k, xs) == partial_bell(p, k, scaled))) {
                return "ordinary/partial identity fails at (" + std::to_string(p) + ", " + std::to_string(k) + ")";
            }
        }
    }
    return {};
}

std::string c8()
{
    SimulationConfig cfg;
    cfg.abs_tol = 1e-18L;
    cfg.rel_tol = 1e-18L;
    cfg.event_tol = 1e-20L;
    cfg.x_grid = SimulationConfig::log_grid(1e-3L, 1e-1L, 12);
    const int order = 4;
    const ConvergenceReport r = convergence_report(fixture("quartic_center"), order, cfg);
    if (!r.slope) {
        return "residuals saturated";
    }
    if (*r.slope < order + 0.5L) {
        return "slope " + std::to_string(static_cast<double>(*r.slope));
    }
    return {};
}

std::string c9()
{
    for (const char *name : {"fold_fold", "asymmetric", "cusp_fold", "quartic_center", "cubic_center"}) {
        const PiecewiseField f = fixture(name);
        const Classification c = classify(f);
        const int order = std::min(max_alpha_order(f, c, Side::plus), max_alpha_order(f, c, Side::minus));
        const CenterReport report = center_check(f, c, order);
        if (!report.is_center_to_order) {
            return std::string(name) + " is not a center";
        }
        for (const HalfReturnData *side : {&report.plus, &report.minus}) {
            if (!involution_defect(side->phi()).is_zero_through_order()) {
                return std::string(name) + ": nonzero involution defect";
            }
        }
    }
    const CliResult r = run_cli({"period", "--input", data_path("non_center"), "--order", "4"});
    if (r.status != 3 || r.body["first_mismatch_index"] != 2) {
        return "non_center gave exit " + std::to_string(r.status);
    }
    return {};
}

} // namespace

int main()
{
    const auto start = Clock::now();
    const std::vector<std::function<std::string()>> checks{c1, c2, c3, c4, c5, c6, c7, c8, c9};
    int failures = 0;
    auto report = [&](int n, const std::string &reason) {
        if (reason.empty()) {
            std::cout << "criterion " << n << ": PASS\n";
        } else {
            std::cout << "criterion " << n << ": FAIL (" << reason << ")\n";
            ++failures;
        }
    };
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string reason;
        try {
            reason = checks[i]();
        } catch (const std::exception &e) {
            reason = std::string("exception: ") + e.what();
        }
        report(static_cast<int>(i + 1), reason);
    }

    // Criterion 10 times the whole unit suite plus the checks above.
    const auto suite_start = Clock::now();
    const std::string command = std::string("\"") + UNIT_TESTS_PATH + "\" > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    const double suite = seconds_since(suite_start);
    const double total = seconds_since(start);
    std::ostringstream detail;
    detail << "unit suite " << suite << " s, total " << total << " s";
    if (status != 0) {
        report(10, "unit suite failed, " + detail.str());
    } else if (total >= 60.0) {
        report(10, detail.str());
    } else {
        std::cout << "criterion 10: PASS (" << detail.str() << ")\n";
    }
    std::cout.flush();
    return failures == 0 ? 0 : 1;
}
