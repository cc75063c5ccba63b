#ifndef TANPERIOD_ORACLE_HPP
#define TANPERIOD_ORACLE_HPP

#include <optional>
#include <vector>

#include <tanperiod/field.hpp>
#include <tanperiod/period.hpp>

namespace tanperiod
{

struct SimulationConfig {
    long double abs_tol = 1e-12L;
    long double rel_tol = 1e-12L;
    // Bracket width, in time, at which a switching-line crossing counts as located.
    long double event_tol = 1e-13L;
    long max_steps = 200000;
    std::vector<long double> x_grid;
    // Orbits must stay inside the box |x|, |y| < neighborhood.
    long double neighborhood = 1.0L;

    // Throws OracleError on tolerances outside (0, 1e-6], max_steps < 1, or grid values
    // outside (0, neighborhood).
    void validate() const;

    // n points log-spaced from a to b inclusive, 0 < a <= b.
    static std::vector<long double> log_grid(long double a, long double b, int n);
};

struct HalfOrbit {
    long double landing_x = 0.0L;
    // Signed: negative when the side is integrated in reversed time.
    long double flight_time = 0.0L;
    long steps = 0;
};

struct OrbitMeasurement {
    long double x0 = 0.0L;
    long double landing_x_plus = 0.0L;
    long double landing_x_minus = 0.0L;
    long double time_plus = 0.0L;
    long double time_minus = 0.0L;
    // delta * (time_minus - time_plus)
    long double period = 0.0L;
};

/// Integrates Z+ (or Z-) from (x0, 0) into its own half-plane until the orbit first returns to
/// y = 0. The upper side runs in time direction -delta and the lower side in +delta, so that
/// both arcs travel towards negative x.
HalfOrbit integrate_half_orbit(const PiecewiseField &field, Side side, long double x0, const SimulationConfig &cfg);

OrbitMeasurement numeric_period(const PiecewiseField &field, long double x0, const SimulationConfig &cfg);

// Period of the time-rescaled field (±delta, eta±).
long double numeric_tilde_period(const PiecewiseField &field, long double x0, const SimulationConfig &cfg);

// numeric_period over cfg.x_grid, points evaluated concurrently with OpenMP.
std::vector<OrbitMeasurement> measure_grid(const PiecewiseField &field, const SimulationConfig &cfg);
// Sequential reference for measure_grid; results are identical.
std::vector<OrbitMeasurement> measure_grid_serial(const PiecewiseField &field, const SimulationConfig &cfg);

struct ConvergenceRow {
    long double x = 0.0L;
    long double numeric = 0.0L;
    long double series = 0.0L;
    long double residual = 0.0L;
    // Residual below 10 * event_tol; excluded from the fit.
    bool saturated = false;
};

struct ConvergenceReport {
    int order = 0;
    PeriodData period;
    std::vector<ConvergenceRow> rows;
    bool saturated = false;
    std::optional<long double> slope;
};

/// Compares the numeric period against the order-`order` truncation of the period series on
/// cfg.x_grid and fits the log-log slope of the residuals. Non-centers are refused (by
/// period_constants) before any integration happens.
ConvergenceReport convergence_report(const PiecewiseField &field, int order, const SimulationConfig &cfg);

// Least-squares slope of log y against log x. Needs at least two points with distinct x.
long double fit_loglog_slope(const std::vector<long double> &xs, const std::vector<long double> &ys);

} // namespace tanperiod

#endif
