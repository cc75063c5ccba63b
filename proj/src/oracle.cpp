#include <tanperiod/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <tanperiod/dop853.hpp>
#include <tanperiod/errors.hpp>

namespace tanperiod
{

namespace
{

// Long double copy of a bivariate polynomial's nonzero terms.
class PolyEval
{
public:
    explicit PolyEval(const Series2 &f) : m_order(std::max(f.order(), 0))
    {
        for (int d = 0; d <= f.order(); ++d) {
            for (int j = 0; j <= d; ++j) {
                const ExactScalar &c = f.at(d - j, j);
                if (!c.is_zero()) {
                    m_terms.push_back({d - j, j, c.to_long_double()});
                }
            }
        }
    }

    long double operator()(long double x, long double y) const
    {
        std::vector<long double> xp(static_cast<std::size_t>(m_order + 1), 1.0L);
        std::vector<long double> yp(static_cast<std::size_t>(m_order + 1), 1.0L);
        for (std::size_t i = 1; i < xp.size(); ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        long double acc = 0.0L;
        for (const Term &t : m_terms) {
            acc += t.c * xp[static_cast<std::size_t>(t.i)] * yp[static_cast<std::size_t>(t.j)];
        }
        return acc;
    }

private:
    struct Term {
        int i;
        int j;
        long double c;
    };
    int m_order;
    std::vector<Term> m_terms;
};

void check_tol(long double v, const char *name)
{
    if (!(v > 0.0L) || v > 1e-6L) {
        throw OracleError(std::string(name) + " must lie in (0, 1e-6]");
    }
}

void validate_point(long double x0, const SimulationConfig &cfg)
{
    if (!(x0 > 0.0L) || !(x0 < cfg.neighborhood)) {
        throw OracleError("initial abscissa " + std::to_string(static_cast<double>(x0))
                          + " outside (0, neighborhood)");
    }
}

HalfOrbit half_orbit(const PiecewiseField &field, int delta, Side side, long double x0, const SimulationConfig &cfg)
{
    const int s = side_sign(side);
    const long double dir = static_cast<long double>(side == Side::plus ? -delta : delta);
    const PolyEval fx(field.x(side));
    const PolyEval fy(field.y(side));

    const long double x_speed = std::fabs(fx(x0, 0.0L));
    if (!(x_speed > 0.0L)) {
        throw OracleError("horizontal velocity vanishes at the launch point");
    }
    // Rough flight time of the arc; sets step sizes and the vertical error scale.
    const long double tau = 2.0L * x0 / x_speed;
    long double y_scale = std::fabs(fy(x0, 0.0L)) * tau;
    if (!(y_scale > 0.0L)) {
        y_scale = 1e-3L * x0;
    }

    // Integrate in tau = dir * t so steps are always positive.
    const ode::Dop853 integ([&](const ode::State &z) { return ode::State{dir * fx(z[0], z[1]), dir * fy(z[0], z[1])}; },
                            cfg.abs_tol, cfg.rel_tol, ode::State{x0, y_scale});

    const long double h_max = tau / 16.0L;
    const long double h_min = tau * 1e-30L;
    long double h = tau / 64.0L;
    ode::State z{x0, 0.0L};
    ode::State f = integ.rhs(z);
    long double elapsed = 0.0L;
    HalfOrbit out;

    while (true) {
        if (out.steps >= cfg.max_steps) {
            throw OracleError("max_steps exceeded before the orbit returned to y = 0");
        }
        ++out.steps;
        const ode::StepResult r = integ.step(z, f, h);
        if (!std::isfinite(r.error) || r.error > 1.0L) {
            h *= std::isfinite(r.error) ? std::max(ode::Dop853::step_factor(r.error), 0.2L) : 0.2L;
            if (h < h_min) {
                throw OracleError("step size underflow");
            }
            continue;
        }

        if (s * r.y[1] <= 0.0L) {
            if (elapsed == 0.0L) {
                throw OracleError("orbit does not enter its half-plane at launch");
            }
            // Illinois refinement of the crossing over a partial step from the last accepted state.
            auto g = [&](long double theta) { return s * integ.step(z, f, theta * h).y[1]; };
            long double lo = 0.0L;
            long double hi = 1.0L;
            long double g_lo = s * z[1];
            long double g_hi = s * r.y[1];
            int last = 0;
            for (int it = 0; it < 400 && (hi - lo) * h > cfg.event_tol && g_hi != 0.0L; ++it) {
                long double theta = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
                if (!(theta > lo && theta < hi)) {
                    theta = 0.5L * (lo + hi);
                }
                if (theta == lo || theta == hi) {
                    break;
                }
                const long double gm = g(theta);
                if (gm > 0.0L) {
                    lo = theta;
                    g_lo = gm;
                    if (last == 1) {
                        g_hi *= 0.5L;
                    }
                    last = 1;
                } else {
                    hi = theta;
                    g_hi = gm;
                    if (last == -1) {
                        g_lo *= 0.5L;
                    }
                    last = -1;
                }
            }
            const long double theta = g_hi == 0.0L ? hi : 0.5L * (lo + hi);
            out.landing_x = integ.step(z, f, theta * h).y[0];
            out.flight_time = dir * (elapsed + theta * h);
            return out;
        }

        if (std::fabs(r.y[0]) >= cfg.neighborhood || std::fabs(r.y[1]) >= cfg.neighborhood) {
            throw OracleError("orbit escapes the neighborhood");
        }
        elapsed += h;
        z = r.y;
        f = integ.rhs(z);
        h = std::min(h_max, h * ode::Dop853::step_factor(r.error));
    }
}

} // namespace

void SimulationConfig::validate() const
{
    check_tol(abs_tol, "abs_tol");
    check_tol(rel_tol, "rel_tol");
    check_tol(event_tol, "event_tol");
    if (max_steps < 1) {
        throw OracleError("max_steps must be positive");
    }
    if (!(neighborhood > 0.0L)) {
        throw OracleError("neighborhood must be positive");
    }
    for (long double x : x_grid) {
        validate_point(x, *this);
    }
}

std::vector<long double> SimulationConfig::log_grid(long double a, long double b, int n)
{
    if (!(a > 0.0L) || !(b >= a) || n < 1 || (n == 1 && a != b)) {
        throw OracleError("grid needs 0 < a <= b and n >= 1 (n = 1 only when a = b)");
    }
    std::vector<long double> out(static_cast<std::size_t>(n));
    const long double la = std::log(a);
    const long double lb = std::log(b);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = n == 1 ? a : std::exp(la + (lb - la) * i / (n - 1));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

HalfOrbit integrate_half_orbit(const PiecewiseField &field, Side side, long double x0, const SimulationConfig &cfg)
{
    cfg.validate();
    validate_point(x0, cfg);
    const Classification cls = classify(field);
    return half_orbit(field, cls.delta, side, x0, cfg);
}

OrbitMeasurement numeric_period(const PiecewiseField &field, long double x0, const SimulationConfig &cfg)
{
    cfg.validate();
    validate_point(x0, cfg);
    const Classification cls = classify(field);
    const HalfOrbit up = half_orbit(field, cls.delta, Side::plus, x0, cfg);
    const HalfOrbit down = half_orbit(field, cls.delta, Side::minus, x0, cfg);
    OrbitMeasurement m;
    m.x0 = x0;
    m.landing_x_plus = up.landing_x;
    m.landing_x_minus = down.landing_x;
    m.time_plus = up.flight_time;
    m.time_minus = down.flight_time;
    m.period = cls.delta * (down.flight_time - up.flight_time);
    return m;
}

long double numeric_tilde_period(const PiecewiseField &field, long double x0, const SimulationConfig &cfg)
{
    const Classification cls = classify(field);
    return numeric_period(reparametrized_field(field, cls), x0, cfg).period;
}

std::vector<OrbitMeasurement> measure_grid_serial(const PiecewiseField &field, const SimulationConfig &cfg)
{
    std::vector<OrbitMeasurement> out;
    out.reserve(cfg.x_grid.size());
    for (long double x0 : cfg.x_grid) {
        out.push_back(numeric_period(field, x0, cfg));
    }
    return out;
}

long double fit_loglog_slope(const std::vector<long double> &xs, const std::vector<long double> &ys)
{
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw OracleError("slope fit needs at least two points");
    }
    long double mx = 0.0L;
    long double my = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0L) || !(ys[i] > 0.0L)) {
            throw OracleError("slope fit needs positive values");
        }
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<long double>(xs.size());
    my /= static_cast<long double>(xs.size());
    long double sxx = 0.0L;
    long double sxy = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double dx = std::log(xs[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(ys[i]) - my);
    }
    if (sxx == 0.0L) {
        throw OracleError("slope fit needs distinct abscissas");
    }
    return sxy / sxx;
}

ConvergenceReport convergence_report(const PiecewiseField &field, int order, const SimulationConfig &cfg)
{
    if (cfg.x_grid.empty()) {
        throw OracleError("empty grid");
    }
    cfg.validate();
    const auto [lo, hi] = std::minmax_element(cfg.x_grid.begin(), cfg.x_grid.end());
    if (std::log10(*hi / *lo) < 1.5L) {
        throw OracleError("grid must span at least 1.5 decades");
    }

    ConvergenceReport rep;
    rep.order = order;
    rep.period = period_constants(field, order);
    const Series1 truncated = rep.period.t.truncated(order);
    const std::vector<OrbitMeasurement> ms = measure_grid(field, cfg);

    std::vector<long double> fit_x;
    std::vector<long double> fit_y;
    for (const OrbitMeasurement &m : ms) {
        ConvergenceRow row;
        row.x = m.x0;
        row.numeric = m.period;
        row.series = evaluate(truncated, m.x0);
        row.residual = std::fabs(row.numeric - row.series);
        row.saturated = row.residual < 10.0L * cfg.event_tol;
        if (!row.saturated) {
            fit_x.push_back(row.x);
            fit_y.push_back(row.residual);
        }
        rep.rows.push_back(row);
    }
    if (fit_x.size() < 2) {
        rep.saturated = true;
    } else {
        rep.slope = fit_loglog_slope(fit_x, fit_y);
    }
    return rep;
}

} // namespace tanperiod
