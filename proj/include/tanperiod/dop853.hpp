#ifndef TANPERIOD_DOP853_HPP
#define TANPERIOD_DOP853_HPP

#include <array>
#include <functional>

namespace tanperiod::ode
{

using State = std::array<long double, 2>;
using Rhs = std::function<State(const State &)>;

struct StepResult {
    State y;
    // Scaled error norm in Hairer's DOP853 form; the step is acceptable when <= 1.
    long double error = 0.0L;
};

/// Dormand-Prince 8(5,3) explicit Runge-Kutta pair for autonomous planar systems.
///
/// `scale` gives per-component magnitudes used by the mixed tolerance
/// sc_i = abs_tol * scale_i + rel_tol * max(|y_i|, |y_new_i|).
class Dop853
{
public:
    Dop853(Rhs rhs, long double abs_tol, long double rel_tol, State scale);

    State rhs(const State &y) const
    {
        return m_rhs(y);
    }

    // One step of size h from y, whose derivative f0 = rhs(y) is supplied by the caller.
    StepResult step(const State &y, const State &f0, long double h) const;

    // Standard controller: factor in [1/3, 6], exponent 1/8, safety 0.9.
    static long double step_factor(long double error);

private:
    Rhs m_rhs;
    long double m_abs_tol;
    long double m_rel_tol;
    State m_scale;
};

} // namespace tanperiod::ode

#endif
