#ifndef TANPERIOD_PERIOD_HPP
#define TANPERIOD_PERIOD_HPP

#include <utility>
#include <vector>

#include <tanperiod/exact_scalar.hpp>
#include <tanperiod/field.hpp>
#include <tanperiod/half_return.hpp>
#include <tanperiod/series.hpp>

namespace tanperiod
{

/// Period function data of a tangential center: signed half-period series T+ and T-, the period
/// series T = delta (T- - T+) and its coefficients (the period constants).
struct PeriodData {
    Series1 t_plus;
    Series1 t_minus;
    Series1 t;
    std::vector<ExactScalar> t_hat;
    Series1 phi;
    int order = 0;
};

/// y(±delta (phi(x) - x) t, x) as a series in x with polynomial-in-t coefficients, known through
/// x^order. Needs ys through y_order.
MixedSeries scaled_flow_series(const FlowYSeries &ys, const Classification &cls, const Series1 &phi, int order);

/// T±(x) = (phi(x) - x) * int_0^1 dt / X±(x + (phi(x) - x) t, y±(±delta (phi(x) - x) t, x)).
Series1 half_period_series(const PiecewiseField &field, const Classification &cls, const FlowYSeries &ys,
                           const Series1 &phi, int order);

// t-degree ceiling for the mixed series built at the given order.
int mixed_t_degree_bound(const Classification &cls, int order);

/// Period constants T_0..T_order. Throws NotCenterError when the half-return maps differ
/// at or below `order`, and TruncationError when the field order cannot support `order`.
PeriodData period_constants(const PiecewiseField &field, int order);
PeriodData period_constants(const PiecewiseField &field, const Classification &cls, const CenterReport &center);

// Largest order period_constants can deliver for this field.
int max_period_order(const PiecewiseField &field, const Classification &cls);

/// Closed forms T_0 = 0 and T_1 = 2 delta (X-(0,0) - X+(0,0)) / (X+(0,0) X-(0,0)).
std::pair<ExactScalar, ExactScalar> corollary_values(const PiecewiseField &field);

/// Period function of the rescaled field (±delta, eta): 2 (x - phi(x)).
Series1 tilde_period(const Series1 &phi);

} // namespace tanperiod

#endif
