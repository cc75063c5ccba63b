#include <tanperiod/period.hpp>

#include <algorithm>
#include <stdexcept>

#include <tanperiod/errors.hpp>
#include <tanperiod/series2.hpp>

namespace tanperiod
{

namespace
{

Series1 identity_series(int order)
{
    return Series1::monomial(ExactScalar(1), 1, order);
}

// Multiplies every coefficient by c * t.
MixedSeries times_t(const Series1 &s, const ExactScalar &c)
{
    std::vector<TPoly> out;
    out.reserve(static_cast<std::size_t>(s.order() + 1));
    for (const auto &v : s.coefficients()) {
        out.push_back(TPoly::monomial(v * c, 1));
    }
    return MixedSeries(std::move(out));
}

void check_t_degree(const MixedSeries &m, int bound)
{
    if (max_t_degree(m) > bound) {
        throw std::logic_error("mixed series t-degree " + std::to_string(max_t_degree(m)) + " exceeds bound "
                               + std::to_string(bound));
    }
}

} // namespace

int mixed_t_degree_bound(const Classification &cls, int order)
{
    return order * std::max(2 * cls.k_plus, 2 * cls.k_minus) + 2;
}

MixedSeries scaled_flow_series(const FlowYSeries &ys, const Classification &cls, const Series1 &phi, int order)
{
    if (ys.size() < order) {
        throw TruncationError("scaled flow series through x^" + std::to_string(order) + " needs y_1..y_"
                              + std::to_string(order) + ", have " + std::to_string(ys.size()));
    }
    const Series1 d = (phi - identity_series(phi.order())).truncated(order);
    // scaled time s = ±delta (phi(x) - x) t
    const MixedSeries s = times_t(d, ExactScalar(cls.sigma(ys.side)));

    MixedSeries v(order);
    MixedSeries s_pow = MixedSeries::constant(TPoly(ExactScalar(1)), order);
    for (int i = 1; i <= order; ++i) {
        s_pow = (s_pow * s).truncated(order);
        const ExactScalar inv_fact = ExactScalar::factorial(static_cast<unsigned>(i)).reciprocal();
        v += (inv_fact * (lift(ys(i)) * s_pow)).truncated(order);
    }
    check_t_degree(v, mixed_t_degree_bound(cls, order));
    return v;
}

Series1 half_period_series(const PiecewiseField &field, const Classification &cls, const FlowYSeries &ys,
                           const Series1 &phi, int order)
{
    const Series1 d = (phi - identity_series(phi.order())).truncated(order);
    if (d.order() < order) {
        throw TruncationError("half-return map known only through x^" + std::to_string(d.order()));
    }
    // u = x + (phi(x) - x) t
    const MixedSeries u = lift(identity_series(order)) + times_t(d, ExactScalar(1));
    const MixedSeries v = scaled_flow_series(ys, cls, phi, order);

    const MixedSeries denom = eval2_at_series(field.x(ys.side), u, v);
    const MixedSeries integrand = reciprocal(denom);
    check_t_degree(integrand, mixed_t_degree_bound(cls, order));

    const Series1 t_half = (d * t_integrate_01(integrand)).truncated(order);
    if (t_half.order() < order) {
        throw TruncationError("half-period series known only through x^" + std::to_string(t_half.order())
                              + " at field order " + std::to_string(field.order));
    }
    return t_half;
}

PeriodData period_constants(const PiecewiseField &field, const Classification &cls, const CenterReport &center)
{
    if (!center.is_center_to_order) {
        throw NotCenterError("not a center to requested order", center.first_mismatch_index.value_or(-1));
    }
    const int order = center.order;
    PeriodData out;
    out.order = order;
    out.phi = *center.phi;
    out.t_plus = half_period_series(field, cls, center.plus.ys, out.phi, order);
    out.t_minus = half_period_series(field, cls, center.minus.ys, out.phi, order);
    out.t = ExactScalar(cls.delta) * (out.t_minus - out.t_plus);
    out.t_hat.assign(out.t.coefficients().begin(), out.t.coefficients().end());

    if (!out.t_hat[0].is_zero() || (order >= 1 && out.t_hat[1].sign() <= 0)) {
        throw RecursionError("period series violates T_0 = 0 < T_1");
    }
    return out;
}

PeriodData period_constants(const PiecewiseField &field, int order)
{
    if (order < 1) {
        throw TruncationError("period order must be >= 1");
    }
    const Classification cls = classify(field);
    const int max_order = max_period_order(field, cls);
    if (order > max_order) {
        throw TruncationError("requested order " + std::to_string(order) + " exceeds the trustworthy order "
                              + std::to_string(max_order) + " of a field given through degree "
                              + std::to_string(field.order));
    }
    return period_constants(field, cls, center_check(field, cls, order));
}

int max_period_order(const PiecewiseField &field, const Classification &cls)
{
    const int by_alpha = std::min(max_alpha_order(field, cls, Side::plus), max_alpha_order(field, cls, Side::minus));
    // The integrand needs X through x^{order-1} along the orbit.
    return std::min(by_alpha, field.order + 1);
}

std::pair<ExactScalar, ExactScalar> corollary_values(const PiecewiseField &field)
{
    const Classification cls = classify(field);
    const ExactScalar &xp = field.x_plus.at(0, 0);
    const ExactScalar &xm = field.x_minus.at(0, 0);
    const ExactScalar t1 = ExactScalar(2 * cls.delta) * (xm - xp) / (xp * xm);
    return {ExactScalar(0), t1};
}

Series1 tilde_period(const Series1 &phi)
{
    return ExactScalar(2) * (identity_series(phi.order()) - phi);
}

} // namespace tanperiod
