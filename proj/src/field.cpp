#include <tanperiod/field.hpp>

#include <algorithm>

#include <tanperiod/errors.hpp>

namespace tanperiod
{

void PiecewiseField::validate() const
{
    for (const Series2 *c : {&x_plus, &y_plus, &x_minus, &y_minus}) {
        if (c->order() != order) {
            throw ParseError("field components must share the declared order " + std::to_string(order));
        }
    }
}

namespace
{

constexpr const char *not_tangential = "not a tangential singularity at this order";
constexpr const char *visible_contact = "visible contact";
constexpr const char *no_first_return = "no first-return (same crossing direction)";

// Odd index of the first nonzero x-coefficient of Y(x, 0), if C1 holds for this piece.
std::optional<int> contact_index(const Series2 &x, const Series2 &y)
{
    if (x.order() < 1 || x.at(0, 0).is_zero() || !y.at(0, 0).is_zero()) {
        return std::nullopt;
    }
    for (int m = 1; m <= y.order(); ++m) {
        if (!y.at(m, 0).is_zero()) {
            if (m % 2 == 0) {
                return std::nullopt;
            }
            return m;
        }
    }
    return std::nullopt;
}

} // namespace

ConditionReport check_conditions(const PiecewiseField &field)
{
    field.validate();
    ConditionReport report;

    const auto mp = contact_index(field.x_plus, field.y_plus);
    const auto mm = contact_index(field.x_minus, field.y_minus);
    if (mp) {
        report.k_plus = (*mp + 1) / 2;
    }
    if (mm) {
        report.k_minus = (*mm + 1) / 2;
    }
    report.verdicts.c1 = mp.has_value() && mm.has_value();

    if (report.verdicts.c1) {
        const int sp = field.x_plus.at(0, 0).sign() * field.y_plus.at(*mp, 0).sign();
        const int sm = field.x_minus.at(0, 0).sign() * field.y_minus.at(*mm, 0).sign();
        report.verdicts.c2 = sp < 0 && sm > 0;
    }
    if (field.order >= 0) {
        report.verdicts.c3 = field.x_plus.at(0, 0).sign() * field.x_minus.at(0, 0).sign() < 0;
    }

    if (!report.verdicts.c1) {
        report.failure = not_tangential;
    } else if (!report.verdicts.c2) {
        report.failure = visible_contact;
    } else if (!report.verdicts.c3) {
        report.failure = no_first_return;
    } else {
        Classification cls;
        cls.k_plus = *report.k_plus;
        cls.k_minus = *report.k_minus;
        cls.delta = field.x_plus.at(0, 0).sign();
        // d^m Y/dx^m (0,0) / m! is the x^m coefficient.
        cls.a_plus = field.y_plus.at(*mp, 0) / field.x_plus.at(0, 0).abs();
        cls.a_minus = field.y_minus.at(*mm, 0) / field.x_minus.at(0, 0).abs();
        cls.verdicts = report.verdicts;
        report.classification = cls;
    }
    return report;
}

Classification classify(const PiecewiseField &field)
{
    auto report = check_conditions(field);
    if (report.failure) {
        throw ClassificationError(*report.failure);
    }
    return *report.classification;
}

Series2 eta_series(const PiecewiseField &field, const Classification &cls, Side side)
{
    const ExactScalar sigma(cls.sigma(side));
    return sigma * (field.y(side) * reciprocal(field.x(side)));
}

FGSeries fg_series(const PiecewiseField &field, const Classification &cls, Side side)
{
    const Series2 &x = field.x(side);
    const Series2 &y = field.y(side);
    const int k = cls.k(side);
    const ExactScalar sigma(cls.sigma(side));
    const ExactScalar sgn(side_sign(side));

    const Series1 x0 = x.restrict_y0();
    const Series1 y0 = y.restrict_y0();
    const Series1 f_num = sigma * y0 - cls.a(side) * x0.shifted_up(2 * k - 1);

    const Series2 x0_lift = Series2::from_x(x0);
    const Series2 y0_lift = Series2::from_x(y0);
    const Series2 g_num = sgn * (x0_lift * y - x * y0_lift);

    try {
        FGSeries out;
        out.f = f_num.shifted_down(2 * k) * reciprocal(x0);
        // 1/delta == delta
        out.g = ExactScalar(cls.delta) * (g_num.divided_by_y() * reciprocal(x * x0_lift));
        return out;
    } catch (const RecursionError &) {
        throw RecursionError("inconsistent field/classification");
    }
}

PiecewiseField reparametrized_field(const PiecewiseField &field, const Classification &cls)
{
    PiecewiseField out;
    out.order = field.order;
    out.x_plus = Series2::constant(ExactScalar(cls.delta), field.order);
    out.y_plus = eta_series(field, cls, Side::plus);
    out.x_minus = Series2::constant(ExactScalar(-cls.delta), field.order);
    out.y_minus = eta_series(field, cls, Side::minus);
    return out;
}

Series2 reflect_y(const Series2 &f)
{
    Series2 r = f;
    for (int d = 0; d <= f.order(); ++d) {
        for (int j = 1; j <= d; j += 2) {
            r.set(d - j, j, -f.at(d - j, j));
        }
    }
    return r;
}

PiecewiseField mirrored_center(const Series2 &x_plus, const Series2 &y_plus, const Series2 &scale)
{
    if (scale.order() < 0 || scale.at(0, 0).sign() <= 0) {
        throw SeriesError("mirror scale must have a positive constant term");
    }
    const int n = std::min({x_plus.order(), y_plus.order(), scale.order()});
    PiecewiseField out;
    out.order = n;
    out.x_plus = x_plus.truncated(n);
    out.y_plus = y_plus.truncated(n);
    out.x_minus = (-(scale * reflect_y(x_plus))).truncated(n);
    out.y_minus = (scale * reflect_y(y_plus)).truncated(n);
    return out;
}

} // namespace tanperiod
