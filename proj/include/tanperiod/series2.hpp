#ifndef TANPERIOD_SERIES2_HPP
#define TANPERIOD_SERIES2_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <tanperiod/errors.hpp>
#include <tanperiod/exact_scalar.hpp>
#include <tanperiod/series.hpp>

namespace tanperiod
{

/// Bivariate truncated series in (x, y), truncated by total degree.
///
/// Coefficient (i, j) multiplies x^i y^j and is stored for i + j <= order. Looking up a
/// coefficient past the order is a TruncationError rather than an implicit zero.
class Series2
{
public:
    Series2() = default;
    // Zero series known through total degree `order`.
    explicit Series2(int order);

    static Series2 constant(const ExactScalar &c, int order);
    // A function of x alone.
    static Series2 from_x(const Series1 &s);

    int order() const
    {
        return m_order;
    }

    const ExactScalar &at(int i, int j) const;
    void set(int i, int j, ExactScalar v);

    // Smallest total degree carrying a nonzero coefficient; order() + 1 when none.
    int valuation() const;

    Series2 truncated(int new_order) const;

    // F(x, 0) as a series in x.
    Series1 restrict_y0() const;
    // The coefficient of y^j, a series in x known through order() - j.
    Series1 y_coefficient(int j) const;
    // (F(x, y) - 0) / y; the y^0 column must vanish.
    Series2 divided_by_y() const;

    Series2 derivative_x() const;
    Series2 derivative_y() const;

    // d^a/dx^a d^b/dy^b F evaluated on y = 0, as a series in x.
    Series1 mixed_partial_on_axis(int dx, int dy) const;

    Series2 &operator+=(const Series2 &o);
    Series2 &operator-=(const Series2 &o);
    Series2 &operator*=(const ExactScalar &s);
    friend Series2 operator+(Series2 a, const Series2 &b)
    {
        return a += b;
    }
    friend Series2 operator-(Series2 a, const Series2 &b)
    {
        return a -= b;
    }
    friend Series2 operator*(Series2 a, const ExactScalar &s)
    {
        return a *= s;
    }
    friend Series2 operator*(const ExactScalar &s, Series2 a)
    {
        return a *= s;
    }
    friend Series2 operator*(const Series2 &a, const Series2 &b);
    Series2 operator-() const;

    friend bool operator==(const Series2 &, const Series2 &) = default;

    // Floating point evaluation of the known polynomial part.
    long double evaluate(long double x, long double y) const;

private:
    static std::size_t index(int i, int j)
    {
        const auto d = static_cast<std::size_t>(i + j);
        return d * (d + 1) / 2 + static_cast<std::size_t>(j);
    }

    int m_order = -1;
    std::vector<ExactScalar> m_coeffs;
};

Series2 reciprocal(const Series2 &a);

/// F(u(x), v(x)) for series u, v with zero constant term. Works for Series1 and MixedSeries.
template <class C>
UniSeries<C> eval2_at_series(const Series2 &f, const UniSeries<C> &u, const UniSeries<C> &v)
{
    if (u.order() < 0 || v.order() < 0 || !is_zero(u[0]) || !is_zero(v[0])) {
        throw SeriesError("eval2_at_series: substituted series must have zero constant term");
    }
    const int vu = u.valuation();
    const int vv = v.valuation();
    // Terms of F beyond its order start at valuation (order(F) + 1) * min(vu, vv).
    int out = (f.order() + 1) * std::min(vu, vv) - 1;
    out = std::max(out, -1);

    std::vector<UniSeries<C>> upow{UniSeries<C>::constant(C(ExactScalar(1)), out)};
    std::vector<UniSeries<C>> vpow{UniSeries<C>::constant(C(ExactScalar(1)), out)};
    for (int i = 1; i <= f.order() && i * vu <= out; ++i) {
        upow.push_back((upow.back() * u).truncated(out));
    }
    for (int j = 1; j <= f.order() && j * vv <= out; ++j) {
        vpow.push_back((vpow.back() * v).truncated(out));
    }

    UniSeries<C> acc(out);
    for (int d = 0; d <= f.order(); ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            const ExactScalar &c = f.at(i, j);
            if (c.is_zero()) {
                continue;
            }
            if (i >= static_cast<int>(upow.size()) || j >= static_cast<int>(vpow.size())) {
                continue; // valuation beyond out
            }
            acc += (c * (upow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(j)])).truncated(out);
        }
    }
    return acc;
}

} // namespace tanperiod

#endif
