#include <tanperiod/series2.hpp>

namespace tanperiod
{

Series2::Series2(int order) : m_order(std::max(order, -1))
{
    m_coeffs.resize(order < 0 ? 0 : index(0, order) + 1);
}

Series2 Series2::constant(const ExactScalar &c, int order)
{
    Series2 s(order);
    if (order >= 0) {
        s.set(0, 0, c);
    }
    return s;
}

Series2 Series2::from_x(const Series1 &s)
{
    Series2 r(s.order());
    for (int i = 0; i <= s.order(); ++i) {
        r.set(i, 0, s[i]);
    }
    return r;
}

const ExactScalar &Series2::at(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > m_order) {
        throw TruncationError("coefficient x^" + std::to_string(i) + " y^" + std::to_string(j)
                              + " requested beyond series order " + std::to_string(m_order));
    }
    return m_coeffs[index(i, j)];
}

void Series2::set(int i, int j, ExactScalar v)
{
    if (i < 0 || j < 0 || i + j > m_order) {
        throw TruncationError("coefficient x^" + std::to_string(i) + " y^" + std::to_string(j)
                              + " outside series order " + std::to_string(m_order));
    }
    m_coeffs[index(i, j)] = std::move(v);
}

int Series2::valuation() const
{
    for (int d = 0; d <= m_order; ++d) {
        for (int j = 0; j <= d; ++j) {
            if (!m_coeffs[index(d - j, j)].is_zero()) {
                return d;
            }
        }
    }
    return m_order + 1;
}

Series2 Series2::truncated(int new_order) const
{
    if (new_order >= m_order) {
        return *this;
    }
    Series2 r(new_order);
    std::copy_n(m_coeffs.begin(), r.m_coeffs.size(), r.m_coeffs.begin());
    return r;
}

Series1 Series2::restrict_y0() const
{
    return y_coefficient(0);
}

Series1 Series2::y_coefficient(int j) const
{
    Series1 r(m_order - j);
    for (int i = 0; i <= m_order - j; ++i) {
        r.coeff(i) = at(i, j);
    }
    return r;
}

Series2 Series2::divided_by_y() const
{
    for (int i = 0; i <= m_order; ++i) {
        if (!at(i, 0).is_zero()) {
            throw RecursionError("series not divisible by y");
        }
    }
    Series2 r(m_order - 1);
    for (int d = 0; d <= m_order - 1; ++d) {
        for (int j = 0; j <= d; ++j) {
            r.set(d - j, j, at(d - j, j + 1));
        }
    }
    return r;
}

Series2 Series2::derivative_x() const
{
    Series2 r(m_order - 1);
    for (int d = 0; d <= m_order - 1; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            r.set(i, j, at(i + 1, j) * ExactScalar(i + 1));
        }
    }
    return r;
}

Series2 Series2::derivative_y() const
{
    Series2 r(m_order - 1);
    for (int d = 0; d <= m_order - 1; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            r.set(i, j, at(i, j + 1) * ExactScalar(j + 1));
        }
    }
    return r;
}

Series1 Series2::mixed_partial_on_axis(int dx, int dy) const
{
    // d^dy/dy^dy at y = 0 picks dy! times the y^dy coefficient.
    Series1 col = y_coefficient(dy) * ExactScalar::factorial(static_cast<unsigned>(dy));
    return col.derivative(dx);
}

Series2 &Series2::operator+=(const Series2 &o)
{
    *this = truncated(o.m_order);
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        m_coeffs[k] += o.m_coeffs[k];
    }
    return *this;
}

Series2 &Series2::operator-=(const Series2 &o)
{
    *this = truncated(o.m_order);
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        m_coeffs[k] -= o.m_coeffs[k];
    }
    return *this;
}

Series2 &Series2::operator*=(const ExactScalar &s)
{
    for (auto &c : m_coeffs) {
        c *= s;
    }
    return *this;
}

Series2 operator*(const Series2 &a, const Series2 &b)
{
    const int va = a.valuation();
    const int vb = b.valuation();
    const int out = std::min(a.m_order + vb, b.m_order + va);
    Series2 r(out);
    for (int da = va; da <= std::min(a.m_order, out); ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            const ExactScalar &ca = a.m_coeffs[Series2::index(da - ja, ja)];
            if (ca.is_zero()) {
                continue;
            }
            for (int db = vb; db <= std::min(b.m_order, out - da); ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    const ExactScalar &cb = b.m_coeffs[Series2::index(db - jb, jb)];
                    if (cb.is_zero()) {
                        continue;
                    }
                    r.m_coeffs[Series2::index(da - ja + db - jb, ja + jb)] += ca * cb;
                }
            }
        }
    }
    return r;
}

Series2 Series2::operator-() const
{
    Series2 r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

long double Series2::evaluate(long double x, long double y) const
{
    long double acc = 0.0L;
    for (int d = m_order; d >= 0; --d) {
        for (int j = 0; j <= d; ++j) {
            const ExactScalar &c = m_coeffs[index(d - j, j)];
            if (c.is_zero()) {
                continue;
            }
            long double term = c.to_long_double();
            for (int k = 0; k < d - j; ++k) {
                term *= x;
            }
            for (int k = 0; k < j; ++k) {
                term *= y;
            }
            acc += term;
        }
    }
    return acc;
}

Series2 reciprocal(const Series2 &a)
{
    if (a.order() < 0 || a.at(0, 0).is_zero()) {
        throw SeriesError("not invertible at origin");
    }
    // 1/a = (1/a0) * sum_m (-r/a0)^m with r = a - a0 of valuation >= 1.
    const ExactScalar inv0 = a.at(0, 0).reciprocal();
    Series2 r = a;
    r.set(0, 0, ExactScalar{});
    r *= -inv0;
    Series2 acc = Series2::constant(ExactScalar(1), a.order());
    Series2 term = acc;
    for (int m = 1; m <= a.order(); ++m) {
        term = (term * r).truncated(a.order());
        acc += term;
    }
    return acc * inv0;
}

} // namespace tanperiod
