#include <tanperiod/series.hpp>

#include <algorithm>

namespace tanperiod
{

TPoly::TPoly(ExactScalar c) : m_coeffs{std::move(c)}
{
    trim();
}

TPoly::TPoly(std::vector<ExactScalar> coeffs) : m_coeffs(std::move(coeffs))
{
    trim();
}

TPoly TPoly::monomial(ExactScalar c, int power)
{
    std::vector<ExactScalar> v(static_cast<std::size_t>(power + 1));
    v.back() = std::move(c);
    return TPoly(std::move(v));
}

void TPoly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

ExactScalar TPoly::operator[](int i) const
{
    if (i < 0 || i > degree()) {
        return {};
    }
    return m_coeffs[static_cast<std::size_t>(i)];
}

ExactScalar TPoly::integrate_01() const
{
    ExactScalar acc;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        acc += m_coeffs[i] / ExactScalar(static_cast<long>(i + 1));
    }
    return acc;
}

ExactScalar TPoly::evaluate(const ExactScalar &t) const
{
    ExactScalar acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

TPoly &TPoly::operator+=(const TPoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

TPoly &TPoly::operator-=(const TPoly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    trim();
    return *this;
}

TPoly &TPoly::operator*=(const ExactScalar &s)
{
    for (auto &c : m_coeffs) {
        c *= s;
    }
    trim();
    return *this;
}

TPoly operator*(const TPoly &a, const TPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<ExactScalar> r(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            r[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return TPoly(std::move(r));
}

TPoly TPoly::operator-() const
{
    TPoly r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

std::ostream &operator<<(std::ostream &os, const TPoly &p)
{
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << p[i] << ")";
        if (i > 0) {
            os << "t^" << i;
        }
    }
    return os;
}

namespace
{

template <class C, class InvertUnit>
UniSeries<C> reciprocal_impl(const UniSeries<C> &a, InvertUnit invert_unit)
{
    if (a.order() < 0 || is_zero(a[0])) {
        throw SeriesError("not invertible at origin");
    }
    const int n = a.order();
    const ExactScalar inv0 = invert_unit(a[0]);
    UniSeries<C> b(n);
    b.coeff(0) = C(inv0);
    for (int m = 1; m <= n; ++m) {
        C acc{};
        for (int k = 1; k <= m; ++k) {
            if (!is_zero(a[k])) {
                acc += a[k] * b[m - k];
            }
        }
        b.coeff(m) = acc * (-inv0);
    }
    return b;
}

} // namespace

Series1 reciprocal(const Series1 &a)
{
    return reciprocal_impl(a, [](const ExactScalar &c) { return c.reciprocal(); });
}

MixedSeries reciprocal(const MixedSeries &a)
{
    return reciprocal_impl(a, [](const TPoly &c) {
        if (!c.is_constant()) {
            throw SeriesError("not invertible at origin: constant term depends on t");
        }
        return c[0].reciprocal();
    });
}

Series1 compose1(const Series1 &outer, const Series1 &inner)
{
    if (inner.order() < 0 || !inner[0].is_zero()) {
        throw SeriesError("compose1: inner series must have zero constant term");
    }
    const int vin = inner.valuation();
    // Unknown outer terms x^j, j > order(outer), start at valuation (order(outer) + 1) * vin.
    int out = (outer.order() + 1) * vin - 1;
    const int vout = outer.valuation();
    if (vout >= 1 && vout <= outer.order()) {
        out = std::min(out, inner.order() + (vout - 1) * vin);
    } else if (vout == 0 && outer.order() >= 1) {
        // Only the first power with a nonzero coefficient limits the trusted range.
        for (int j = 1; j <= outer.order(); ++j) {
            if (!outer[j].is_zero()) {
                out = std::min(out, inner.order() + (j - 1) * vin);
                break;
            }
        }
    }
    Series1 result(out);
    if (outer.order() >= 0) {
        result.coeff(0) = outer[0];
    }
    Series1 power = inner.truncated(out);
    for (int j = 1; j <= outer.order() && j * vin <= out; ++j) {
        if (!outer[j].is_zero()) {
            result += (outer[j] * power).truncated(out);
        }
        if ((j + 1) * vin <= out) {
            power = (power * inner).truncated(out);
        }
    }
    return result.truncated(out);
}

MixedSeries lift(const Series1 &s)
{
    std::vector<TPoly> c;
    c.reserve(static_cast<std::size_t>(s.order() + 1));
    for (const auto &v : s.coefficients()) {
        c.emplace_back(v);
    }
    return MixedSeries(std::move(c));
}

Series1 t_integrate_01(const MixedSeries &m)
{
    std::vector<ExactScalar> c;
    c.reserve(static_cast<std::size_t>(m.order() + 1));
    for (const auto &p : m.coefficients()) {
        c.push_back(p.integrate_01());
    }
    return Series1(std::move(c));
}

int max_t_degree(const MixedSeries &m)
{
    int d = -1;
    for (const auto &p : m.coefficients()) {
        d = std::max(d, p.degree());
    }
    return d;
}

long double evaluate(const Series1 &s, long double x)
{
    long double acc = 0.0L;
    const auto c = s.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + it->to_long_double();
    }
    return acc;
}

std::ostream &operator<<(std::ostream &os, const Series1 &s)
{
    bool first = true;
    for (int i = 0; i <= s.order(); ++i) {
        if (s[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << s[i] << ")";
        if (i > 0) {
            os << "x^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    return os << " + O(x^" << s.order() + 1 << ")";
}

} // namespace tanperiod
