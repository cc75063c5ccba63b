#ifndef TANPERIOD_SERIES_HPP
#define TANPERIOD_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <tanperiod/errors.hpp>
#include <tanperiod/exact_scalar.hpp>

namespace tanperiod
{

/// Polynomial in the auxiliary variable t with exact coefficients. Stored without trailing zeros,
/// so the zero polynomial has degree -1.
class TPoly
{
public:
    TPoly() = default;
    TPoly(ExactScalar c);
    explicit TPoly(std::vector<ExactScalar> coeffs);

    static TPoly monomial(ExactScalar c, int power);

    int degree() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    bool is_constant() const
    {
        return m_coeffs.size() <= 1;
    }
    ExactScalar operator[](int i) const;
    std::span<const ExactScalar> coefficients() const
    {
        return m_coeffs;
    }

    // Exact value of the integral over [0, 1].
    ExactScalar integrate_01() const;
    ExactScalar evaluate(const ExactScalar &t) const;

    TPoly &operator+=(const TPoly &o);
    TPoly &operator-=(const TPoly &o);
    TPoly &operator*=(const ExactScalar &s);
    friend TPoly operator+(TPoly a, const TPoly &b)
    {
        return a += b;
    }
    friend TPoly operator-(TPoly a, const TPoly &b)
    {
        return a -= b;
    }
    friend TPoly operator*(const TPoly &a, const TPoly &b);
    friend TPoly operator*(TPoly a, const ExactScalar &s)
    {
        return a *= s;
    }
    friend TPoly operator*(const ExactScalar &s, TPoly a)
    {
        return a *= s;
    }
    TPoly operator-() const;

    friend bool operator==(const TPoly &, const TPoly &) = default;

private:
    void trim();

    std::vector<ExactScalar> m_coeffs;
};

inline bool is_zero(const TPoly &p)
{
    return p.is_zero();
}

std::ostream &operator<<(std::ostream &os, const TPoly &p);

/// Truncated power series in x over a coefficient ring C.
///
/// The series records `order()`, the largest power of x through which its coefficients are
/// trustworthy; order -1 means nothing is known. Coefficient access past the order throws.
/// Binary operations never pad with zeros: the result order is the largest one the operands
/// justify. For products that is min(order(a) + val(b), order(b) + val(a)), which reduces to
/// the plain min rule when both operands have a nonzero constant term.
template <class C>
class UniSeries
{
public:
    UniSeries() = default;

    // Zero series known through `order`.
    explicit UniSeries(int order) : m_coeffs(static_cast<std::size_t>(std::max(order, -1) + 1)) {}

    // Coefficients c_0..c_N with order N = size - 1.
    explicit UniSeries(std::vector<C> coeffs) : m_coeffs(std::move(coeffs)) {}

    static UniSeries constant(C c, int order)
    {
        UniSeries s(order);
        if (order >= 0) {
            s.m_coeffs[0] = std::move(c);
        }
        return s;
    }

    static UniSeries monomial(C c, int power, int order)
    {
        UniSeries s(order);
        if (power <= order) {
            s.m_coeffs[static_cast<std::size_t>(power)] = std::move(c);
        }
        return s;
    }

    int order() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }

    const C &operator[](int i) const
    {
        if (i < 0 || i > order()) {
            throw TruncationError("coefficient x^" + std::to_string(i) + " requested beyond series order "
                                  + std::to_string(order()));
        }
        return m_coeffs[static_cast<std::size_t>(i)];
    }

    C &coeff(int i)
    {
        if (i < 0 || i > order()) {
            throw TruncationError("coefficient x^" + std::to_string(i) + " requested beyond series order "
                                  + std::to_string(order()));
        }
        return m_coeffs[static_cast<std::size_t>(i)];
    }

    std::span<const C> coefficients() const
    {
        return m_coeffs;
    }

    // Index of the first known nonzero coefficient; order() + 1 when all known ones vanish.
    int valuation() const
    {
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (!is_zero(m_coeffs[i])) {
                return static_cast<int>(i);
            }
        }
        return order() + 1;
    }

    bool is_zero_through_order() const
    {
        return valuation() > order();
    }

    UniSeries truncated(int new_order) const
    {
        if (new_order >= order()) {
            return *this;
        }
        UniSeries r(new_order);
        std::copy_n(m_coeffs.begin(), r.m_coeffs.size(), r.m_coeffs.begin());
        return r;
    }

    // Multiplication by x^m.
    UniSeries shifted_up(int m) const
    {
        UniSeries r(order() + m);
        std::copy(m_coeffs.begin(), m_coeffs.end(), r.m_coeffs.begin() + m);
        return r;
    }

    // Exact division by x^m; the low coefficients must be known and zero.
    UniSeries shifted_down(int m) const
    {
        for (int i = 0; i < m; ++i) {
            if (i > order() || !is_zero(m_coeffs[static_cast<std::size_t>(i)])) {
                throw RecursionError("series not divisible by x^" + std::to_string(m));
            }
        }
        return UniSeries(std::vector<C>(m_coeffs.begin() + m, m_coeffs.end()));
    }

    UniSeries derivative() const
    {
        if (order() <= 0) {
            return UniSeries{};
        }
        std::vector<C> d(m_coeffs.size() - 1);
        for (std::size_t i = 1; i < m_coeffs.size(); ++i) {
            d[i - 1] = m_coeffs[i] * ExactScalar(static_cast<long>(i));
        }
        return UniSeries(std::move(d));
    }

    UniSeries derivative(int times) const
    {
        UniSeries r = *this;
        for (int i = 0; i < times; ++i) {
            r = r.derivative();
        }
        return r;
    }

    UniSeries &operator+=(const UniSeries &o)
    {
        m_coeffs.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] += o.m_coeffs[i];
        }
        return *this;
    }

    UniSeries &operator-=(const UniSeries &o)
    {
        m_coeffs.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] -= o.m_coeffs[i];
        }
        return *this;
    }

    UniSeries &operator*=(const ExactScalar &s)
    {
        for (auto &c : m_coeffs) {
            c = c * s;
        }
        return *this;
    }

    friend UniSeries operator+(UniSeries a, const UniSeries &b)
    {
        return a += b;
    }
    friend UniSeries operator-(UniSeries a, const UniSeries &b)
    {
        return a -= b;
    }
    friend UniSeries operator*(UniSeries a, const ExactScalar &s)
    {
        return a *= s;
    }
    friend UniSeries operator*(const ExactScalar &s, UniSeries a)
    {
        return a *= s;
    }
    UniSeries operator-() const
    {
        UniSeries r = *this;
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    friend UniSeries operator*(const UniSeries &a, const UniSeries &b)
    {
        const int va = a.valuation();
        const int vb = b.valuation();
        const int out = std::min(a.order() + vb, b.order() + va);
        UniSeries r(out);
        for (int i = va; i <= std::min(a.order(), out); ++i) {
            const C &ai = a.m_coeffs[static_cast<std::size_t>(i)];
            if (is_zero(ai)) {
                continue;
            }
            for (int j = vb; j <= std::min(b.order(), out - i); ++j) {
                r.m_coeffs[static_cast<std::size_t>(i + j)] += ai * b.m_coeffs[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    UniSeries &operator*=(const UniSeries &o)
    {
        return *this = *this * o;
    }

    // Coefficient-wise equality including the order.
    friend bool operator==(const UniSeries &, const UniSeries &) = default;

private:
    std::vector<C> m_coeffs;
};

/// Truncated series in x with exact rational coefficients.
using Series1 = UniSeries<ExactScalar>;

/// Truncated series in x whose coefficients are polynomials in t.
using MixedSeries = UniSeries<TPoly>;

// Throws SeriesError("not invertible at origin") when the constant term vanishes.
Series1 reciprocal(const Series1 &a);
// The x^0 coefficient must be a nonzero constant polynomial.
MixedSeries reciprocal(const MixedSeries &a);

// outer(inner(x)); inner must have a known zero constant term.
Series1 compose1(const Series1 &outer, const Series1 &inner);

// Embeds a Series1 as t-independent coefficients.
MixedSeries lift(const Series1 &s);

// Replaces every x-coefficient p(t) by its exact integral over [0, 1].
Series1 t_integrate_01(const MixedSeries &m);

int max_t_degree(const MixedSeries &m);

// Evaluates the known part of a series at a floating point abscissa.
long double evaluate(const Series1 &s, long double x);

std::ostream &operator<<(std::ostream &os, const Series1 &s);

} // namespace tanperiod

#endif
