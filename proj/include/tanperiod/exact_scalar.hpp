#ifndef TANPERIOD_EXACT_SCALAR_HPP
#define TANPERIOD_EXACT_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tanperiod
{

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
///
/// All symbolic pipelines (series, Bell polynomials, recursions) are carried out in this type;
/// floating point only appears in the numeric oracle.
class ExactScalar
{
public:
    ExactScalar() = default;
    ExactScalar(int v) : m_value(static_cast<long>(v)) {}
    ExactScalar(long v) : m_value(v) {}
    ExactScalar(long long v) : m_value(static_cast<long>(v)) {}
    // Throws SeriesError on a zero denominator.
    ExactScalar(long num, long den);
    explicit ExactScalar(mpq_class v);

    // Accepts "p", "-p", "p/q", "+p/q" with decimal digits only.
    static ExactScalar parse(std::string_view literal);

    static ExactScalar factorial(unsigned n);
    static ExactScalar binomial(unsigned n, unsigned k);
    // n! / (n - k)!, zero when k > n.
    static ExactScalar falling_factorial(unsigned n, unsigned k);

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    long double to_long_double() const;

    int sign() const
    {
        return sgn(m_value);
    }
    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }

    const mpq_class &raw() const
    {
        return m_value;
    }

    ExactScalar abs() const;
    ExactScalar reciprocal() const;
    // Integer power, negative exponents allowed for nonzero values.
    ExactScalar pow(int e) const;

    ExactScalar &operator+=(const ExactScalar &o);
    ExactScalar &operator-=(const ExactScalar &o);
    ExactScalar &operator*=(const ExactScalar &o);
    ExactScalar &operator/=(const ExactScalar &o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar &b)
    {
        return a += b;
    }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar &b)
    {
        return a -= b;
    }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar &b)
    {
        return a *= b;
    }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar &b)
    {
        return a /= b;
    }
    ExactScalar operator-() const;

    friend bool operator==(const ExactScalar &a, const ExactScalar &b)
    {
        return cmp(a.m_value, b.m_value) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactScalar &a, const ExactScalar &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const ExactScalar &v)
    {
        return os << v.to_string();
    }

private:
    mpq_class m_value;
};

inline bool is_zero(const ExactScalar &v)
{
    return v.is_zero();
}

} // namespace tanperiod

#endif
