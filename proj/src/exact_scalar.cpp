#include <tanperiod/exact_scalar.hpp>

#include <cctype>
#include <utility>

#include <tanperiod/errors.hpp>

namespace tanperiod
{

ExactScalar::ExactScalar(long num, long den)
{
    if (den == 0) {
        throw SeriesError("zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

ExactScalar::ExactScalar(mpq_class v) : m_value(std::move(v))
{
    if (m_value.get_den() == 0) {
        throw SeriesError("zero denominator");
    }
    m_value.canonicalize();
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

ExactScalar ExactScalar::parse(std::string_view literal)
{
    std::string_view body = literal;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("non-rational coefficient literal \"" + std::string(literal) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in literal \"" + std::string(literal) + "\"");
    }
    if (negative) {
        n = -n;
    }
    return ExactScalar(mpq_class(n, d));
}

ExactScalar ExactScalar::factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ExactScalar(mpq_class(f));
}

ExactScalar ExactScalar::binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return ExactScalar(mpq_class(b));
}

ExactScalar ExactScalar::falling_factorial(unsigned n, unsigned k)
{
    if (k > n) {
        return {};
    }
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
    }
    return ExactScalar(mpq_class(r));
}

std::string ExactScalar::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str(10);
    }
    return m_value.get_str(10);
}

long double ExactScalar::to_long_double() const
{
    // Two-part split keeps ~106 bits before the final rounding to the 64-bit mantissa.
    const mpf_class f(m_value, 256);
    const double hi = mpf_get_d(f.get_mpf_t());
    const mpf_class rem = f - mpf_class(hi, 256);
    const double lo = mpf_get_d(rem.get_mpf_t());
    return static_cast<long double>(hi) + static_cast<long double>(lo);
}

ExactScalar ExactScalar::abs() const
{
    return ExactScalar(mpq_class(::abs(m_value)));
}

ExactScalar ExactScalar::reciprocal() const
{
    if (is_zero()) {
        throw SeriesError("division by zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), m_value.get_mpq_t());
    return ExactScalar(std::move(r));
}

ExactScalar ExactScalar::pow(int e) const
{
    if (e < 0) {
        return reciprocal().pow(-e);
    }
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(e));
    return ExactScalar(mpq_class(n, d));
}

ExactScalar &ExactScalar::operator+=(const ExactScalar &o)
{
    m_value += o.m_value;
    return *this;
}

ExactScalar &ExactScalar::operator-=(const ExactScalar &o)
{
    m_value -= o.m_value;
    return *this;
}

ExactScalar &ExactScalar::operator*=(const ExactScalar &o)
{
    m_value *= o.m_value;
    return *this;
}

ExactScalar &ExactScalar::operator/=(const ExactScalar &o)
{
    if (o.is_zero()) {
        throw SeriesError("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

ExactScalar ExactScalar::operator-() const
{
    return ExactScalar(mpq_class(-m_value));
}

} // namespace tanperiod
