#include <tanperiod/half_return.hpp>

#include <algorithm>
#include <map>
#include <span>
#include <utility>

#include <tanperiod/bell.hpp>
#include <tanperiod/errors.hpp>

namespace tanperiod
{

const Series1 &FlowYSeries::operator()(int i) const
{
    if (i < 1 || i > size()) {
        throw TruncationError("y_" + std::to_string(i) + " not computed (have " + std::to_string(size()) + ")");
    }
    return entries[static_cast<std::size_t>(i - 1)];
}

Series1 HalfReturnData::phi() const
{
    return Series1(alpha);
}

namespace
{

ExactScalar ipow(int base, int e)
{
    return ExactScalar(base).pow(e);
}

ExactScalar fact(int n)
{
    return ExactScalar::factorial(static_cast<unsigned>(n));
}

ExactScalar binom(int n, int k)
{
    return ExactScalar::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

// n! / (n - k)!
ExactScalar falling(int n, int k)
{
    return ExactScalar::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

class YRecursion
{
public:
    YRecursion(const PiecewiseField &field, const Classification &cls, Side side)
        : m_order(field.order), m_k(cls.k(side)), m_a(cls.a(side)), m_sigma(cls.sigma(side))
    {
        FGSeries fg = fg_series(field, cls, side);
        m_f = std::move(fg.f);
        m_g = std::move(fg.g);
    }

    // y_1..y_count; stops early (returning fewer) when `strict` is false and an entry would carry
    // no trustworthy coefficient.
    std::vector<Series1> run(int count, bool strict)
    {
        const int two_k = 2 * m_k;
        std::vector<Series1> ys;
        ys.reserve(static_cast<std::size_t>(count));

        // y_1 = a x^{2k-1} + x^{2k} f(x)
        ys.push_back(Series1::monomial(m_a, two_k - 1, m_order) + m_f.shifted_up(two_k));

        for (int i = 2; i <= count; ++i) {
            const ExactScalar sig_i(ipow(m_sigma, i - 1));
            Series1 inner(m_order);
            if (i <= two_k) {
                inner += Series1::monomial(m_a * falling(two_k - 1, i - 1), two_k - i, m_order);
                for (int l = 0; l <= i - 1; ++l) {
                    inner += binom(i - 1, l) * falling(two_k, l) * f_derivative(i - 1 - l).shifted_up(two_k - l);
                }
            } else {
                inner += binom(i - 1, two_k) * fact(two_k) * f_derivative(i - 1 - two_k);
                for (int l = 0; l <= two_k - 1; ++l) {
                    inner += binom(i - 1, l) * falling(two_k, l) * f_derivative(i - l - 1).shifted_up(two_k - l);
                }
            }
            Series1 yi = sig_i * inner;

            for (int l = 1; l <= i - 1; ++l) {
                for (int j = 1; j <= l; ++j) {
                    const std::span<const Series1> args(ys.data(), static_cast<std::size_t>(l - j + 1));
                    const ExactScalar w = ExactScalar(j) * binom(i - 1, l) * ipow(m_sigma, i - l - 1);
                    yi += w * (partial_bell(l, j, args) * g_partial(i - l - 1, j - 1));
                }
            }

            if (yi.order() < 0) {
                if (strict) {
                    throw TruncationError("y_" + std::to_string(i) + " has no trustworthy coefficient at field order "
                                          + std::to_string(m_order));
                }
                break;
            }
            ys.push_back(std::move(yi));
        }
        return ys;
    }

private:
    const Series1 &f_derivative(int m)
    {
        while (static_cast<int>(m_fd.size()) <= m) {
            m_fd.push_back(m_fd.empty() ? m_f : m_fd.back().derivative());
        }
        return m_fd[static_cast<std::size_t>(m)];
    }

    // d^{dx+dy} g / dx^dx dy^dy on y = 0.
    const Series1 &g_partial(int dx, int dy)
    {
        auto it = m_gd.find({dx, dy});
        if (it == m_gd.end()) {
            it = m_gd.emplace(std::pair{dx, dy}, m_g.mixed_partial_on_axis(dx, dy)).first;
        }
        return it->second;
    }

    int m_order;
    int m_k;
    ExactScalar m_a;
    int m_sigma;
    Series1 m_f;
    Series2 m_g;
    std::vector<Series1> m_fd;
    std::map<std::pair<int, int>, Series1> m_gd;
};

// Largest i such that every y_j^{(i-j)}(0), j <= i, is known.
int trusted_mu_index(const FlowYSeries &ys)
{
    int best = 0;
    for (int i = 1; i <= ys.size(); ++i) {
        bool ok = true;
        for (int j = 1; j <= i && ok; ++j) {
            ok = i - j <= ys(j).order();
        }
        if (!ok) {
            break;
        }
        best = i;
    }
    return best;
}

} // namespace

FlowYSeries y_coefficients(const PiecewiseField &field, const Classification &cls, Side side, int count)
{
    if (count < 1) {
        throw TruncationError("y_coefficients needs count >= 1");
    }
    YRecursion rec(field, cls, side);
    return FlowYSeries{side, rec.run(count, true)};
}

std::vector<ExactScalar> mu_coefficients(const FlowYSeries &ys, int delta, int count)
{
    if (count > ys.size()) {
        throw TruncationError("mu_" + std::to_string(count) + " needs y_1..y_" + std::to_string(count) + ", have "
                              + std::to_string(ys.size()));
    }
    const int minus_sigma = -side_sign(ys.side) * delta;
    std::vector<ExactScalar> mu(static_cast<std::size_t>(count + 1));
    for (int i = 1; i <= count; ++i) {
        ExactScalar acc;
        for (int j = 1; j <= i; ++j) {
            // y_j^{(i-j)}(0) = (i-j)! [x^{i-j}] y_j
            const ExactScalar deriv = fact(i - j) * ys(j)[i - j];
            acc += ipow(minus_sigma, j) * binom(i, j) * deriv;
        }
        mu[static_cast<std::size_t>(i)] = acc / fact(i);
    }
    return mu;
}

std::vector<ExactScalar> alpha_coefficients(const std::vector<ExactScalar> &mu, int k, int order)
{
    const int two_k = 2 * k;
    if (order < 1) {
        throw TruncationError("alpha order must be >= 1");
    }
    std::vector<ExactScalar> alpha{ExactScalar(0), ExactScalar(-1)};
    if (order == 1) {
        return alpha;
    }
    const int needed = order + two_k - 1;
    if (static_cast<int>(mu.size()) <= needed) {
        throw TruncationError("alpha_" + std::to_string(order) + " needs mu through index " + std::to_string(needed));
    }
    const ExactScalar &mu_2k = mu[static_cast<std::size_t>(two_k)];
    if (mu_2k.is_zero()) {
        throw RecursionError("degenerate recursion denominator");
    }
    const ExactScalar denom = ExactScalar(two_k) * mu_2k;

    for (int n = 2; n <= order; ++n) {
        const int p = n + two_k - 1;
        // (alpha_1, ..., alpha_{n-1}, 0)
        std::vector<ExactScalar> head(alpha.begin() + 1, alpha.begin() + n);
        head.emplace_back(0);
        ExactScalar poly = mu_2k * ordinary_bell(p, two_k, head);
        for (int i = two_k + 1; i <= p; ++i) {
            const ExactScalar &mu_i = mu[static_cast<std::size_t>(i)];
            if (mu_i.is_zero()) {
                continue;
            }
            const std::span<const ExactScalar> args(alpha.data() + 1, static_cast<std::size_t>(p - i + 1));
            poly += mu_i * ordinary_bell(p, i, args);
        }
        alpha.push_back((poly - mu[static_cast<std::size_t>(p)]) / denom);
    }
    return alpha;
}

HalfReturnData half_return_data(const PiecewiseField &field, const Classification &cls, Side side, int order)
{
    const int k = cls.k(side);
    const int mu_count = order + 2 * k - 1;
    HalfReturnData out;
    out.side = side;
    out.ys = y_coefficients(field, cls, side, mu_count);
    out.mu = mu_coefficients(out.ys, cls.delta, mu_count);
    out.alpha = alpha_coefficients(out.mu, k, order);
    out.order = order;
    return out;
}

int max_alpha_order(const PiecewiseField &field, const Classification &cls, Side side)
{
    YRecursion rec(field, cls, side);
    const FlowYSeries ys{side, rec.run(field.order + 2, false)};
    const int mu_max = trusted_mu_index(ys);
    return std::max(1, mu_max - 2 * cls.k(side) + 1);
}

CenterReport center_check(const PiecewiseField &field, const Classification &cls, int order)
{
    CenterReport report;
    report.order = order;
    report.plus = half_return_data(field, cls, Side::plus, order);
    report.minus = half_return_data(field, cls, Side::minus, order);
    for (int n = 1; n <= order; ++n) {
        if (report.plus.alpha[static_cast<std::size_t>(n)] != report.minus.alpha[static_cast<std::size_t>(n)]) {
            report.first_mismatch_index = n;
            break;
        }
    }
    report.is_center_to_order = !report.first_mismatch_index.has_value();
    if (report.is_center_to_order) {
        report.phi = report.plus.phi();
    }
    return report;
}

Series1 involution_defect(const Series1 &phi)
{
    if (phi.order() < 1 || !phi[0].is_zero() || phi[1] != ExactScalar(-1)) {
        throw SeriesError("involution_defect requires phi(0) = 0 and phi'(0) = -1");
    }
    return compose1(phi, phi) - Series1::monomial(ExactScalar(1), 1, phi.order());
}

} // namespace tanperiod
