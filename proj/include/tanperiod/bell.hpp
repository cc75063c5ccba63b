#ifndef TANPERIOD_BELL_HPP
#define TANPERIOD_BELL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <tanperiod/errors.hpp>
#include <tanperiod/exact_scalar.hpp>

namespace tanperiod
{

/// One admissible exponent tuple (b_1, ..., b_{p-q+1}) of the Bell definition sums, i.e.
/// sum_j j*b_j = p and sum_j b_j = q, together with its two multinomial weights.
struct BellTerm {
    std::vector<int> exponents;
    // p! / (prod b_j! * prod (j!)^{b_j})
    ExactScalar partial_weight;
    // q! / prod b_j!
    ExactScalar ordinary_weight;
};

// Memoized and safe to call concurrently. Throws SeriesError unless 1 <= q <= p.
const std::vector<BellTerm> &bell_terms(int p, int q);

namespace detail
{

inline void check_bell_args(int p, int q, std::size_t len)
{
    if (q < 1 || q > p) {
        throw SeriesError("Bell polynomial requires 1 <= q <= p, got p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    if (len != static_cast<std::size_t>(p - q + 1)) {
        throw SeriesError("Bell polynomial B_{" + std::to_string(p) + "," + std::to_string(q) + "} takes "
                          + std::to_string(p - q + 1) + " arguments, got " + std::to_string(len));
    }
}

template <class T, class Weight>
T bell_sum(int p, int q, std::span<const T> xs, Weight weight)
{
    check_bell_args(p, q, xs.size());
    const auto &terms = bell_terms(p, q);
    T total{};
    bool have_total = false;
    for (const auto &term : terms) {
        // q >= 1 guarantees at least one factor per monomial.
        T mono{};
        bool have_mono = false;
        for (std::size_t j = 0; j < term.exponents.size(); ++j) {
            for (int e = 0; e < term.exponents[j]; ++e) {
                if (have_mono) {
                    mono = mono * xs[j];
                } else {
                    mono = xs[j];
                    have_mono = true;
                }
            }
        }
        mono = weight(term) * mono;
        if (have_total) {
            total = total + mono;
        } else {
            total = std::move(mono);
            have_total = true;
        }
    }
    return total;
}

} // namespace detail

/// Partial (exponential) Bell polynomial B_{p,q}(x_1, ..., x_{p-q+1}).
///
/// T needs `T * T`, `T + T` and `ExactScalar * T`; ExactScalar and Series1 both qualify.
template <class T>
T partial_bell(int p, int q, std::span<const T> xs)
{
    return detail::bell_sum(p, q, xs, [](const BellTerm &t) -> const ExactScalar & { return t.partial_weight; });
}

/// Ordinary Bell polynomial: the coefficient of s^p in (x_1 s + x_2 s^2 + ...)^q.
template <class T>
T ordinary_bell(int p, int q, std::span<const T> xs)
{
    return detail::bell_sum(p, q, xs, [](const BellTerm &t) -> const ExactScalar & { return t.ordinary_weight; });
}

template <class T>
T partial_bell(int p, int q, const std::vector<T> &xs)
{
    return partial_bell(p, q, std::span<const T>(xs));
}

template <class T>
T ordinary_bell(int p, int q, const std::vector<T> &xs)
{
    return ordinary_bell(p, q, std::span<const T>(xs));
}

} // namespace tanperiod

#endif
