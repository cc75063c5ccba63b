#ifndef TANPERIOD_HALF_RETURN_HPP
#define TANPERIOD_HALF_RETURN_HPP

#include <optional>
#include <vector>

#include <tanperiod/exact_scalar.hpp>
#include <tanperiod/field.hpp>
#include <tanperiod/series.hpp>

namespace tanperiod
{

/// Coefficient functions of the t-expansion y(t, x) = sum_i y_i(x) t^i / i! of the second flow
/// component of the rescaled field (±delta, eta), started at (x, 0).
struct FlowYSeries {
    Side side = Side::plus;
    // entries[i - 1] holds y_i.
    std::vector<Series1> entries;

    int size() const
    {
        return static_cast<int>(entries.size());
    }
    // 1-based access, TruncationError past the end.
    const Series1 &operator()(int i) const;
};

/// Half-return map data of one side. Index n of `alpha` is the x^n coefficient of
/// phi(x) = -x + sum_{n>=2} alpha_n x^n (so alpha[0] = 0, alpha[1] = -1); index i of `mu` is mu_i
/// (mu[0] = 0).
struct HalfReturnData {
    Side side = Side::plus;
    FlowYSeries ys;
    std::vector<ExactScalar> mu;
    std::vector<ExactScalar> alpha;
    int order = 1;

    Series1 phi() const;
};

struct CenterReport {
    bool is_center_to_order = false;
    std::optional<int> first_mismatch_index;
    // Common half-return map, present only for centers.
    std::optional<Series1> phi;
    int order = 1;
    HalfReturnData plus;
    HalfReturnData minus;
};

// Runs the y_i recursion for i = 1..count. TruncationError if some y_i has no trustworthy
// coefficient left (count too large for the field order).
FlowYSeries y_coefficients(const PiecewiseField &field, const Classification &cls, Side side, int count);

// mu_0..mu_count; TruncationError when ys is too short or not known far enough in x.
std::vector<ExactScalar> mu_coefficients(const FlowYSeries &ys, int delta, int count);

// alpha_0..alpha_order from mu (needs mu through order + 2k - 1).
// RecursionError("degenerate recursion denominator") when mu_{2k} = 0.
std::vector<ExactScalar> alpha_coefficients(const std::vector<ExactScalar> &mu, int k, int order);

HalfReturnData half_return_data(const PiecewiseField &field, const Classification &cls, Side side, int order);

// Largest n for which alpha_n of the side is determined by the field's declared order.
int max_alpha_order(const PiecewiseField &field, const Classification &cls, Side side);

CenterReport center_check(const PiecewiseField &field, const Classification &cls, int order);

// phi(phi(x)) - x. SeriesError unless phi(0) = 0 and phi'(0) = -1.
Series1 involution_defect(const Series1 &phi);

} // namespace tanperiod

#endif
