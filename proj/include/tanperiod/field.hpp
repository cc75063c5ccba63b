#ifndef TANPERIOD_FIELD_HPP
#define TANPERIOD_FIELD_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <tanperiod/exact_scalar.hpp>
#include <tanperiod/series.hpp>
#include <tanperiod/series2.hpp>

namespace tanperiod
{

enum class Side { plus, minus };

// +1 for the upper half-plane piece, -1 for the lower one.
constexpr int side_sign(Side s)
{
    return s == Side::plus ? 1 : -1;
}

constexpr const char *side_name(Side s)
{
    return s == Side::plus ? "plus" : "minus";
}

/// Planar Filippov field around the origin with switching line {y = 0}:
/// Z+ = (X+, Y+) on y > 0 and Z- = (X-, Y-) on y < 0, each known through total degree `order`.
struct PiecewiseField {
    Series2 x_plus;
    Series2 y_plus;
    Series2 x_minus;
    Series2 y_minus;
    int order = 0;

    const Series2 &x(Side s) const
    {
        return s == Side::plus ? x_plus : x_minus;
    }
    const Series2 &y(Side s) const
    {
        return s == Side::plus ? y_plus : y_minus;
    }

    // Throws ParseError unless all four components share `order`.
    void validate() const;

    friend bool operator==(const PiecewiseField &, const PiecewiseField &) = default;
};

struct ConditionVerdicts {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
};

struct Classification {
    int k_plus = 0;
    int k_minus = 0;
    // Rotation orientation: +1 clockwise, -1 anticlockwise.
    int delta = 0;
    ExactScalar a_plus;
    ExactScalar a_minus;
    ConditionVerdicts verdicts;

    int k(Side s) const
    {
        return s == Side::plus ? k_plus : k_minus;
    }
    const ExactScalar &a(Side s) const
    {
        return s == Side::plus ? a_plus : a_minus;
    }
    // The "±δ" factor of the side: +δ above, -δ below.
    int sigma(Side s) const
    {
        return side_sign(s) * delta;
    }
};

/// Outcome of checking C1-C3 without throwing. `failure` holds the rejection message of the first
/// failed condition; `classification` is set only when all three hold.
struct ConditionReport {
    ConditionVerdicts verdicts;
    std::optional<int> k_plus;
    std::optional<int> k_minus;
    std::optional<std::string> failure;
    std::optional<Classification> classification;
};

PiecewiseField load_field(std::string_view document);
// IoError when the file cannot be read, ParseError when its contents are malformed.
PiecewiseField load_field_file(const std::filesystem::path &path);
std::string dump_field(const PiecewiseField &field);

ConditionReport check_conditions(const PiecewiseField &field);
// Throws ClassificationError carrying the first failed condition's message.
Classification classify(const PiecewiseField &field);

// eta+ = delta Y+/X+, eta- = -delta Y-/X-.
Series2 eta_series(const PiecewiseField &field, const Classification &cls, Side side);

struct FGSeries {
    Series1 f;
    Series2 g;
};

// eta(x, y) = a x^{2k-1} + x^{2k} f(x) + y g(x, y) for the given side.
FGSeries fg_series(const PiecewiseField &field, const Classification &cls, Side side);

// The time-rescaled field Z/|X| = (±delta, eta±).
PiecewiseField reparametrized_field(const PiecewiseField &field, const Classification &cls);

/// Builds a field with a tangential center from its upper piece: the lower piece is
/// scale(x, y) * (-X+(x, -y), Y+(x, -y)), whose orbits are mirror images of the upper ones.
/// `scale` must have a positive constant term. The result's order is the smallest input order.
PiecewiseField mirrored_center(const Series2 &x_plus, const Series2 &y_plus, const Series2 &scale);

// F(x, -y).
Series2 reflect_y(const Series2 &f);

} // namespace tanperiod

#endif
