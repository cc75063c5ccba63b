#include <doctest.h>

#include <tanperiod/period.hpp>

#include "support/test_support.hpp"

using namespace tptest;

namespace
{

std::vector<ExactScalar> ints(std::initializer_list<int> v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("scaled flow series")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    const Series1 phi = Series1::monomial(q(-1), 1, 3);

    const MixedSeries up = scaled_flow_series(y_coefficients(e1, c1, Side::plus, 3), c1, phi, 3);
    CHECK(up[0].is_zero());
    CHECK(up[1].is_zero());
    CHECK(up[2] == TPoly(ints({0, 2, -2})));
    CHECK(up[3].is_zero());

    const MixedSeries down = scaled_flow_series(y_coefficients(e1, c1, Side::minus, 3), c1, phi, 3);
    CHECK(down[2] == TPoly(ints({0, -2, 2})));

    CHECK_THROWS_AS(scaled_flow_series(y_coefficients(e1, c1, Side::plus, 2), c1, phi, 3), TruncationError);
}

TEST_CASE("half-period series")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    const Series1 phi = Series1::monomial(q(-1), 1, 3);
    CHECK(half_period_series(e1, c1, y_coefficients(e1, c1, Side::plus, 3), phi, 3) == s1({0, -2, 0, 0}));
    CHECK(half_period_series(e1, c1, y_coefficients(e1, c1, Side::minus, 3), phi, 3) == s1({0, 2, 0, 0}));

    const PiecewiseField e2 = fixture("asymmetric");
    const Classification c2 = classify(e2);
    CHECK(half_period_series(e2, c2, y_coefficients(e2, c2, Side::plus, 3), phi, 3) == s1({0, -1, 0, 0}));
}

TEST_CASE("period constants of the fixtures")
{
    CHECK(period_constants(fixture("fold_fold"), 4).t_hat == ints({0, 4, 0, 0, 0}));
    CHECK(period_constants(fixture("asymmetric"), 3).t_hat == ints({0, 3, 0, 0}));
    CHECK(period_constants(fixture("cusp_fold"), 3).t_hat == ints({0, 4, 0, 0}));

    const PeriodData quartic = period_constants(fixture("quartic_center"), 4);
    CHECK(quartic.t_hat == ints({0, 3, 0, 0, 0}));

    // int_{-x}^{x} ds / (2 + 10 s^4) = x - x^5 + ..., so the first correction appears at x^5.
    const PiecewiseField deep = make_field(6, {{0, 0, q(2)}, {4, 0, q(10)}}, {{1, 0, q(-1)}}, {{0, 0, q(-1)}},
                                           {{1, 0, q(-1)}});
    const PeriodData d = period_constants(deep, 5);
    CHECK(d.t_hat == ints({0, 3, 0, 0, 0, -1}));
}

TEST_CASE("period constants refuse non-centers and excessive orders")
{
    const PiecewiseField e5 = fixture("non_center");
    try {
        (void)period_constants(e5, 2);
        FAIL("expected NotCenterError");
    } catch (const NotCenterError &e) {
        CHECK(std::string(e.what()) == "not a center to requested order");
        CHECK(e.first_mismatch_index() == 2);
    }
    CHECK_THROWS_AS(period_constants(fixture("fold_fold"), 9), TruncationError);
    CHECK_THROWS_AS(period_constants(fixture("fold_fold"), 0), TruncationError);
    CHECK_THROWS_AS(period_constants(fixture("visible"), 2), ClassificationError);
}

TEST_CASE("closed forms for the first period constants")
{
    CHECK(corollary_values(fixture("fold_fold")) == std::pair{q(0), q(4)});
    CHECK(corollary_values(fixture("asymmetric")) == std::pair{q(0), q(3)});
    for (int c = 1; c <= 5; ++c) {
        const PiecewiseField f
            = make_field(2, {{0, 0, q(c)}}, {{1, 0, q(-1)}}, {{0, 0, q(-c)}}, {{1, 0, q(-1)}});
        CHECK(corollary_values(f).second == q(4, c));
    }
}

TEST_CASE("tilde period")
{
    CHECK(tilde_period(s1({0, -1})) == s1({0, 4}));
    CHECK(tilde_period(s1({0, -1, 1})) == s1({0, 4, -2}));
    CHECK(tilde_period(s1({0, -1}))[0] == q(0));
}

TEST_CASE("period constants of a unit-speed field equal the tilde period")
{
    // |X| = 1 on both sides, so the period equals 2 (x - phi(x)).
    const PiecewiseField f
        = make_field(6, {{0, 0, q(1)}}, {{1, 0, q(-1)}, {3, 0, q(2)}, {1, 1, q(1)}, {0, 2, q(1)}}, {{0, 0, q(-1)}},
                     {{1, 0, q(-1)}, {3, 0, q(2)}, {1, 1, q(-1)}, {0, 2, q(1)}});
    const PeriodData d = period_constants(f, 4);
    CHECK(d.t == tilde_period(d.phi).truncated(4));
}

TEST_CASE("half-period sign structure")
{
    for (const char *name : {"fold_fold", "asymmetric", "cusp_fold", "cubic_center", "quartic_center"}) {
        const PiecewiseField f = fixture(name);
        const PeriodData d = period_constants(f, 2);
        CAPTURE(name);
        CHECK(d.t_plus[1].sign() * d.t_minus[1].sign() < 0);
        CHECK(d.t_hat[1].sign() > 0);
    }
}
