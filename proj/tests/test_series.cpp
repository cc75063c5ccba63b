#include <doctest.h>

#include "support/test_support.hpp"

using namespace tptest;

TEST_CASE("exact scalars stay in lowest terms")
{
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(3, -6).to_string() == "-1/2");
    CHECK(q(8, 4).to_string() == "2");
    CHECK(ExactScalar::parse("1/3") * ExactScalar(3) == ExactScalar(1));
    CHECK(ExactScalar::parse("-12") == ExactScalar(-12));
    CHECK(ExactScalar::parse("+4/6") == q(2, 3));
    CHECK_THROWS_AS(ExactScalar::parse("0.5"), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("x"), ParseError);
    CHECK_THROWS_AS(q(1) / q(0), SeriesError);
    CHECK(ExactScalar::binomial(6, 2) == ExactScalar(15));
    CHECK(ExactScalar::falling_factorial(5, 2) == ExactScalar(20));
    CHECK(ExactScalar::falling_factorial(2, 3) == ExactScalar(0));
    CHECK(q(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-18));
}

TEST_CASE("series ring operations")
{
    SUBCASE("difference of squares")
    {
        const Series1 a = s1({1, 1, 0});
        const Series1 b = s1({1, -1, 0});
        CHECK(a * b == s1({1, 0, -1}));
    }
    SUBCASE("additive inverse")
    {
        const Series1 x = s1({0, 1});
        CHECK((x + (-x)).is_zero_through_order());
    }
    SUBCASE("cross terms cancel")
    {
        const Series1 a = s1({1, 1, q(1, 2)});
        const Series1 b = s1({1, -1, q(1, 2)});
        CHECK(a * b == s1({1, 0, 0}));
    }
    SUBCASE("min rule on orders")
    {
        const Series1 a = s1({1, 2, 3, 4});
        const Series1 b = s1({1, 1});
        CHECK((a + b).order() == 1);
        CHECK((a * b).order() == 1);
    }
    SUBCASE("products track valuation")
    {
        // x^2 * (unknown beyond x^1) is known through x^3
        const Series1 a = s1({0, 0, 1, 5});
        const Series1 b = s1({2, 3});
        const Series1 p = a * b;
        CHECK(p.order() == 3);
        CHECK(p == s1({0, 0, 2, 13}));
    }
    SUBCASE("lookups past the order are errors")
    {
        const Series1 a = s1({1, 2});
        CHECK_THROWS_AS(a[2], TruncationError);
        Series2 f(2);
        CHECK_THROWS_AS(f.at(2, 1), TruncationError);
    }
}

TEST_CASE("series reciprocal")
{
    CHECK(reciprocal(Series1::constant(q(2), 3)) == Series1::constant(q(1, 2), 3));
    CHECK(reciprocal(s1({1, 1, 0, 0})) == s1({1, -1, 1, -1}));
    CHECK_THROWS_WITH_AS(reciprocal(s1({0, 1, 2})), "not invertible at origin", SeriesError);

    const Series2 f = s2(3, {{0, 0, q(2)}, {1, 0, q(1)}, {0, 1, q(-1, 3)}, {1, 1, q(4)}});
    const Series2 prod = f * reciprocal(f);
    CHECK(prod == Series2::constant(q(1), 3));
    CHECK_THROWS_AS(reciprocal(s2(2, {{1, 0, q(1)}})), SeriesError);
}

TEST_CASE("composition")
{
    CHECK(compose1(s1({0, 1}), s1({0, -1})) == s1({0, -1}));
    CHECK(compose1(s1({0, -1}), s1({0, -1})) == s1({0, 1}));
    CHECK(compose1(s1({0, 1, 1, 0}), s1({0, 1, 1, 0})) == s1({0, 1, 2, 2}));
    CHECK_THROWS_AS(compose1(s1({0, 1}), s1({1, 1})), SeriesError);
}

TEST_CASE("bivariate substitution")
{
    SUBCASE("constant field")
    {
        const Series2 one = Series2::constant(q(1), 4);
        const Series1 u = s1({0, 1, 3, 0, 0});
        const Series1 v = s1({0, 0, -1, 2, 0});
        const Series1 r = eval2_at_series(one, u, v);
        CHECK(r[0] == q(1));
        for (int i = 1; i <= r.order(); ++i) {
            CHECK(r[i].is_zero());
        }
    }
    SUBCASE("projection onto y")
    {
        const Series2 y = s2(3, {{0, 1, q(1)}});
        const MixedSeries v(std::vector<TPoly>{TPoly(), TPoly(std::vector<ExactScalar>{0, -1}),
                                               TPoly(std::vector<ExactScalar>{0, 0, -1}), TPoly()});
        const MixedSeries u = lift(s1({0, 1, 0, 0}));
        const MixedSeries r = eval2_at_series(y, u, v);
        CHECK(r.truncated(3) == v);
    }
    SUBCASE("x + y at x, -x t")
    {
        const Series2 f = s2(2, {{1, 0, q(1)}, {0, 1, q(1)}});
        const MixedSeries u = lift(s1({0, 1, 0}));
        const MixedSeries v(std::vector<TPoly>{TPoly(), TPoly(std::vector<ExactScalar>{0, -1}), TPoly()});
        const MixedSeries r = eval2_at_series(f, u, v);
        CHECK(r[0].is_zero());
        CHECK(r[1] == TPoly(std::vector<ExactScalar>{1, -1}));
        CHECK(r[2].is_zero());
    }
    SUBCASE("nonzero constant terms are rejected")
    {
        const Series2 f = s2(2, {{1, 0, q(1)}});
        CHECK_THROWS_AS(eval2_at_series(f, s1({1, 1}), s1({0, 1})), SeriesError);
    }
}

TEST_CASE("integration over t in [0, 1]")
{
    const MixedSeries m(std::vector<TPoly>{TPoly::monomial(q(1), 1), TPoly(std::vector<ExactScalar>{1, -2, 3}),
                                           TPoly()});
    const Series1 r = t_integrate_01(m);
    CHECK(r == s1({q(1, 2), 1, 0}));
    CHECK(t_integrate_01(MixedSeries(3)).is_zero_through_order());
}

TEST_CASE("Series2 partial derivatives on the axis")
{
    // F = x^2 y + 3 x y^2
    const Series2 f = s2(3, {{2, 1, q(1)}, {1, 2, q(3)}});
    CHECK(f.mixed_partial_on_axis(0, 1) == s1({0, 0, 1}));
    CHECK(f.mixed_partial_on_axis(1, 1) == s1({0, 2}));
    CHECK(f.mixed_partial_on_axis(1, 2) == s1({6}));
    CHECK(f.y_coefficient(2) == s1({0, 3}));
    CHECK(f.divided_by_y() == s2(2, {{2, 0, q(1)}, {1, 1, q(3)}}));
    CHECK_THROWS_AS(s2(2, {{1, 0, q(1)}}).divided_by_y(), RecursionError);
}
