#include <doctest.h>

#include <tanperiod/half_return.hpp>

#include "support/test_support.hpp"

using namespace tptest;

namespace
{

void check_ys(const FlowYSeries &ys, std::initializer_list<Series1> expected)
{
    int i = 1;
    for (const Series1 &e : expected) {
        CAPTURE(i);
        const Series1 got = ys(i).truncated(e.order());
        CHECK(got == e);
        ++i;
    }
}

} // namespace

TEST_CASE("flow coefficient functions")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    check_ys(y_coefficients(e1, c1, Side::plus, 3), {s1({0, -1}), s1({-1}), s1({0})});
    check_ys(y_coefficients(e1, c1, Side::minus, 3), {s1({0, -1}), s1({1}), s1({0})});

    const PiecewiseField e2 = fixture("asymmetric");
    check_ys(y_coefficients(e2, classify(e2), Side::plus, 3), {s1({0, q(-1, 2)}), s1({q(-1, 2)}), s1({0})});

    CHECK_THROWS_AS(y_coefficients(e1, c1, Side::plus, 12), TruncationError);
    CHECK_THROWS_AS(y_coefficients(e1, c1, Side::plus, 0), TruncationError);
}

TEST_CASE("mu coefficients")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    const auto mu_plus = mu_coefficients(y_coefficients(e1, c1, Side::plus, 3), c1.delta, 3);
    CHECK(mu_plus[1] == q(0));
    CHECK(mu_plus[2] == q(1, 2));
    CHECK(mu_plus[3] == q(0));
    const auto mu_minus = mu_coefficients(y_coefficients(e1, c1, Side::minus, 3), c1.delta, 3);
    CHECK(mu_minus[1] == q(0));
    CHECK(mu_minus[2] == q(-1, 2));
    CHECK(mu_minus[3] == q(0));
    CHECK_THROWS_AS(mu_coefficients(y_coefficients(e1, c1, Side::plus, 3), c1.delta, 4), TruncationError);
}

TEST_CASE("alpha coefficients")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    CHECK(half_return_data(e1, c1, Side::plus, 2).alpha == std::vector<ExactScalar>{0, -1, 0});
    CHECK(half_return_data(e1, c1, Side::minus, 2).alpha == std::vector<ExactScalar>{0, -1, 0});

    const PiecewiseField e3 = fixture("cusp_fold");
    CHECK(half_return_data(e3, classify(e3), Side::plus, 2).alpha[2] == q(0));

    CHECK_THROWS_WITH_AS(alpha_coefficients({0, 0, 0, 0}, 1, 2), "degenerate recursion denominator", RecursionError);
    CHECK_THROWS_AS(alpha_coefficients({0, 0, q(1, 2)}, 1, 2), TruncationError);
}

TEST_CASE("center check")
{
    for (const char *name : {"fold_fold", "cusp_fold"}) {
        const PiecewiseField f = fixture(name);
        const CenterReport r = center_check(f, classify(f), 6);
        CAPTURE(name);
        CHECK(r.is_center_to_order);
        CHECK_FALSE(r.first_mismatch_index.has_value());
        REQUIRE(r.phi.has_value());
        CHECK(*r.phi == Series1::monomial(q(-1), 1, 6));
    }

    const PiecewiseField e5 = fixture("non_center");
    const CenterReport r = center_check(e5, classify(e5), 2);
    CHECK_FALSE(r.is_center_to_order);
    CHECK(r.first_mismatch_index == 2);
    CHECK_FALSE(r.phi.has_value());
    CHECK(r.plus.alpha[2] != q(0));
    CHECK(r.minus.alpha[2] == q(0));
}

TEST_CASE("involution defect")
{
    CHECK(involution_defect(s1({0, -1, 0, 0, 0})).is_zero_through_order());

    // (-u + u^2) at u = -x + x^2 is x - 2x^3 + x^4.
    const Series1 d = involution_defect(s1({0, -1, 1, 0, 0}));
    CHECK(d == s1({0, 0, 0, -2, 1}));

    for (int a = -3; a <= 3; ++a) {
        const ExactScalar al(a, 2);
        CHECK(involution_defect(s1({0, -1, al, -al * al})).is_zero_through_order());
        if (a != 0) {
            CHECK(involution_defect(s1({0, -1, al, al * al}))[3] == q(-4) * al * al);
        }
    }
    CHECK_THROWS_AS(involution_defect(s1({0, 1, 0})), SeriesError);
    CHECK_THROWS_AS(involution_defect(s1({1, -1, 0})), SeriesError);
}

TEST_CASE("recursion matches Picard iteration of the rescaled flow")
{
    Rng rng(20261016);
    std::vector<PiecewiseField> fields{fixture("fold_fold"), fixture("cusp_fold"), fixture("non_center"),
                                       fixture("cubic_center")};
    for (int n = 0; n < 6; ++n) {
        fields.push_back(random_center(rng, 5, 1 + n % 2));
    }
    // A non-center with y-dependence on both sides.
    fields.push_back(make_field(5, {{0, 0, q(1)}, {0, 1, q(2)}, {2, 0, q(1, 3)}},
                                {{1, 0, q(-1)}, {1, 1, q(1)}, {0, 2, q(-2)}, {2, 0, q(3)}},
                                {{0, 0, q(-2)}, {1, 1, q(1)}}, {{1, 0, q(-1)}, {0, 2, q(1, 2)}, {3, 0, q(1)}}));

    for (const PiecewiseField &field : fields) {
        const Classification cls = classify(field);
        for (Side side : {Side::plus, Side::minus}) {
            CAPTURE(dump_field(field));
            CAPTURE(side_name(side));
            const std::vector<Series1> oracle = picard_y(field, cls, side);
            const FlowYSeries ys = y_coefficients(field, cls, side, field.order + 1);
            for (int i = 1; i <= field.order + 1; ++i) {
                const Series1 &mine = ys(i);
                const Series1 &ref = oracle[static_cast<std::size_t>(i - 1)];
                const int upto = std::min(mine.order(), ref.order());
                CAPTURE(i);
                CHECK(upto >= field.order - i + 1);
                CHECK(mine.truncated(upto) == ref.truncated(upto));
            }

            const int k = cls.k(side);
            const int order = max_alpha_order(field, cls, side);
            const int root_order = std::min(order, field.order + 2 - 2 * k);
            REQUIRE(root_order >= 2);
            const auto alpha_ref = alpha_by_root(oracle, cls.sigma(side), k, root_order);
            const auto alpha = half_return_data(field, cls, side, root_order).alpha;
            CHECK(alpha == alpha_ref);
        }
    }
}

TEST_CASE("trustworthy alpha order")
{
    const PiecewiseField e1 = fixture("fold_fold");
    const Classification c1 = classify(e1);
    CHECK(max_alpha_order(e1, c1, Side::plus) == 8);
    const PiecewiseField e3 = fixture("cusp_fold");
    CHECK(max_alpha_order(e3, classify(e3), Side::plus) == 6);
}
