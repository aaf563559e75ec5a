#include <doctest.h>

#include "steiner/cohomology.hpp"
#include "steiner/rank_n.hpp"

using namespace steiner;

TEST_SUITE_BEGIN("rank_n");

TEST_CASE("resolution terms of the quartic-relation kernel") {
    const auto terms =
        resolution_terms(3, LineBundleSum(3, {{2, 4}}), LineBundleSum(3, {{4, 1}}));
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].bundle.str() == "0^6");
    CHECK(terms[1].bundle.str() == "-2^4");
    CHECK(terms[2].bundle.str() == "-4^1");
}

TEST_CASE("resolution terms of the Steiner dual shape") {
    // U_i = O(-1-i)^{r_i} with r_0 = 6, r_1 = 4, r_2 = 1
    const auto terms =
        resolution_terms(3, LineBundleSum(3, {{0, 4}}), LineBundleSum(3, {{1, 1}}));
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].bundle.str() == "-1^6");
    CHECK(terms[1].bundle.str() == "-2^4");
    CHECK(terms[2].bundle.str() == "-3^1");
    CHECK(resolution_multiplicity(3, 1, 0) == 6);
    CHECK(resolution_multiplicity(3, 1, 1) == 4);
    CHECK(resolution_multiplicity(3, 1, 2) == 1);
}

TEST_CASE("rank-gap and purity preconditions") {
    CHECK_THROWS_AS(
        resolution_terms(3, LineBundleSum(3, {{0, 3}}), LineBundleSum(3, {{1, 1}})),
        std::invalid_argument);
    CHECK_THROWS_AS(
        resolution_terms(2, LineBundleSum(2, {{0, 2}, {1, 1}}), LineBundleSum(2, {{2, 1}})),
        std::invalid_argument);
}

TEST_CASE("resolution Euler checks") {
    for (int n = 2; n <= 3; ++n) {
        for (long t = 1; t <= 4; ++t) {
            for (int m = 1; m <= 3; ++m) {
                const LineBundleSum v1(n, {{0, t + n}});
                const LineBundleSum v2(n, {{m, t}});
                const auto terms = resolution_terms(n, v1, v2);
                long alt_rank = 0;
                Int alt_chi = 0;
                for (const auto& term : terms) {
                    const long sign = term.index % 2 == 0 ? 1 : -1;
                    alt_rank += sign * term.bundle.rank();
                    alt_chi += Int(sign) * chi_sum(term.bundle, 0);
                }
                CHECK(alt_rank == n);
                CHECK(alt_chi == chi_sum(v1, 0) - chi_sum(v2, 0));
            }
        }
    }
}

TEST_CASE("closed form for the quartic-relation kernel") {
    const auto rc = h0_h1_formula(3, LineBundleSum(3, {{2, 4}}), LineBundleSum(3, {{4, 1}}));
    REQUIRE(rc.h0_applicable);
    REQUIRE(rc.h1_applicable);
    CHECK(*rc.h0 == 6);
    CHECK(*rc.h1 == 1);
}

TEST_CASE("closed form for the cotangent kernel at twist 0") {
    const auto rc = h0_h1_formula(3, LineBundleSum(3, {{0, 4}}), LineBundleSum(3, {{1, 1}}));
    REQUIRE(rc.h0_applicable);
    REQUIRE(rc.h1_applicable);
    CHECK(*rc.h0 == 0);
    CHECK(*rc.h1 == 0);
}

TEST_CASE("the vanishing twist of the Steiner dual on P^2") {
    for (long t = 1; t <= 4; ++t) {
        const int a = static_cast<int>(t) - 1;
        const auto rc = h0_h1_formula(2, LineBundleSum(2, {{a, t + 2}}),
                                      LineBundleSum(2, {{1 + a, t}}));
        REQUIRE(rc.h0_applicable);
        REQUIRE(rc.h1_applicable);
        CHECK(*rc.h0 == 0);
        CHECK(*rc.h1 == 0);
    }
}

TEST_CASE("formula reports inapplicability instead of a silent number") {
    // V1 degree below -n breaks the higher-vanishing hypothesis for h^1
    const auto rc = h0_h1_formula(2, LineBundleSum(2, {{-3, 4}}), LineBundleSum(2, {{1, 2}}));
    CHECK(rc.h0_applicable); // the U_i hypothesis is about middle cohomology
    CHECK_FALSE(rc.h1_applicable);
    CHECK(!rc.h1.has_value());
    CHECK(!rc.failed_hypotheses.empty());
}

TEST_CASE("formula equals the matrix path on a small grid") {
    for (int n = 2; n <= 3; ++n) {
        for (long t = 1; t <= 3; ++t) {
            for (int m = 1; m <= 2; ++m) {
                GeneralMapSpec spec;
                spec.n = n;
                spec.source = LineBundleSum(n, {{0, t + n}});
                spec.target = LineBundleSum(n, {{m, t}});
                spec.seed = Seed{41};
                spec.trials = 2;
                const auto table = cohomology_table(PresentationKind::Kernel, spec,
                                                    TwistWindow(0, 2));
                for (int a = 0; a <= 2; ++a) {
                    const auto rc = h0_h1_formula(n, spec.source.twisted(a),
                                                  spec.target.twisted(a));
                    REQUIRE(rc.h0_applicable);
                    REQUIRE(rc.h1_applicable);
                    CHECK(*rc.h0 == table.value(a, 0));
                    CHECK(*rc.h1 == table.value(a, 1));
                }
            }
        }
    }
}

TEST_CASE("two-group detector") {
    CHECK(two_group_detector(3, 2, 2, 4)); // a = dt
    CHECK_FALSE(two_group_detector(2, 2, 2, 4));
    // linear forms never produce two groups, nor do conics on the plane
    for (int a = -10; a <= 10; ++a) CHECK_FALSE(two_group_detector(3, 1, 3, a));
    for (int a = -10; a <= 14; ++a) CHECK_FALSE(two_group_detector(2, 2, 3, a));
    CHECK_THROWS_AS(two_group_detector(3, 0, 2, 0), std::invalid_argument);
}

TEST_CASE("detector hits are confirmed by the matrix path") {
    GeneralMapSpec spec;
    spec.n = 3;
    spec.source = LineBundleSum(3, {{0, 5}});
    spec.target = LineBundleSum(3, {{2, 2}});
    spec.seed = Seed{13};
    spec.trials = 1;
    REQUIRE(two_group_detector(3, 2, 2, 4));
    const auto table = cohomology_table(PresentationKind::Kernel, spec, TwistWindow(4, 4));
    CHECK(table.value(4, 0) > 0);
    CHECK(table.value(4, 1) > 0);
    CHECK(table.value(4, 0) == 10); // h^0 = r_0 = C(5,2)
    CHECK(table.value(4, 1) == 3);  // h^1 = r_2 * h^3(O(-4))
}

TEST_CASE("vanishing thresholds") {
    const auto a = vanishing_ranges(3, 4, 7);
    CHECK(a.k == 1);
    CHECK(a.h0_vanish_max == Rational(5, 2));
    CHECK(a.h1_vanish_min == Rational(6));
    CHECK(a.homological_rule_applies);

    const auto b = vanishing_ranges(3, 3, 5);
    CHECK(b.h1_vanish_min == Rational(4)); // t - 1, agreeing with t/k - 1

    const auto c = vanishing_ranges(3, 6, 4);
    CHECK(c.k == 2);
    CHECK(c.h0_vanish_max == Rational(1, 3));
    CHECK(c.h1_vanish_min == Rational(1));
    CHECK_FALSE(c.homological_rule_applies);

    CHECK_THROWS_AS(vanishing_ranges(3, 2, 1), std::invalid_argument);
}

TEST_SUITE_END();
