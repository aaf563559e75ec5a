#include <doctest.h>

#include "steiner/bott.hpp"
#include "steiner/rational.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

TEST_SUITE_BEGIN("bott");

TEST_CASE("line bundle cohomology dimensions") {
    CHECK(h_line(3, 2, 0) == 10);
    CHECK(h_line(3, -5, 3) == 4);
    for (int i = 0; i <= 2; ++i) CHECK(h_line(2, -1, i) == 0);
    CHECK(h_line(2, 0, 0) == 1);
    CHECK(h_line(4, -5, 4) == 1);
    CHECK_THROWS_AS(h_line(3, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(h_line(3, 0, -1), std::invalid_argument);
}

TEST_CASE("vanishing pattern: only h^0 or h^n, acyclic exactly in the middle band") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = -12; d <= 12; ++d) {
            const Int h0 = h_line(n, d, 0);
            const Int hn = h_line(n, d, n);
            CHECK(h0 * hn == 0);
            const bool acyclic = h0 == 0 && hn == 0;
            CHECK(acyclic == (-n <= d && d <= -1));
        }
    }
}

TEST_CASE("Serre duality for line bundles") {
    for (int n = 1; n <= 4; ++n)
        for (int d = -12; d <= 12; ++d)
            for (int i = 0; i <= n; ++i) CHECK(h_line(n, d, i) == h_line(n, -d - n - 1, n - i));
}

TEST_CASE("Euler characteristics of sums") {
    const LineBundleSum triv(3, {{0, 4}});
    CHECK(chi_sum(triv, 0) == 4);

    const LineBundleSum src(3, {{2, 4}});
    const LineBundleSum tgt(3, {{4, 1}});
    CHECK(chi_sum(src, 0) - chi_sum(tgt, 0) == 5); // = h^0 - h^1 = 6 - 1

    const LineBundleSum neg(2, {{-1, 1}});
    CHECK(chi_sum(neg, 0) == 0);
}

TEST_CASE("chi is the interpolating polynomial of its first n+1 values") {
    // Lagrange interpolation through a in [0, n] must reproduce chi at other twists.
    SplitMix64 g(Seed{31});
    for (int n = 2; n <= 4; ++n) {
        std::vector<Summand> summands;
        const int count = 1 + static_cast<int>(g.next_mod(3));
        for (int s = 0; s < count; ++s)
            summands.push_back({static_cast<int>(g.next_mod(9)) - 4,
                                1 + static_cast<long>(g.next_mod(4))});
        const LineBundleSum v(n, summands);
        auto chi_at = [&](int a) { return Rational(chi_sum(v, a)); };
        for (int a : {-7, -3, 5, 9, 14}) {
            Rational interp(0);
            for (int i = 0; i <= n; ++i) {
                Rational term = chi_at(i);
                for (int j = 0; j <= n; ++j) {
                    if (j == i) continue;
                    term = term * Rational(a - j, i - j);
                }
                interp = interp + term;
            }
            CHECK(interp == chi_at(a));
        }
    }
}

TEST_CASE("alpha and beta") {
    CHECK(alpha_beta(3, 4, 5).alpha == 4);
    CHECK(alpha_beta(3, 4, 5).beta == 3);
    CHECK(alpha_beta(3, 3, 2).alpha == 2);
    CHECK(alpha_beta(3, 3, 2).beta == 2);
    CHECK(alpha_beta(2, 5, 3).alpha == 2);
    CHECK(alpha_beta(2, 5, 3).beta == 1);
    CHECK_THROWS_AS(alpha_beta(3, 0, 1), std::invalid_argument);
}

TEST_CASE("sum normalization, parsing and printing") {
    const LineBundleSum v(2, {{1, 2}, {0, 7}, {1, 1}});
    CHECK(v.str() == "0^7,1^3");
    CHECK(v.rank() == 10);
    CHECK(v.degree() == 3);

    CHECK(LineBundleSum::parse(3, "2^4").str() == "2^4");
    CHECK(LineBundleSum::parse(3, "0^7,1^2").str() == "0^7,1^2");
    CHECK(LineBundleSum::parse(3, "-1^3").str() == "-1^3");
    CHECK(LineBundleSum::parse(3, "4").str() == "4^1");
    CHECK(LineBundleSum::parse(2, " 1^2 , 0^1 ").str() == "0^1,1^2");
    CHECK_THROWS_AS(LineBundleSum::parse(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(LineBundleSum::parse(2, "a^2"), std::invalid_argument);
    CHECK_THROWS_AS(LineBundleSum::parse(2, "1^0"), std::invalid_argument);
    CHECK_THROWS_AS(LineBundleSum(0, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("dual and twist") {
    const LineBundleSum v(2, {{-1, 2}, {3, 1}});
    CHECK(v.dual().str() == "-3^1,1^2");
    CHECK(v.twisted(2).str() == "1^2,5^1");
    CHECK(v.twisted(2).dual() == v.dual().twisted(-2));
}

TEST_CASE("twist windows") {
    CHECK(TwistWindow(-2, 3).size() == 6);
    CHECK_THROWS_AS(TwistWindow(1, 0), std::invalid_argument);
}

TEST_SUITE_END();
