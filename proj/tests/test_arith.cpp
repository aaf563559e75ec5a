#include <doctest.h>

#include "steiner/arith.hpp"
#include "steiner/fp.hpp"
#include "steiner/rank.hpp"
#include "steiner/rational.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

TEST_SUITE_BEGIN("arith");

TEST_CASE("binomial coefficients") {
    CHECK(binom(5, 3) == 10);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK_THROWS_AS(binom(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(binom(2, -1), std::invalid_argument);
}

TEST_CASE("Pascal identity up to 30") {
    for (long a = 1; a <= 30; ++a)
        for (long k = 1; k <= a; ++k) CHECK(binom(a, k) == binom(a - 1, k) + binom(a - 1, k - 1));
}

TEST_CASE("rational reduction and invariants") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(0, 7).numerator() == 0);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    // a/b + c/d satisfies the cross-multiplication identity exactly
    const Rational a(3, 7), b(5, 11);
    const Rational s = a + b;
    CHECK(s.numerator() * 77 == (3 * 11 + 5 * 7) * s.denominator());

    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("splitmix stream and derived seeds are stable") {
    SplitMix64 g(Seed{7});
    const std::uint64_t first = g.next();
    SplitMix64 h(Seed{7});
    CHECK(h.next() == first);

    CHECK(derive(Seed{1}, 0).value == derive(Seed{1}, 0).value);
    CHECK(derive(Seed{1}, 0).value != derive(Seed{1}, 1).value);
    CHECK(derive(Seed{1}, 0).value != derive(Seed{2}, 0).value);
}

TEST_CASE("uniform residues land in range for tiny and huge moduli") {
    for (std::uint32_t p : {2u, 3u, 32003u, 2147483647u}) {
        SplitMix64 g(Seed{42});
        for (int i = 0; i < 200; ++i) CHECK(g.next_mod(p) < p);
    }
}

TEST_CASE("rng_matrix determinism and shapes") {
    const FpMatrix a = rng_matrix(2, 2, Seed{7}, 5);
    const FpMatrix b = rng_matrix(2, 2, Seed{7}, 5);
    CHECK(a == b);

    const FpMatrix empty = rng_matrix(0, 3, Seed{1}, 5);
    CHECK(empty.rows == 0);
    CHECK(empty.cols == 3);

    CHECK(rng_matrix(3, 3, Seed{1}, 32003) != rng_matrix(3, 3, Seed{2}, 32003));
    CHECK_THROWS_AS(rng_matrix(2, 2, Seed{1}, 6), std::invalid_argument);
}

TEST_CASE("modular scalar helpers") {
    const std::uint32_t p = 32003;
    for (std::uint32_t a : {1u, 17u, 32002u}) {
        CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
        CHECK(add_mod(a, p - a, p) == 0);
    }
    CHECK(sub_mod(3, 5, 7) == 5);
    CHECK_THROWS_AS(inv_mod(0, 7), std::invalid_argument);
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(32003));
    CHECK(is_prime_u32(2147483647));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(32001));
    CHECK_THROWS_AS(require_prime(0x80000000u), std::invalid_argument);
}

TEST_CASE("rank over F_p: fixed cases") {
    FpMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(rank_ffp(id, 5) == 4);

    const FpMatrix zero(3, 7);
    CHECK(rank_ffp(zero, 5) == 0);
    CHECK(nullity_ffp(zero, 5) == 7);

    FpMatrix m(2, 3);
    // second row proportional to the first mod 7
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 3; m.at(1, 1) = 6; m.at(1, 2) = 2;
    CHECK(rank_ffp(m, 7) == 1);
}

TEST_CASE("rank over F_p equals rank of the transpose") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        const FpMatrix m = rng_matrix(7, 11, Seed{100 + s}, 5);
        CHECK(rank_ffp(m, 5) == rank_ffp(m.transposed(), 5));
    }
}

TEST_CASE("rank over Q: fixed cases") {
    CHECK(rank_rational({{Int(2), Int(0)}, {Int(0), Int(3)}}) == 2);
    CHECK(rank_rational({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(rank_rational({}) == 0);
}

TEST_CASE("reduction mod p never increases rank") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const FpMatrix m = rng_matrix(10, 10, Seed{77 + s}, 5);
        CHECK(rank_rational(lift_to_integers(m)) >= rank_ffp(m, 5));
    }
}

TEST_CASE("rank over Q survives entries beyond machine words") {
    // Integer Hilbert-like matrix: Bareiss intermediates exceed 64 bits.
    const int n = 12;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int lcm = 1;
    for (int k = 1; k <= 2 * n; ++k) {
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), Int(k).get_mpz_t());
        lcm = lcm / g * k;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = lcm / (i + j + 1);
    CHECK(rank_rational(m) == n); // Hilbert matrices are nonsingular
}

TEST_SUITE_END();
