#include <doctest.h>

#include "steiner/cohomology.hpp"
#include "table_properties.hpp"

using namespace steiner;

TEST_SUITE_BEGIN("cohomology");

namespace {

GeneralMapSpec make_spec(int n, const std::string& src, const std::string& tgt,
                         std::uint64_t seed = 1, int trials = 2) {
    GeneralMapSpec spec;
    spec.n = n;
    spec.source = LineBundleSum::parse(n, src);
    spec.target = LineBundleSum::parse(n, tgt);
    spec.seed = Seed{seed};
    spec.trials = trials;
    return spec;
}

} // namespace

TEST_CASE("kernel of a general quartic relation among quadrics on P^3") {
    const auto spec = make_spec(3, "2^4", "4^1");
    const auto table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(-2, 3));
    CHECK(table.value(0, 0) == 6);
    CHECK(table.value(0, 1) == 1);
    CHECK(table.value(0, 2) == 0);
    CHECK(table.value(0, 3) == 0);
    CHECK(table.entry(0, 0).provenance == Provenance::Matrix);
    CHECK(table.entry(0, 3).provenance == Provenance::Formula);
    CHECK_FALSE(table.local_freeness_warning()); // rank gap 3 = n

    std::string why;
    CHECK_MESSAGE(testutil::euler_conserved(table, &why), why);
    CHECK_MESSAGE(testutil::h0_monotone(table, &why), why);
    CHECK_MESSAGE(testutil::h1_one_sided(table, &why), why);
}

TEST_CASE("twisted cotangent bundle via the Euler presentation") {
    const auto spec = make_spec(3, "0^4", "1^1");
    const auto table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(-1, 2));
    // V = Omega(1): h^0(V(1)) = 4*C(4,3) - C(5,3) = 6
    CHECK(table.value(1, 0) == 6);
    CHECK(table.value(0, 0) == 0);
    CHECK(table.value(0, 1) == 0);
}

TEST_CASE("acyclic twists give all-zero rows") {
    const auto spec = make_spec(3, "0^5", "1^2");
    const auto table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(-3, -2));
    for (int a = -3; a <= -2; ++a)
        for (int i = 0; i <= 3; ++i) CHECK(table.value(a, i) == 0);
}

TEST_CASE("cokernel on P^2: twisted tangent bundle") {
    // coker(O(-1) -> O^3) = T(-1)
    const auto spec = make_spec(2, "-1^1", "0^3");
    const auto table =
        cohomology_table(PresentationKind::Cokernel, spec, TwistWindow(-4, 1));
    auto row = [&](int a) {
        return std::vector<std::int64_t>{table.value(a, 0), table.value(a, 1),
                                         table.value(a, 2)};
    };
    CHECK(row(1) == std::vector<std::int64_t>{8, 0, 0});  // T
    CHECK(row(0) == std::vector<std::int64_t>{3, 0, 0});  // T(-1)
    CHECK(row(-1) == std::vector<std::int64_t>{0, 0, 0}); // T(-2) = Omega(1)
    CHECK(row(-2) == std::vector<std::int64_t>{0, 1, 0}); // T(-3) = Omega
    CHECK(row(-3) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(row(-4) == std::vector<std::int64_t>{0, 0, 3}); // Serre dual of T(-1)
    std::string why;
    CHECK_MESSAGE(testutil::euler_conserved(table, &why), why);
}

TEST_CASE("table rejects n = 1 and waived specs") {
    auto spec = make_spec(3, "0^4", "1^1");
    spec.n = 1;
    spec.source = LineBundleSum(1, {{0, 4}});
    spec.target = LineBundleSum(1, {{1, 1}});
    CHECK_THROWS_AS(cohomology_table(PresentationKind::Kernel, spec, TwistWindow(0, 1)),
                    std::invalid_argument);

    auto waived = make_spec(2, "1^3", "1^1");
    waived.allow_nonpositive_gap = true;
    CHECK_THROWS_AS(cohomology_table(PresentationKind::Kernel, waived, TwistWindow(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("local-freeness warning for small rank gaps") {
    const auto spec = make_spec(3, "0^3", "1^1");
    const auto table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(0, 1));
    CHECK(table.local_freeness_warning()); // gap 2 < n = 3
}

TEST_CASE("budget refusal") {
    const auto spec = make_spec(3, "0^4", "1^1");
    TableOptions opts;
    opts.budget = 3;
    CHECK_THROWS_AS(cohomology_table(PresentationKind::Kernel, spec, TwistWindow(0, 1), opts),
                    BudgetExceeded);
}

TEST_CASE("Serre duality round trip on a grid of small presentations") {
    struct Case {
        int n;
        const char* src;
        const char* tgt;
    };
    const Case cases[] = {
        {2, "0^4", "1^2"},
        {2, "0^5", "2^1"},
        {2, "-1^3,0^2", "1^2,2^1"},
        {3, "0^4", "1^1"},
        {3, "2^4", "4^1"},
    };
    for (const auto& c : cases) {
        const auto spec = make_spec(c.n, c.src, c.tgt, 17, 2);
        std::vector<GeneralMap> trials;
        for (int t = 0; t < spec.trials; ++t) trials.emplace_back(spec, t);
        const auto table = cohomology_table(PresentationKind::Kernel, trials,
                                            TwistWindow(-c.n - 2, 3));
        std::string why;
        const std::string label = std::string(c.src) + " -> " + c.tgt + ": " + why;
        CHECK_MESSAGE(testutil::serre_round_trip(trials, table, kDefaultBudget, &why), label);
    }
}

TEST_CASE("maximal rank checker") {
    const auto e13 = max_rank_check(make_spec(3, "2^4", "4^1"));
    CHECK_FALSE(e13.holds);
    CHECK(e13.defect == 1);

    const auto euler = max_rank_check(make_spec(2, "0^3", "1^1"));
    CHECK(euler.holds);
    CHECK(euler.defect == 0);

    // no sections on the target side at twist 0
    const auto empty = max_rank_check(make_spec(2, "-3^1", "-1^1"));
    CHECK(empty.holds);
    CHECK(empty.defect == 0);
}

TEST_CASE("naturality of small Steiner duals") {
    const NaturalVerdict v1 = natural_check(3, 3, 1, {});
    CHECK(v1.natural);
    CHECK(v1.alpha == 1);
    CHECK(v1.beta == 1);
    CHECK(v1.failing_twists.empty());

    const NaturalVerdict v2 = natural_check(3, 6, 5, {});
    CHECK(v2.natural);

    CHECK_THROWS_AS(natural_check(3, 2, 1, {}), std::invalid_argument);
}

TEST_CASE("a presentation with two nonzero groups at one twist is flagged") {
    const auto spec = make_spec(3, "2^4", "4^1");
    const NaturalVerdict v =
        natural_check_spec(PresentationKind::Kernel, spec, TwistWindow(-2, 3));
    CHECK_FALSE(v.natural);
    REQUIRE(v.failing_twists.size() == 1);
    CHECK(v.failing_twists[0].a == 0);
    CHECK(v.failing_twists[0].nonzero == std::vector<int>{0, 1});
    // 35x40 is small enough for the rational backend to confirm the defect
    CHECK_FALSE(v.char0_unresolved);
}

TEST_CASE("sweep over a small grid") {
    SweepOptions opts;
    opts.trials = 2;
    const auto records = sweep(2, 2, 4, 1, 3, opts);
    REQUIRE(records.size() == 9);
    for (const auto& rec : records) {
        CHECK(rec.status == SweepRecord::Status::Natural);
        CHECK(rec.all_trials_agreed);
    }

    // empty range
    CHECK(sweep(2, 3, 2, 1, 1, opts).empty());

    // r below n is recorded but skipped
    const auto skipped = sweep(3, 2, 2, 1, 1, opts);
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0].status == SweepRecord::Status::Skipped);

    // budget-capped cells are skipped and marked
    SweepOptions tiny = opts;
    tiny.budget = 5;
    const auto capped = sweep(2, 2, 2, 2, 2, tiny);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0].status == SweepRecord::Status::Skipped);
    CHECK(capped[0].max_cols > 5);
}

TEST_CASE("a narrow user window still evaluates both test points") {
    NaturalOptions opts;
    opts.trials = 1;
    opts.window = TwistWindow(0, 0); // alpha - 1 = 1 lies outside
    const NaturalVerdict v = natural_check(3, 3, 2, opts);
    CHECK(v.alpha == 2);
    CHECK(v.table.window().hi >= v.alpha_point);
    CHECK(v.natural);
}

TEST_CASE("sweep results do not depend on the thread count") {
    SweepOptions one, four;
    one.trials = 1;
    one.threads = 1;
    four = one;
    four.threads = 4;
    CHECK(sweep(2, 2, 5, 1, 3, one) == sweep(2, 2, 5, 1, 3, four));
}

TEST_CASE("sweep persistence round-trips exactly") {
    SweepOptions opts;
    opts.trials = 2;
    opts.seed = Seed{33};
    auto records = sweep(2, 2, 3, 1, 2, opts);
    records.push_back(records.back());
    records.back().status = SweepRecord::Status::NotNatural;
    records.back().fail_twists = {0, 2};

    const std::string csv = sweep_to_csv(records);
    CHECK(sweep_from_csv(csv) == records);
    const std::string json_text = sweep_to_json(records);
    CHECK(sweep_from_json(json_text) == records);

    CHECK(csv.substr(0, csv.find('\n')) ==
          "n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols");
}

TEST_CASE("the rational backend reproduces the prime-field table on small specs") {
    const auto spec = make_spec(2, "0^4", "1^2", 19, 1);
    TableOptions fp_opts, q_opts;
    q_opts.backend = RankBackend::Rational;
    const auto fp_table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(-3, 2), fp_opts);
    const auto q_table =
        cohomology_table(PresentationKind::Kernel, spec, TwistWindow(-3, 2), q_opts);
    for (int a = -3; a <= 2; ++a)
        for (int i = 0; i <= 2; ++i) CHECK(fp_table.value(a, i) == q_table.value(a, i));
}

TEST_CASE("scaled families stay natural from the first scale on") {
    // (r, t) = (3, 1) on P^3 has scale bound 1, so every multiple is natural
    for (long m = 1; m <= 4; ++m) {
        NaturalOptions opts;
        opts.trials = 1;
        opts.seed = Seed{60 + static_cast<std::uint64_t>(m)};
        CHECK(natural_check(3, 3 * m, m, opts).natural);
    }
}

TEST_CASE("max section dimension prediction matches built shapes") {
    const auto spec = make_spec(3, "0^7", "1^4");
    const GeneralMap map(spec, 0);
    const TwistWindow w(-4, 3);
    long expect = 0;
    for (int a = w.lo; a <= w.hi; ++a)
        expect = std::max({expect, map.section_rows(a), map.section_cols(a)});
    CHECK(max_section_dim_steiner(3, 3, 4, w) == expect);
}

TEST_SUITE_END();
