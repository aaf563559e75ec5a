#pragma once

// Invariant checkers shared by the unit suites and the acceptance runner.
// Each returns true and fills `why` on failure so callers can report context.

#include <string>
#include <vector>

#include "steiner/cohomology.hpp"

namespace steiner::testutil {

// sum_i (-1)^i h^i(V(a)) equals chi computed independently from the
// presentation, at every twist.
inline bool euler_conserved(const CohomologyTable& t, std::string* why = nullptr) {
    for (int a = t.window().lo; a <= t.window().hi; ++a) {
        Int alt = 0;
        for (int i = 0; i <= t.n(); ++i) {
            const Int v = t.value(a, i);
            alt += (i % 2 == 0) ? v : -v;
        }
        const Int cs = chi_sum(t.spec().source, a);
        const Int ct = chi_sum(t.spec().target, a);
        const Int chi = t.kind() == PresentationKind::Kernel ? cs - ct : ct - cs;
        if (alt != chi) {
            if (why)
                *why = "Euler mismatch at a=" + std::to_string(a) + ": " + alt.get_str() +
                       " != " + chi.get_str();
            return false;
        }
    }
    return true;
}

inline bool h0_monotone(const CohomologyTable& t, std::string* why = nullptr) {
    for (int a = t.window().lo; a < t.window().hi; ++a) {
        if (t.value(a, 0) > t.value(a + 1, 0)) {
            if (why) *why = "h^0 drops from a=" + std::to_string(a);
            return false;
        }
    }
    return true;
}

// One-sided regularity: once h^1 vanishes at some a >= 0 it stays zero
// (sound for kernel presentations with nonnegative source degrees).
inline bool h1_one_sided(const CohomologyTable& t, std::string* why = nullptr) {
    bool seen_zero = false;
    for (int a = std::max(0, t.window().lo); a <= t.window().hi; ++a) {
        const bool zero = t.value(a, 1) == 0;
        if (seen_zero && !zero) {
            if (why) *why = "h^1 reappears at a=" + std::to_string(a);
            return false;
        }
        seen_zero = seen_zero || zero;
    }
    return true;
}

// h^i(V(a)) = h^{n-i}(V^*(-a-n-1)) with the dual presentation sharing the
// exact same drawn map.
inline bool serre_round_trip(const std::vector<GeneralMap>& trials, const CohomologyTable& t,
                             long budget, std::string* why = nullptr) {
    const GeneralMapSpec& spec = trials.front().spec();
    GeneralMapSpec dual_spec;
    dual_spec.n = spec.n;
    dual_spec.source = spec.target.dual();
    dual_spec.target = spec.source.dual();
    dual_spec.seed = spec.seed;
    dual_spec.prime = spec.prime;
    dual_spec.trials = spec.trials;
    std::vector<GeneralMap> dual_trials;
    for (const auto& tr : trials)
        dual_trials.push_back(
            GeneralMap::from_block_map(dual_spec, tr.trial(), tr.dual_map()));

    const int n = spec.n;
    const TwistWindow w = t.window();
    const TwistWindow dual_w(-w.hi - n - 1, -w.lo - n - 1);
    TableOptions opts;
    opts.budget = budget;
    const CohomologyTable dual_table =
        cohomology_table(PresentationKind::Cokernel, dual_trials, dual_w, opts);
    for (int a = w.lo; a <= w.hi; ++a) {
        for (int i = 0; i <= n; ++i) {
            if (t.value(a, i) != dual_table.value(-a - n - 1, n - i)) {
                if (why)
                    *why = "Serre mismatch at a=" + std::to_string(a) + ", i=" + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

} // namespace steiner::testutil
