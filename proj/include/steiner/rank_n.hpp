#pragma once

// Closed-form cohomology of rank-n kernel bundles.
//
// For V = ker(f: V1 -> V2) of rank exactly n with V1, V2 pure powers of line
// bundles, V has a length-n resolution by the bundles
//   U_i = Sym^i(V2^*) (x) Lambda^{n-i-1}(V1^*) (deg V1 - deg V2),
// each again a pure power of a line bundle. Chasing the resolution gives h^0
// and h^1 as alternating sums of the h^j(U_i), valid under explicit vanishing
// hypotheses which are checked and reported, never silently assumed.

#include <optional>
#include <string>
#include <vector>

#include "steiner/bott.hpp"
#include "steiner/rational.hpp"

namespace steiner {

struct ResolutionTerm {
    int index = 0;        // i in [0, n-1]
    LineBundleSum bundle; // U_i, a pure power of a line bundle
};

// Requires both sums pure (a single degree each) and rank(V1) - rank(V2) = n.
std::vector<ResolutionTerm> resolution_terms(int n, const LineBundleSum& v1,
                                             const LineBundleSum& v2);

struct ResolutionCohomology {
    std::vector<ResolutionTerm> terms;
    bool h0_applicable = false; // H^{i+1}(U_i) = 0 for 0 <= i <= n-2
    bool h1_applicable = false; // additionally H^j(V1) = H^j(V2) = 0 for j >= 1
    std::vector<std::string> failed_hypotheses;
    std::optional<Int> h0;
    std::optional<Int> h1;
};

ResolutionCohomology h0_h1_formula(int n, const LineBundleSum& v1, const LineBundleSum& v2);

// The rank-n kernel of O^{t+n} -> O(d)^t on P^n has both h^0 and h^1 nonzero
// at twist a exactly when a - dt >= 0 and a - dt - (n-1)d <= -n-1.
bool two_group_detector(int n, int d, long t, int a);

// Vanishing thresholds for V = ker(O^{t+r} -> O(1)^t) with k = floor(r/n):
// H^0(V(d)) = 0 for d <= t/(k+1) - 1 and H^1(V(d)) = 0 for d >= t/k - 1.
// For n <= r < 2n the homological-dimension rule H^1(V(d)) = 0 for d >= t-1
// applies as well (and coincides, since k = 1).
struct VanishingRanges {
    Rational h0_vanish_max;
    Rational h1_vanish_min;
    long k = 0;
    bool homological_rule_applies = false;
    std::string h0_rule;
    std::string h1_rule;
};

VanishingRanges vanishing_ranges(int n, long r, long t);

// Multiplicity of O(-t-i) in the resolution of ker(O^{r+t} -> O(1)^t):
// C(t+i-1, i) * C(r+t, r-i-1).
Int resolution_multiplicity(long r, long t, int i);

} // namespace steiner
