#pragma once

// Ampleness of Steiner bundles: the codimension criterion and a random-line
// splitting-type sampler.
//
// A Steiner bundle V = coker(O(-1)^t -> O^{r+t}) is ample iff its restriction
// to every line is; the sampler restricts one reproducible presentation to
// random lines, reads off h^0(V|_L(m)) through section-matrix ranks on P^1,
// and recovers each splitting type from second differences of that profile.
// Sampling can falsify ampleness (one part <= 0 on one line is decisive) but
// never certifies it: only "no witness among the sampled lines".

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/fp.hpp"
#include "steiner/rng.hpp"

namespace steiner {

enum class AmpleOutcome { GeneralAmple, Inconclusive };

struct AmpleVerdict {
    AmpleOutcome outcome = AmpleOutcome::Inconclusive;
    long excess = 0; // t - r - (2n - 3); positive means GeneralAmple
    std::string note;
};

// General V from 0 -> O(-d)^t -> O^{r+t} -> V -> 0 is ample when
// t - r > 2n - 3, for every d >= 1 (pullback). Otherwise inconclusive.
AmpleVerdict ample_criterion(int n, long r, long t, long d);

// Splitting type of a restriction to a line: degrees a_1 >= ... >= a_r with
// sum equal to the first Chern degree t.
struct SplittingType {
    std::vector<long> parts;
    long min_part() const;
    long sum() const;
    bool operator==(const SplittingType&) const = default;
};

struct LineSampleResult {
    std::vector<SplittingType> types; // one per sampled line
    long min_part_seen = 0;
    std::string note;
};

// Restrict the seeded general presentation to `lines` random lines
// (coordinate substitutions x_i -> lambda_i s + mu_i u over F_p; degenerate
// substitutions are redrawn).
LineSampleResult line_splitting_sample(int n, long r, long t, Seed seed, int lines,
                                       std::uint32_t p);

} // namespace steiner
