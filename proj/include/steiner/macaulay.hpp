#pragma once

// Macaulay representations and the growth operator bounding Hilbert-function
// jumps: write c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta) with
// k_d > k_{d-1} > ... > k_delta >= delta >= 1 (the unique such expansion,
// found greedily from the top); then
//   c^<d> = C(k_d+1, d+1) + C(k_{d-1}+1, d) + ... + C(k_delta+1, delta+1)
// bounds the codimension in the next degree.

#include <vector>

#include "steiner/arith.hpp"

namespace steiner {

struct MacaulayTerm {
    Int k;
    long j;
    bool operator==(const MacaulayTerm&) const = default;
};

struct MacaulayRep {
    Int c;
    long d = 1;
    std::vector<MacaulayTerm> terms; // j descending from d to delta >= 1

    Int reconstruct() const; // sum of C(k_j, j); equals c
};

MacaulayRep macaulay_rep(const Int& c, long d); // c >= 1, d >= 1

Int growth(const Int& c, long d);

// Iterated growth ((c^<i>)^<i+1>)...^<i+steps-1>; steps = 0 returns c.
Int growth_chain(const Int& c, long i, long steps);

// The strict inequality c^<d> < (k+1)/(d+1) * c, for k >= d >= 1 and
// 1 <= c < C(k, d). Throws outside that range.
bool strict_growth_holds(const Int& c, long d, long k);

} // namespace steiner
