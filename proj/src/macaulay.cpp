#include "steiner/macaulay.hpp"

#include <stdexcept>

namespace steiner {

namespace {

Int binom_big(const Int& a, long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Largest k with C(k, j) <= rem, for rem >= 1 (so k >= j). Gallop then bisect.
Int largest_binomial_base(const Int& rem, long j) {
    if (j == 1) return rem; // C(k, 1) = k
    Int lo = j;
    Int hi = j + 1;
    while (binom_big(hi, j) <= rem) {
        lo = hi;
        hi *= 2;
    }
    // invariant: C(lo, j) <= rem < C(hi, j)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binom_big(mid, j) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

Int MacaulayRep::reconstruct() const {
    Int sum = 0;
    for (const auto& t : terms) sum += binom_big(t.k, t.j);
    return sum;
}

MacaulayRep macaulay_rep(const Int& c, long d) {
    if (c < 1) throw std::invalid_argument("macaulay_rep: need c >= 1");
    if (d < 1) throw std::invalid_argument("macaulay_rep: need d >= 1");
    MacaulayRep rep;
    rep.c = c;
    rep.d = d;
    Int rem = c;
    for (long j = d; j >= 1 && rem > 0; --j) {
        Int k = largest_binomial_base(rem, j);
        rem -= binom_big(k, j);
        rep.terms.push_back({std::move(k), j});
    }
    if (rem != 0) throw std::logic_error("macaulay_rep: greedy remainder nonzero");
    return rep;
}

Int growth(const Int& c, long d) {
    const MacaulayRep rep = macaulay_rep(c, d);
    Int out = 0;
    for (const auto& t : rep.terms) out += binom_big(t.k + 1, t.j + 1);
    return out;
}

Int growth_chain(const Int& c, long i, long steps) {
    if (i < 1) throw std::invalid_argument("growth_chain: need start degree >= 1");
    if (steps < 0) throw std::invalid_argument("growth_chain: need steps >= 0");
    Int v = c;
    for (long s = 0; s < steps; ++s) v = growth(v, i + s);
    return v;
}

bool strict_growth_holds(const Int& c, long d, long k) {
    if (d < 1 || k < d) throw std::invalid_argument("strict_growth_holds: need k >= d >= 1");
    if (c < 1 || c >= binom(k, d))
        throw std::invalid_argument("strict_growth_holds: need 1 <= c < C(k, d)");
    return growth(c, d) * (d + 1) < c * (k + 1);
}

} // namespace steiner
