#pragma once

// Slope stability of Steiner characters, decided in pure integer and rational
// arithmetic. The irrational thresholds
//   psi_n = (n-1 + sqrt(n^2+2n-3)) / 2,   phi_n = 1/psi_n
// are never evaluated: every comparison against them is squared out with
// explicit sign handling, so verdicts are exact at boundary characters.

#include <string>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// The character of 0 -> O(-1)^t -> O^{t+r} -> V -> 0 on P^n: rank r, slope t/r.
struct SteinerCharacter {
    int n = 2;
    long r = 1;
    long t = 1;
};

enum class StabilityOutcome {
    SlopeStable,
    SlopeSemistableOnly,
    SemiExceptionalRegime,
    RankTooSmall,
    Unclassified,
};

const char* outcome_name(StabilityOutcome o);

struct StabilityVerdict {
    StabilityOutcome outcome = StabilityOutcome::Unclassified;
    std::string witness; // the exact integer inequality that decided it
};

// Is r/t < psi_n? Equivalent integer test: 2r - (n-1)t < 0, or its square is
// less than (n^2+2n-3) t^2. Requires n >= 2.
bool psi_test(int n, long r, long t);

// SlopeStable when r >= n and r/t < psi_n; SemiExceptionalRegime when the
// ratio is at least psi_n (classification deferred to the semi-exceptional
// literature and reported as text); RankTooSmall when r < n.
StabilityVerdict classify(const SteinerCharacter& ch);

// [rho^0(0), rho(0), ..., rho^steps(0)] for rho_n(x) = (1+x)/((n-1)(1+x)+1),
// as exact rationals; strictly increasing toward phi_n.
std::vector<Rational> rho_orbit(int n, int steps);

// mu in Phi_n = {alpha > phi_n} union {rho_n^i(0)}. Requires mu >= 0.
bool phi_membership(int n, const Rational& mu);

// mu > phi_n via the squared comparison (2(n-1)mu + n-1)^2 > n^2+2n-3.
bool above_phi(int n, const Rational& mu);

// Slope and discriminant of the restriction to a smooth quadric surface:
// mu = t/r, Delta = mu^2 + mu; the existence criterion there applies when
// mu > 1/(1+sqrt(3)), decided by (r-t) < 0 or (r-t)^2 < 3t^2.
struct QuadricCharacter {
    Rational mu;
    Rational Delta;
    bool abe_applicable = false;
};
QuadricCharacter quadric_character(long r, long t);

// Kernel of a general matrix of degree-d forms: slope semistability is
// guaranteed in the same (n/t <= r/t < psi_n) window by pullback; d = 1
// reduces to classify().
StabilityVerdict semistable_degree_d(int n, long r, long t, long d);

} // namespace steiner
