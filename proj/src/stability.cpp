#include "steiner/stability.hpp"

#include <stdexcept>

namespace steiner {

namespace {

void check_character(int n, long r, long t) {
    if (n < 2) throw std::invalid_argument("stability: need n >= 2");
    if (r < 1 || t < 1) throw std::invalid_argument("stability: need r, t >= 1");
}

Int discriminant(int n) { return Int(n) * n + 2 * Int(n) - 3; }

} // namespace

const char* outcome_name(StabilityOutcome o) {
    switch (o) {
        case StabilityOutcome::SlopeStable: return "SlopeStable";
        case StabilityOutcome::SlopeSemistableOnly: return "SlopeSemistableOnly";
        case StabilityOutcome::SemiExceptionalRegime: return "SemiExceptionalRegime";
        case StabilityOutcome::RankTooSmall: return "RankTooSmall";
        case StabilityOutcome::Unclassified: return "Unclassified";
    }
    return "?";
}

bool psi_test(int n, long r, long t) {
    check_character(n, r, t);
    const Int lead = Int(2) * r - Int(n - 1) * t;
    if (lead < 0) return true;
    return lead * lead < discriminant(n) * t * t;
}

StabilityVerdict classify(const SteinerCharacter& ch) {
    check_character(ch.n, ch.r, ch.t);
    StabilityVerdict v;
    const Int lead = Int(2) * ch.r - Int(ch.n - 1) * ch.t;
    const Int rhs = discriminant(ch.n) * Int(ch.t) * ch.t;
    if (ch.r < ch.n) {
        v.outcome = StabilityOutcome::RankTooSmall;
        v.witness = "r = " + std::to_string(ch.r) + " < n = " + std::to_string(ch.n) +
                    ": the presentation has no locally free kernel complement";
        return v;
    }
    if (psi_test(ch.n, ch.r, ch.t)) {
        v.outcome = StabilityOutcome::SlopeStable;
        v.witness = lead < 0 ? "2r - (n-1)t = " + lead.get_str() + " < 0"
                             : "(2r - (n-1)t)^2 = " + Int(lead * lead).get_str() +
                                   " < (n^2+2n-3)t^2 = " + rhs.get_str();
        return v;
    }
    v.outcome = StabilityOutcome::SemiExceptionalRegime;
    v.witness = "(2r - (n-1)t)^2 = " + Int(lead * lead).get_str() +
                " >= (n^2+2n-3)t^2 = " + rhs.get_str() +
                "; semi-exceptional regime: stable iff rank and degree are coprime, per the "
                "classification of semi-exceptional Steiner bundles (informational, not "
                "computed here)";
    return v;
}

std::vector<Rational> rho_orbit(int n, int steps) {
    if (n < 2) throw std::invalid_argument("rho_orbit: need n >= 2");
    if (steps < 0) throw std::invalid_argument("rho_orbit: need steps >= 0");
    std::vector<Rational> orbit{Rational(0)};
    Rational x(0);
    for (int i = 0; i < steps; ++i) {
        const Rational one_plus = x + Rational(1);
        x = one_plus / (one_plus * Rational(n - 1) + Rational(1));
        orbit.push_back(x);
    }
    return orbit;
}

bool above_phi(int n, const Rational& mu) {
    if (n < 2) throw std::invalid_argument("above_phi: need n >= 2");
    if (mu < Rational(0)) throw std::invalid_argument("above_phi: need mu >= 0");
    // mu > phi_n = (-(n-1) + sqrt(n^2+2n-3)) / (2(n-1))
    //   <=>  2(n-1)mu + (n-1) > sqrt(n^2+2n-3); the left side is positive, so
    // squaring is faithful.
    const Int num = mu.numerator(), den = mu.denominator();
    const Int lhs = Int(2) * (n - 1) * num + Int(n - 1) * den;
    return lhs * lhs > discriminant(n) * den * den;
}

bool phi_membership(int n, const Rational& mu) {
    if (mu < Rational(0)) throw std::invalid_argument("phi_membership: need mu >= 0");
    if (above_phi(n, mu)) return true;
    // Below phi_n the only members are the orbit points; the orbit increases
    // strictly toward phi_n, so scan until it passes mu.
    Rational x(0);
    for (int i = 0; i < 100000; ++i) {
        if (x == mu) return true;
        if (x > mu) return false;
        const Rational one_plus = x + Rational(1);
        x = one_plus / (one_plus * Rational(n - 1) + Rational(1));
    }
    throw std::logic_error("phi_membership: orbit failed to pass mu");
}

QuadricCharacter quadric_character(long r, long t) {
    if (r < 1 || t < 1) throw std::invalid_argument("quadric_character: need r, t >= 1");
    QuadricCharacter out;
    out.mu = Rational(t, r);
    out.Delta = out.mu * out.mu + out.mu;
    // mu > 1/(1+sqrt(3))  <=>  r - t < sqrt(3) t.
    const Int lead = Int(r) - t;
    out.abe_applicable = lead < 0 || lead * lead < Int(3) * t * t;
    return out;
}

StabilityVerdict semistable_degree_d(int n, long r, long t, long d) {
    if (d < 1) throw std::invalid_argument("semistable_degree_d: need d >= 1");
    if (d == 1) return classify({n, r, t});
    check_character(n, r, t);
    StabilityVerdict v;
    if (r >= n && psi_test(n, r, t)) {
        v.outcome = StabilityOutcome::SlopeSemistableOnly;
        v.witness = "n <= r and r/t < psi_n: semistability pulls back through a degree-" +
                    std::to_string(d) + " map";
    } else {
        v.outcome = StabilityOutcome::Unclassified;
        v.witness = r < n ? "r < n: outside the guaranteed window"
                          : "r/t >= psi_n: outside the guaranteed window";
    }
    return v;
}

} // namespace steiner
