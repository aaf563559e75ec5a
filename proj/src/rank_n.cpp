#include "steiner/rank_n.hpp"

#include <stdexcept>

namespace steiner {

std::vector<ResolutionTerm> resolution_terms(int n, const LineBundleSum& v1,
                                             const LineBundleSum& v2) {
    if (n < 1) throw std::invalid_argument("resolution_terms: need n >= 1");
    if (v1.n() != n || v2.n() != n)
        throw std::invalid_argument("resolution_terms: ambient dimension mismatch");
    if (v1.summands().size() != 1 || v2.summands().size() != 1)
        throw std::invalid_argument(
            "resolution_terms: the formula path needs pure (single-degree) sums");
    const long s = v1.rank();
    const long t = v2.rank();
    if (s - t != n)
        throw std::invalid_argument("resolution_terms: rank gap must equal n, got " +
                                    std::to_string(s - t));
    const long a1 = v1.summands()[0].degree;
    const long a2 = v2.summands()[0].degree;
    const long d = a1 * s - a2 * t; // deg(V1) - deg(V2)

    std::vector<ResolutionTerm> out;
    for (int i = 0; i <= n - 1; ++i) {
        // Sym^i(O(-a2)^t) = O(-i a2)^C(t+i-1,i),
        // Lambda^{n-i-1}(O(-a1)^s) = O(-(n-i-1) a1)^C(s, n-i-1).
        const long deg = d - static_cast<long>(i) * a2 - static_cast<long>(n - i - 1) * a1;
        if (deg < INT32_MIN || deg > INT32_MAX)
            throw std::overflow_error("resolution_terms: degree out of range");
        const Int mult = binom(t + i - 1, i) * binom(s, n - i - 1);
        out.push_back({i, LineBundleSum(n, {{static_cast<int>(deg), to_i64(mult)}})});
    }
    return out;
}

ResolutionCohomology h0_h1_formula(int n, const LineBundleSum& v1, const LineBundleSum& v2) {
    ResolutionCohomology out;
    out.terms = resolution_terms(n, v1, v2);

    out.h0_applicable = true;
    for (int i = 0; i <= n - 2; ++i) {
        if (out.terms[i].bundle.h(i + 1) != 0) {
            out.h0_applicable = false;
            out.failed_hypotheses.push_back("H^" + std::to_string(i + 1) + "(U_" +
                                            std::to_string(i) + ") != 0");
        }
    }
    out.h1_applicable = out.h0_applicable;
    for (int j = 1; j <= n; ++j) {
        if (v1.h(j) != 0) {
            out.h1_applicable = false;
            out.failed_hypotheses.push_back("H^" + std::to_string(j) + "(V1) != 0");
        }
        if (v2.h(j) != 0) {
            out.h1_applicable = false;
            out.failed_hypotheses.push_back("H^" + std::to_string(j) + "(V2) != 0");
        }
    }

    if (out.h0_applicable) {
        Int h0 = 0;
        for (int i = 0; i <= n - 1; ++i) {
            for (int j = 0; j <= i; ++j) {
                const Int term = out.terms[i].bundle.h(j);
                h0 += ((i + j) % 2 == 0) ? term : -term;
            }
        }
        out.h0 = h0;
    }
    if (out.h1_applicable) {
        Int h1 = 0;
        for (int i = 0; i <= n - 1; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Int term = out.terms[i].bundle.h(j);
                h1 += ((i + j + 1) % 2 == 0) ? term : -term;
            }
        }
        out.h1 = h1;
    }
    return out;
}

bool two_group_detector(int n, int d, long t, int a) {
    if (n < 1) throw std::invalid_argument("two_group_detector: need n >= 1");
    if (d < 1) throw std::invalid_argument("two_group_detector: need d >= 1");
    if (t < 1) throw std::invalid_argument("two_group_detector: need t >= 1");
    const long lead = static_cast<long>(a) - d * t;
    return lead >= 0 && lead - static_cast<long>(n - 1) * d <= -(static_cast<long>(n) + 1);
}

VanishingRanges vanishing_ranges(int n, long r, long t) {
    if (n < 1) throw std::invalid_argument("vanishing_ranges: need n >= 1");
    if (r < n) throw std::invalid_argument("vanishing_ranges: need r >= n");
    if (t < 1) throw std::invalid_argument("vanishing_ranges: need t >= 1");
    VanishingRanges out;
    out.k = r / n;
    out.h0_vanish_max = Rational(t, out.k + 1) - Rational(1);
    out.h1_vanish_min = Rational(t, out.k) - Rational(1);
    out.h0_rule = "H^0(V(d)) = 0 for d <= t/(k+1) - 1, k = floor(r/n) = " + std::to_string(out.k);
    out.h1_rule = "H^1(V(d)) = 0 for d >= t/k - 1, k = floor(r/n) = " + std::to_string(out.k);
    if (r < 2 * static_cast<long>(n)) {
        out.homological_rule_applies = true;
        out.h1_rule += "; homological-dimension rule for n <= r < 2n: H^1(V(d)) = 0 for d >= t-1";
    }
    return out;
}

Int resolution_multiplicity(long r, long t, int i) {
    return binom(t + i - 1, i) * binom(r + t, r - i - 1);
}

} // namespace steiner
