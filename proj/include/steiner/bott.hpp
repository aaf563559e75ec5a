#pragma once

// Closed-form cohomology of line bundles on P^n and Euler characteristics of
// formal direct sums.

#include <string>
#include <vector>

#include "steiner/arith.hpp"

namespace steiner {

// One summand O(degree)^multiplicity.
struct Summand {
    int degree = 0;
    long multiplicity = 1;
    bool operator==(const Summand&) const = default;
};

// A formal direct sum of line bundles on P^n, kept sorted by degree ascending
// with equal degrees merged.
class LineBundleSum {
public:
    LineBundleSum() = default;
    LineBundleSum(int n, std::vector<Summand> summands);

    int n() const { return n_; }
    const std::vector<Summand>& summands() const { return summands_; }
    long rank() const;
    Int degree() const; // sum of degree * multiplicity (first Chern degree)
    int min_degree() const;
    int max_degree() const;

    LineBundleSum twisted(int a) const;
    LineBundleSum dual() const;

    Int h0() const;          // at twist 0
    Int h(int i) const;      // h^i of the sum
    Int chi() const;

    bool operator==(const LineBundleSum&) const = default;

    // Text syntax: comma list of d^s, e.g. "2^4" or "0^7,1^2"; "-1^3" for
    // negative degrees; a bare "d" means multiplicity 1.
    static LineBundleSum parse(int n, const std::string& text);
    std::string str() const;

private:
    int n_ = 1;
    std::vector<Summand> summands_;
};

struct TwistWindow {
    int lo = 0;
    int hi = 0;
    TwistWindow() = default;
    TwistWindow(int l, int h);
    int size() const { return hi - lo + 1; }
};

// h^i(O_{P^n}(d)): C(d+n, n) at i = 0 for d >= 0, C(-d-1, n) at i = n for
// d <= -n-1, zero everywhere else. Throws for i outside [0, n].
Int h_line(int n, int d, int i);

// chi(O_{P^n}(d)) as an exact integer (the binomial polynomial at d).
Int chi_line(int n, int d);

// chi(V(a)) for a formal sum V.
Int chi_sum(const LineBundleSum& v, int a);

// alpha = ceil(t*n/r), beta = floor(t*n/r); equal exactly when r | t*n.
struct AlphaBeta {
    long alpha = 0;
    long beta = 0;
};
AlphaBeta alpha_beta(int n, long r, long t);

} // namespace steiner
