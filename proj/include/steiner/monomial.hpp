#pragma once

// Monomial bases of H^0(O_{P^n}(d)).
//
// Basis order is graded lexicographic with x_0 > x_1 > ... > x_n: index 0 is
// x_0^d, the last index is x_n^d. The order is fixed globally so that every
// matrix in the library is reproducible from (seed, prime) alone.

#include <cstdint>
#include <vector>

#include "steiner/arith.hpp"

namespace steiner {

class MonomialBasis {
public:
    // Degree-d monomials in the n+1 coordinates of P^n. Requires d >= 0.
    MonomialBasis(int n, int d);

    int n() const { return n_; }
    int degree() const { return d_; }
    long size() const { return size_; }

    // Exponent vector (length n+1, entries summing to d) of the given index.
    std::vector<int> exponents(long index) const;

    // Inverse of exponents(); exps must have length n+1, nonnegative entries
    // summing to d.
    long index_of(const std::vector<int>& exps) const;

private:
    int n_;
    int d_;
    long size_;
};

} // namespace steiner
