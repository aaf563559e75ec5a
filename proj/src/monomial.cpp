#include "steiner/monomial.hpp"

#include <stdexcept>

namespace steiner {

namespace {

// Number of degree-m monomials in k variables, as a checked long.
long count_monomials(int m, int k) {
    return to_i64(binom(static_cast<long>(m) + k - 1, k - 1));
}

} // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw std::invalid_argument("MonomialBasis: need n >= 1");
    if (d < 0) throw std::invalid_argument("MonomialBasis: need degree >= 0");
    size_ = to_i64(binom(static_cast<long>(d) + n, n));
}

std::vector<int> MonomialBasis::exponents(long index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("MonomialBasis::exponents");
    std::vector<int> exps(n_ + 1, 0);
    int rem = d_;
    for (int i = 0; i < n_; ++i) {
        // Indices with a larger exponent here come first.
        for (int v = rem; v >= 0; --v) {
            long block = count_monomials(rem - v, n_ - i);
            if (index < block) {
                exps[i] = v;
                rem -= v;
                break;
            }
            index -= block;
        }
    }
    exps[n_] = rem;
    return exps;
}

long MonomialBasis::index_of(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != n_ + 1)
        throw std::invalid_argument("MonomialBasis::index_of: wrong arity");
    long index = 0;
    int rem = d_;
    for (int i = 0; i < n_; ++i) {
        const int e = exps[i];
        if (e < 0 || e > rem) throw std::invalid_argument("MonomialBasis::index_of: bad exponents");
        for (int v = rem; v > e; --v) index += count_monomials(rem - v, n_ - i);
        rem -= e;
    }
    if (exps[n_] != rem) throw std::invalid_argument("MonomialBasis::index_of: degree mismatch");
    return index;
}

} // namespace steiner
