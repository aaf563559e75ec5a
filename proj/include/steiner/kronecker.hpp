#pragma once

// Strong Kronecker stability tooling: a brute-force subspace oracle over small
// prime fields, the quantitative maximal-rank bounds, the scale bound for
// natural cohomology, and mutation bookkeeping at the (rank, h^0) level.
//
// A pair E < F requires: h^0(F) != 0, the evaluation
// H^0(E) (x) Hom(E, F) -> H^0(F) surjective, and every proper nonzero
// subspace V of H^0(E) to satisfy dim(image of V)/h^0(F) > dim(V)/h^0(E)
// strictly.

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/arith.hpp"
#include "steiner/bott.hpp"
#include "steiner/rational.hpp"

namespace steiner {

// Exhaustive check of O(i) < O(i+j) on P^n over the F_p-rational subspaces.
// This is a falsifier and sanity check, not a proof over closed fields: only
// subspaces defined over F_p are enumerated (the caveat field says so).
struct SubspaceReport {
    bool applicable = true;           // h^0(O(i+j)) != 0
    bool evaluation_surjective = false;
    bool stable = false;              // surjective and every margin > 0
    Rational min_margin;              // min over proper nonzero subspaces
    std::string worst_subspace;       // basis at the minimal margin
    long subspaces_checked = 0;
    std::uint32_t field = 2;
    std::string caveat;
};

SubspaceReport brute_force_sks(int n, int i, int j, std::uint32_t p, long budget = 1000000);

// Number of k-dimensional subspaces of F_p^e (Gaussian binomial).
Int gaussian_binomial(long e, long k, std::uint32_t p);

// The maximal-rank bound for sums V1 = (+) E_i^{s_i}, V2 = (+) F_j^{t_j} of
// strongly Kronecker stable pairs:
//   max{h^0(V1), h^0(V2)} >= (1/4) (max_i h^0(E_i)) (max_j h^0(F_j)) sum_i h^0(E_i)^2.
// Exact rational comparison; true when the hypothesis holds.
bool thm_bound_holds(const std::vector<Int>& e_h0, const std::vector<Int>& f_h0,
                     const std::vector<long>& s, const std::vector<long>& t);

// Same bound with the h^0 data of two line-bundle sums.
bool thm_bound_holds_sums(const LineBundleSum& v1, const LineBundleSum& v2);

// Both sides of the inequality, for reporting.
struct BoundSides {
    Int lhs; // max{h^0(V1), h^0(V2)}
    Rational rhs;
    bool holds = false;
};
BoundSides thm_bound_sides(const std::vector<Int>& e_h0, const std::vector<Int>& f_h0,
                           const std::vector<long>& s, const std::vector<long>& t);

// Minimal m such that the rank-mr kernel of a general O^{m(t+r)} -> O(1)^{mt}
// is guaranteed natural: the ceiling of
//   max{ C(alpha+n-1,n)^2 C(alpha+n,n) / (4(t+r)),  C(beta+n-1,n)^3 / (4t) }.
Int steiner_scale_bound(int n, long r, long t);

// Mutation bookkeeping. Sequences
//   0 -> L_E F -> E (x) Hom(E,F) -> F -> 0
//   0 -> E -> F (x) Hom(E,F)^* -> R_F E -> 0
// transform (rank, h^0) linearly; h^0 arithmetic assumes exactness on global
// sections (surjective evaluation for L, H^1(E) = 0 for R), which is recorded
// in the result.
struct SheafInvariants {
    long rank = 1;
    Int h0 = 0;
    std::string label;
};

struct PairData {
    SheafInvariants left;  // E
    SheafInvariants right; // F
    long hom_dim = 0;      // dim Hom(E, F)
};

struct MutationResult {
    SheafInvariants result;
    std::string assumption;
};

MutationResult mutate_left(const PairData& pair);  // L_E F
MutationResult mutate_right(const PairData& pair); // R_F E

enum class MutationSide { Left, Right };

// Iterated mutations L_i = L_{L_{i-1}} L_{i-2} (resp. R_i = R_{R_{i-1}} R_{i-2});
// each step's hom dimension is supplied by the caller. Returns
// [E, F, first mutation, ...].
std::vector<SheafInvariants> mutation_chain(const PairData& pair, MutationSide side,
                                            const std::vector<long>& hom_dims);

} // namespace steiner
