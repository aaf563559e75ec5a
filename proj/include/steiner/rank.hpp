#pragma once

// Exact rank computation.
//
// rank_ffp: in-place Gaussian elimination over F_p (row operations through the
// kernels module). For a matrix specialized from characteristic 0, this rank is
// a certified lower bound on the generic characteristic-0 rank: reduction mod p
// can only lose rank, never gain it.
//
// rank_rational: Bareiss fraction-free elimination over the integers; exact
// rank over Q.

#include <vector>

#include "steiner/arith.hpp"
#include "steiner/fp.hpp"

namespace steiner {

int rank_ffp(FpMatrix m, std::uint32_t p);

inline int nullity_ffp(const FpMatrix& m, std::uint32_t p) { return m.cols - rank_ffp(m, p); }

int rank_rational(std::vector<std::vector<Int>> m);

// Entry-wise lift of an F_p matrix to integer representatives in [0, p).
std::vector<std::vector<Int>> lift_to_integers(const FpMatrix& m);

} // namespace steiner
