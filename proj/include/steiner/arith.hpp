#pragma once

// Exact integer foundations. All counting formulas in the library go through
// Int (arbitrary precision, GMP-backed) so no intermediate value ever wraps.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace steiner {

using Int = mpz_class;

// C(a, k) with the convention C(a, k) = 0 for k > a. Arguments must be
// nonnegative.
Int binom(long a, long k);

// Checked narrowing for interfaces that store table entries as machine words.
std::int64_t to_i64(const Int& v);

inline std::string to_string(const Int& v) { return v.get_str(); }

} // namespace steiner
