#include "steiner/arith.hpp"

#include <limits>

namespace steiner {

Int binom(long a, long k) {
    if (a < 0 || k < 0) throw std::invalid_argument("binom: negative argument");
    if (k > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
}

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("value does not fit in a machine word: " + v.get_str());
    long x = v.get_si();
    return static_cast<std::int64_t>(x);
}

} // namespace steiner
