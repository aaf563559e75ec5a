#include "steiner/rank.hpp"

#include <algorithm>
#include <utility>

#include "steiner/kernels.hpp"

namespace steiner {

int rank_ffp(FpMatrix m, std::uint32_t p) {
    require_prime(p);
    const auto& ops = kernels::active();
    const int rows = m.rows, cols = m.cols;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m.at(r, col) % p != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap_ranges(m.row(pivot), m.row(pivot) + cols, m.row(rank));
        }
        // Normalize the pivot row tail, then cancel below. Columns left of the
        // pivot are already zero in rows >= rank.
        const std::uint32_t inv = inv_mod(m.at(rank, col) % p, p);
        m.at(rank, col) = 1;
        if (col + 1 < cols) ops.scale(m.row(rank) + col + 1, inv, cols - col - 1, p);
        for (int r = rank + 1; r < rows; ++r) {
            const std::uint32_t f = m.at(r, col) % p;
            if (f == 0) continue;
            m.at(r, col) = 0;
            if (col + 1 < cols)
                ops.axpy(m.row(r) + col + 1, m.row(rank) + col + 1, p - f, cols - col - 1, p);
        }
        ++rank;
    }
    return rank;
}

int rank_rational(std::vector<std::vector<Int>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    // Bareiss fraction-free elimination: divisions below are exact, entries
    // stay determinant-sized.
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);
        const Int piv = m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Int v = m[r][c] * piv - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = std::move(v);
            }
            m[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> lift_to_integers(const FpMatrix& m) {
    std::vector<std::vector<Int>> out(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out[r][c] = static_cast<long>(m.at(r, c));
    return out;
}

} // namespace steiner
