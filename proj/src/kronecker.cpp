#include "steiner/kronecker.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "steiner/cohomology.hpp"
#include "steiner/monomial.hpp"
#include "steiner/rank.hpp"
#include "steiner/sections.hpp"

namespace steiner {

Int gaussian_binomial(long e, long k, std::uint32_t p) {
    if (k < 0 || k > e) return 0;
    Int num = 1, den = 1;
    Int pw = 1; // p^i
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e));
    for (long i = 0; i < k; ++i) {
        Int pi1 = pw * p; // p^{i+1}
        Int pei;          // p^{e-i}
        mpz_ui_pow_ui(pei.get_mpz_t(), p, static_cast<unsigned long>(e - i));
        num *= pei - 1;
        den *= pi1 - 1;
        pw = pi1;
    }
    return num / den;
}

namespace {

// Enumerate all k-dimensional subspaces of F_p^e by their unique reduced
// row-echelon basis; calls visit(basis rows).
template <typename Visit>
void enumerate_subspaces(long e, long k, std::uint32_t p, Visit&& visit) {
    std::vector<long> pivots(k);
    std::vector<std::vector<std::uint32_t>> rows(
        static_cast<std::size_t>(k), std::vector<std::uint32_t>(static_cast<std::size_t>(e), 0));

    // free positions of the current pivot choice
    std::vector<std::pair<long, long>> free_cells;

    auto run_free = [&]() {
        for (auto& r : rows) std::fill(r.begin(), r.end(), 0);
        for (long i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
        free_cells.clear();
        for (long i = 0; i < k; ++i) {
            for (long c = pivots[i] + 1; c < e; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_cells.push_back({i, c});
            }
        }
        // odometer over free cells
        for (;;) {
            visit(rows);
            long pos = static_cast<long>(free_cells.size()) - 1;
            while (pos >= 0) {
                auto [ri, ci] = free_cells[pos];
                if (++rows[ri][ci] < p) break;
                rows[ri][ci] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    };

    // choose pivot columns 0 <= pivots[0] < ... < pivots[k-1] < e
    auto choose = [&](auto&& self, long idx, long from) -> void {
        if (idx == k) {
            run_free();
            return;
        }
        for (long c = from; c < e; ++c) {
            pivots[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
}

std::string describe_basis(const std::vector<std::vector<std::uint32_t>>& rows,
                           const MonomialBasis& basis) {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += "; ";
        bool first = true;
        for (long c = 0; c < basis.size(); ++c) {
            if (rows[r][c] == 0) continue;
            if (!first) out += " + ";
            first = false;
            if (rows[r][c] != 1) out += std::to_string(rows[r][c]) + "*";
            const auto exps = basis.exponents(c);
            bool any = false;
            for (int v = 0; v < basis.n() + 1; ++v) {
                if (exps[v] == 0) continue;
                if (any) out += "*";
                any = true;
                out += "x" + std::to_string(v);
                if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
            }
            if (!any) out += "1";
        }
        if (first) out += "0";
    }
    return out;
}

// dim of the image of span(rows) (x) H^0(O(j)) in H^0(O(i+j)): the rank of
// the multiplication matrices of the basis forms, stacked side by side.
int image_dim(const std::vector<std::vector<std::uint32_t>>& rows, int n, int i, int j,
              std::uint32_t p) {
    std::vector<FpMatrix> blocks;
    blocks.reserve(rows.size());
    int rows_out = 0, cols_out = 0;
    for (const auto& v : rows) {
        blocks.push_back(mult_matrix(n, i, v, j, p));
        rows_out = blocks.back().rows;
        cols_out += blocks.back().cols;
    }
    FpMatrix stacked(rows_out, cols_out);
    int c0 = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) stacked.at(r, c0 + c) = b.at(r, c);
        c0 += b.cols;
    }
    return rank_ffp(stacked, p);
}

} // namespace

SubspaceReport brute_force_sks(int n, int i, int j, std::uint32_t p, long budget) {
    if (n < 1) throw std::invalid_argument("brute_force_sks: need n >= 1");
    if (i < 0 || j < 1) throw std::invalid_argument("brute_force_sks: need i >= 0 and j >= 1");
    require_prime(p);

    SubspaceReport rep;
    rep.field = p;
    rep.caveat = "only F_" + std::to_string(p) +
                 "-rational subspaces are enumerated; a pass is evidence, a failure is a "
                 "counterexample over F_" + std::to_string(p);

    const MonomialBasis src_basis(n, i);
    const long e = src_basis.size();
    const long f = to_i64(binom(static_cast<long>(i) + j + n, n));
    rep.applicable = f != 0; // h^0(O(i+j)) > 0 always here since i+j > 0

    Int total = 0;
    for (long k = 1; k < e; ++k) total += gaussian_binomial(e, k, p);
    if (total > budget)
        throw BudgetExceeded("brute_force_sks: " + total.get_str() + " subspaces exceed budget " +
                             std::to_string(budget));

    // condition (b): the full evaluation map is onto
    std::vector<std::vector<std::uint32_t>> full(static_cast<std::size_t>(e),
                                                 std::vector<std::uint32_t>(e, 0));
    for (long v = 0; v < e; ++v) full[v][v] = 1;
    rep.evaluation_surjective = image_dim(full, n, i, j, p) == f;

    // condition (c): every proper nonzero F_p-subspace beats the proportional
    // bound strictly. Dimensions are independent partitions, enumerated in
    // parallel and merged in dimension order.
    struct Partition {
        bool any = false;
        bool all_positive = true;
        long checked = 0;
        Rational min_margin;
        std::string worst;
    };
    std::vector<std::future<Partition>> futures;
    for (long k = 1; k < e; ++k) {
        futures.push_back(std::async(std::launch::async, [&, k]() {
            Partition part;
            enumerate_subspaces(e, k, p,
                                [&](const std::vector<std::vector<std::uint32_t>>& rows) {
                                    ++part.checked;
                                    const int img = image_dim(rows, n, i, j, p);
                                    const Rational margin = Rational(img, f) - Rational(k, e);
                                    if (!part.any || margin < part.min_margin) {
                                        part.min_margin = margin;
                                        part.worst = describe_basis(rows, src_basis);
                                        part.any = true;
                                    }
                                    if (!(margin > Rational(0))) part.all_positive = false;
                                });
            return part;
        }));
    }
    bool first = true;
    bool all_positive = true;
    for (auto& fut : futures) {
        const Partition part = fut.get();
        rep.subspaces_checked += part.checked;
        all_positive = all_positive && part.all_positive;
        if (part.any && (first || part.min_margin < rep.min_margin)) {
            rep.min_margin = part.min_margin;
            rep.worst_subspace = part.worst;
            first = false;
        }
    }
    if (first) rep.min_margin = Rational(1); // no proper nonzero subspaces (e = 1)
    rep.stable = rep.applicable && rep.evaluation_surjective && all_positive;
    return rep;
}

BoundSides thm_bound_sides(const std::vector<Int>& e_h0, const std::vector<Int>& f_h0,
                           const std::vector<long>& s, const std::vector<long>& t) {
    if (e_h0.size() != s.size() || f_h0.size() != t.size())
        throw std::invalid_argument("thm_bound_sides: length mismatch");
    if (e_h0.empty() || f_h0.empty())
        throw std::invalid_argument("thm_bound_sides: empty summand list");
    Int h0_v1 = 0, h0_v2 = 0;
    for (std::size_t k = 0; k < e_h0.size(); ++k) h0_v1 += e_h0[k] * s[k];
    for (std::size_t k = 0; k < f_h0.size(); ++k) h0_v2 += f_h0[k] * t[k];
    Int emax = e_h0[0], fmax = f_h0[0];
    for (const auto& v : e_h0) emax = std::max(emax, v);
    for (const auto& v : f_h0) fmax = std::max(fmax, v);
    Int esq = 0;
    for (const auto& v : e_h0) esq += v * v;
    BoundSides out;
    out.lhs = std::max(h0_v1, h0_v2);
    out.rhs = Rational(emax * fmax * esq, 4);
    out.holds = Rational(out.lhs) >= out.rhs;
    return out;
}

bool thm_bound_holds(const std::vector<Int>& e_h0, const std::vector<Int>& f_h0,
                     const std::vector<long>& s, const std::vector<long>& t) {
    return thm_bound_sides(e_h0, f_h0, s, t).holds;
}

bool thm_bound_holds_sums(const LineBundleSum& v1, const LineBundleSum& v2) {
    std::vector<Int> e, f;
    std::vector<long> s, t;
    for (const auto& sm : v1.summands()) {
        e.push_back(h_line(v1.n(), sm.degree, 0));
        s.push_back(sm.multiplicity);
    }
    for (const auto& sm : v2.summands()) {
        f.push_back(h_line(v2.n(), sm.degree, 0));
        t.push_back(sm.multiplicity);
    }
    return thm_bound_holds(e, f, s, t);
}

Int steiner_scale_bound(int n, long r, long t) {
    if (r < n) throw std::invalid_argument("steiner_scale_bound: need r >= n");
    if (t < 1) throw std::invalid_argument("steiner_scale_bound: need t >= 1");
    const AlphaBeta ab = alpha_beta(n, r, t);
    const Int ca1 = binom(ab.alpha + n - 1, n);
    const Int ca2 = binom(ab.alpha + n, n);
    const Int cb = binom(ab.beta + n - 1, n);
    const Rational lhs(ca1 * ca1 * ca2, Int(4) * (t + r));
    const Rational rhs(cb * cb * cb, Int(4) * t);
    const Rational bound = std::max(lhs, rhs);
    Int m = bound.ceil();
    if (m < 1) m = 1;
    return m;
}

MutationResult mutate_left(const PairData& pair) {
    const long rank = pair.hom_dim * pair.left.rank - pair.right.rank;
    if (rank < 1)
        throw std::invalid_argument("mutate_left: hom_dim*rank(E) - rank(F) must be >= 1");
    MutationResult out;
    out.result.rank = rank;
    out.result.h0 = pair.left.h0 * pair.hom_dim - pair.right.h0;
    out.result.label = "L(" + pair.left.label + "," + pair.right.label + ")";
    out.assumption = "h^0 arithmetic assumes the evaluation map is onto on global sections";
    return out;
}

MutationResult mutate_right(const PairData& pair) {
    const long rank = pair.hom_dim * pair.right.rank - pair.left.rank;
    if (rank < 1)
        throw std::invalid_argument("mutate_right: hom_dim*rank(F) - rank(E) must be >= 1");
    MutationResult out;
    out.result.rank = rank;
    out.result.h0 = pair.right.h0 * pair.hom_dim - pair.left.h0;
    out.result.label = "R(" + pair.right.label + "," + pair.left.label + ")";
    out.assumption = "h^0 arithmetic assumes H^1 of the mutated-around bundle vanishes";
    return out;
}

std::vector<SheafInvariants> mutation_chain(const PairData& pair, MutationSide side,
                                            const std::vector<long>& hom_dims) {
    std::vector<SheafInvariants> chain{pair.left, pair.right};
    // Each step mutates the newest member around the previous one, so a left
    // chain runs L_i = L_{L_{i-1}} L_{i-2} and a right chain R_i = R_{R_{i-1}} R_{i-2}.
    SheafInvariants newest = side == MutationSide::Left ? pair.left : pair.right;
    SheafInvariants older = side == MutationSide::Left ? pair.right : pair.left;
    for (long hd : hom_dims) {
        PairData step;
        step.hom_dim = hd;
        if (side == MutationSide::Left) {
            step.left = newest;
            step.right = older;
        } else {
            step.left = older;
            step.right = newest;
        }
        const SheafInvariants next = side == MutationSide::Left ? mutate_left(step).result
                                                                : mutate_right(step).result;
        older = newest;
        newest = next;
        chain.push_back(next);
    }
    return chain;
}

} // namespace steiner
