#include "steiner/sections.hpp"

#include <algorithm>
#include <stdexcept>

#include "steiner/rank.hpp"

namespace steiner {

FpMatrix mult_matrix(int n, int m, std::span<const std::uint32_t> f, int d, std::uint32_t p) {
    if (d < 0 || m < 0) throw std::invalid_argument("mult_matrix: negative degree");
    MonomialBasis form_basis(n, m);
    if (static_cast<long>(f.size()) != form_basis.size())
        throw std::invalid_argument("mult_matrix: coefficient vector has wrong length");
    MonomialBasis src(n, d);
    MonomialBasis dst(n, d + m);
    FpMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (long term = 0; term < form_basis.size(); ++term) {
        const std::uint32_t coef = f[term] % p;
        if (coef == 0) continue;
        const std::vector<int> fe = form_basis.exponents(term);
        std::vector<int> sum(n + 1);
        for (long col = 0; col < src.size(); ++col) {
            const std::vector<int> se = src.exponents(col);
            for (int v = 0; v <= n; ++v) sum[v] = se[v] + fe[v];
            const long row = dst.index_of(sum);
            auto& cell = out.at(static_cast<int>(row), static_cast<int>(col));
            cell = add_mod(cell, coef, p);
        }
    }
    return out;
}

BlockMap::BlockMap(int n, LineBundleSum source, LineBundleSum target, std::uint32_t prime)
    : n_(n), source_(std::move(source)), target_(std::move(target)), prime_(prime) {
    require_prime(prime_);
    if (source_.n() != n_ || target_.n() != n_)
        throw std::invalid_argument("BlockMap: ambient dimension mismatch");
    forms_.resize(target_.summands().size() * source_.summands().size());
    for (std::size_t j = 0; j < target_.summands().size(); ++j) {
        for (std::size_t i = 0; i < source_.summands().size(); ++i) {
            forms_[block_index(j, i)].resize(
                static_cast<std::size_t>(target_.summands()[j].multiplicity) *
                source_.summands()[i].multiplicity);
        }
    }
}

std::size_t BlockMap::block_index(std::size_t target_summand, std::size_t source_summand) const {
    return target_summand * source_.summands().size() + source_summand;
}

void BlockMap::set_form(std::size_t j, long copy_t, std::size_t i, long copy_s,
                        std::vector<std::uint32_t> coeffs) {
    const int m = target_.summands()[j].degree - source_.summands()[i].degree;
    if (m < 0) throw std::invalid_argument("BlockMap::set_form: block is forced zero (e < d)");
    const Int expect = binom(static_cast<long>(m) + n_, n_);
    if (Int(static_cast<long>(coeffs.size())) != expect)
        throw std::invalid_argument("BlockMap::set_form: coefficient vector has wrong length");
    forms_[block_index(j, i)][static_cast<std::size_t>(copy_t) *
                                  source_.summands()[i].multiplicity +
                              copy_s] = std::move(coeffs);
}

std::span<const std::uint32_t> BlockMap::form(std::size_t j, long copy_t, std::size_t i,
                                              long copy_s) const {
    return forms_[block_index(j, i)][static_cast<std::size_t>(copy_t) *
                                         source_.summands()[i].multiplicity +
                                     copy_s];
}

long BlockMap::section_rows(int a) const {
    long rows = 0;
    for (const auto& s : target_.summands()) {
        if (s.degree + a >= 0)
            rows += s.multiplicity * to_i64(binom(static_cast<long>(s.degree) + a + n_, n_));
    }
    return rows;
}

long BlockMap::section_cols(int a) const {
    long cols = 0;
    for (const auto& s : source_.summands()) {
        if (s.degree + a >= 0)
            cols += s.multiplicity * to_i64(binom(static_cast<long>(s.degree) + a + n_, n_));
    }
    return cols;
}

FpMatrix BlockMap::section_matrix(int a) const {
    const long rows = section_rows(a);
    const long cols = section_cols(a);
    if (rows > INT32_MAX || cols > INT32_MAX)
        throw std::invalid_argument("section_matrix: dimensions exceed machine limits");
    FpMatrix out(static_cast<int>(rows), static_cast<int>(cols));

    long row_base = 0;
    for (std::size_t j = 0; j < target_.summands().size(); ++j) {
        const auto& tj = target_.summands()[j];
        if (tj.degree + a < 0) continue;
        const long rowsz = to_i64(binom(static_cast<long>(tj.degree) + a + n_, n_));

        long col_base = 0;
        for (std::size_t i = 0; i < source_.summands().size(); ++i) {
            const auto& si = source_.summands()[i];
            if (si.degree + a < 0) continue;
            const long colsz = to_i64(binom(static_cast<long>(si.degree) + a + n_, n_));
            const int m = tj.degree - si.degree;
            if (m >= 0) {
                for (long ct = 0; ct < tj.multiplicity; ++ct) {
                    for (long cs = 0; cs < si.multiplicity; ++cs) {
                        auto coeffs = form(j, ct, i, cs);
                        if (coeffs.empty()) continue; // zero form
                        FpMatrix block = mult_matrix(n_, m, coeffs, si.degree + a, prime_);
                        const long r0 = row_base + ct * rowsz;
                        const long c0 = col_base + cs * colsz;
                        for (int br = 0; br < block.rows; ++br)
                            for (int bc = 0; bc < block.cols; ++bc)
                                out.at(static_cast<int>(r0 + br), static_cast<int>(c0 + bc)) =
                                    block.at(br, bc);
                    }
                }
            }
            col_base += si.multiplicity * colsz;
        }
        row_base += tj.multiplicity * rowsz;
    }
    return out;
}

BlockMap BlockMap::transposed() const {
    BlockMap out(n_, target_.dual(), source_.dual(), prime_);
    // Summand k of a dual sum corresponds to summand (count-1-k) of the
    // original (negation reverses the degree order).
    const std::size_t a = source_.summands().size();
    const std::size_t b = target_.summands().size();
    for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t i = 0; i < a; ++i) {
            const auto& tj = target_.summands()[j];
            const auto& si = source_.summands()[i];
            if (tj.degree < si.degree) continue;
            for (long ct = 0; ct < tj.multiplicity; ++ct) {
                for (long cs = 0; cs < si.multiplicity; ++cs) {
                    auto coeffs = form(j, ct, i, cs);
                    if (coeffs.empty()) continue;
                    out.set_form(a - 1 - i, cs, b - 1 - j, ct,
                                 std::vector<std::uint32_t>(coeffs.begin(), coeffs.end()));
                }
            }
        }
    }
    return out;
}

void GeneralMapSpec::validate() const {
    require_prime(prime);
    if (trials < 1) throw std::invalid_argument("GeneralMapSpec: trials must be >= 1");
    if (source.n() != n || target.n() != n)
        throw std::invalid_argument("GeneralMapSpec: ambient dimension mismatch");
    if (!allow_nonpositive_gap && has_nonpositive_gap())
        throw std::invalid_argument(
            "GeneralMapSpec: target degrees must strictly exceed source degrees "
            "(set the waiver flag to experiment beyond that)");
}

bool GeneralMapSpec::has_nonpositive_gap() const {
    return target.min_degree() <= source.max_degree();
}

namespace {

std::uint64_t as_tag(long v) { return static_cast<std::uint64_t>(static_cast<std::int64_t>(v)); }

} // namespace

namespace {
const GeneralMapSpec& validated(const GeneralMapSpec& s) {
    s.validate();
    return s;
}
} // namespace

GeneralMap::GeneralMap(const GeneralMapSpec& spec, int trial)
    : spec_(validated(spec)), trial_(trial),
      map_(spec.n, spec.source, spec.target, spec.prime) {
    if (trial < 0) throw std::invalid_argument("GeneralMap: trial index must be >= 0");
    const Seed trial_seed = derive(spec_.seed, static_cast<std::uint64_t>(trial));
    for (std::size_t j = 0; j < spec_.target.summands().size(); ++j) {
        const auto& tj = spec_.target.summands()[j];
        for (std::size_t i = 0; i < spec_.source.summands().size(); ++i) {
            const auto& si = spec_.source.summands()[i];
            const int m = tj.degree - si.degree;
            if (m < 0) continue; // zero block under the waiver
            const long ncoef = to_i64(binom(static_cast<long>(m) + spec_.n, spec_.n));
            for (long ct = 0; ct < tj.multiplicity; ++ct) {
                for (long cs = 0; cs < si.multiplicity; ++cs) {
                    Seed s = derive(trial_seed, as_tag(tj.degree));
                    s = derive(s, as_tag(ct));
                    s = derive(s, as_tag(si.degree));
                    s = derive(s, as_tag(cs));
                    SplitMix64 g(s);
                    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(ncoef));
                    for (auto& c : coeffs) c = g.next_mod(spec_.prime);
                    map_.set_form(j, ct, i, cs, std::move(coeffs));
                }
            }
        }
    }
}

GeneralMap GeneralMap::from_block_map(const GeneralMapSpec& spec, int trial, BlockMap map) {
    spec.validate();
    if (map.source() != spec.source || map.target() != spec.target || map.n() != spec.n)
        throw std::invalid_argument("GeneralMap::from_block_map: spec does not describe the map");
    return GeneralMap(spec, trial, std::move(map));
}

bool GenericRank::all_trials_agree() const {
    for (int r : per_trial)
        if (r != rank) return false;
    return true;
}

GenericRank generic_rank(const GeneralMapSpec& spec, int a) {
    spec.validate();
    GenericRank out;
    for (int trial = 0; trial < spec.trials; ++trial) {
        GeneralMap map(spec, trial);
        const int r = rank_ffp(map.section_matrix(a), spec.prime);
        out.per_trial.push_back(r);
        out.rank = std::max(out.rank, r);
    }
    return out;
}

int generic_rank_rational(const GeneralMapSpec& spec, int a, int trial) {
    GeneralMap map(spec, trial);
    return rank_rational(lift_to_integers(map.section_matrix(a)));
}

} // namespace steiner
