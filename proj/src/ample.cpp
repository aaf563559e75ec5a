#include "steiner/ample.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>

#include "steiner/rank.hpp"
#include "steiner/sections.hpp"

namespace steiner {

AmpleVerdict ample_criterion(int n, long r, long t, long d) {
    if (n < 1) throw std::invalid_argument("ample_criterion: need n >= 1");
    if (r < n) throw std::invalid_argument("ample_criterion: need r >= n");
    if (t < 1 || d < 1) throw std::invalid_argument("ample_criterion: need t, d >= 1");
    AmpleVerdict v;
    v.excess = t - r - (2 * static_cast<long>(n) - 3);
    if (v.excess > 0) {
        v.outcome = AmpleOutcome::GeneralAmple;
        v.note = "t - r = " + std::to_string(t - r) + " > 2n - 3 = " +
                 std::to_string(2 * n - 3) +
                 ": the non-ample locus has codimension >= " + std::to_string(v.excess) +
                 ", so the general bundle is ample (any degree d >= 1)";
    } else {
        v.outcome = AmpleOutcome::Inconclusive;
        v.note = "t - r - (2n-3) = " + std::to_string(v.excess) +
                 " <= 0: the criterion is silent; sampling may still falsify ampleness";
    }
    return v;
}

long SplittingType::min_part() const {
    if (parts.empty()) throw std::logic_error("SplittingType: empty");
    return parts.back(); // parts are descending
}

long SplittingType::sum() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

namespace {

constexpr std::uint64_t kLineTag = 0x6C696E65; // substitution stream, separate from form draws

struct Line {
    std::vector<std::uint32_t> lambda, mu; // x_i -> lambda_i s + mu_i u
};

bool substitution_degenerate(const Line& line, std::uint32_t p) {
    // rank < 2 iff all 2x2 minors vanish
    const std::size_t m = line.lambda.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::uint32_t det = sub_mod(mul_mod(line.lambda[i], line.mu[j], p),
                                              mul_mod(line.lambda[j], line.mu[i], p), p);
            if (det != 0) return false;
        }
    }
    return true;
}

Line draw_line(SplitMix64& g, int n, std::uint32_t p) {
    for (;;) {
        Line line;
        line.lambda.resize(n + 1);
        line.mu.resize(n + 1);
        for (auto& v : line.lambda) v = g.next_mod(p);
        for (auto& v : line.mu) v = g.next_mod(p);
        if (!substitution_degenerate(line, p)) return line;
    }
}

// Restrict a linear form in x_0..x_n to the line: coefficients on (s, u).
std::vector<std::uint32_t> restrict_linear(std::span<const std::uint32_t> coeffs,
                                           const Line& line, std::uint32_t p) {
    std::uint64_t cs = 0, cu = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        cs = (cs + static_cast<std::uint64_t>(coeffs[k]) * line.lambda[k]) % p;
        cu = (cu + static_cast<std::uint64_t>(coeffs[k]) * line.mu[k]) % p;
    }
    return {static_cast<std::uint32_t>(cs), static_cast<std::uint32_t>(cu)};
}

// Recover the splitting type of V|_L from the section profile of its dual
// kernel bundle on the line. g(b) = h^0(V^*|_L(b)) = sum_k max(b+1-a_k, 0), so
// second differences of g count the parts equal to each degree.
std::optional<SplittingType> splitting_from_profile(const std::vector<long>& g, long r, long t) {
    SplittingType out;
    long prev_g = 0, prev_delta = 0;
    std::vector<long> counts(g.size(), 0);
    for (std::size_t b = 0; b < g.size(); ++b) {
        const long delta = g[b] - prev_g;
        counts[b] = delta - prev_delta;
        if (counts[b] < 0) return std::nullopt;
        prev_g = g[b];
        prev_delta = delta;
    }
    long total = 0, degree = 0;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        total += counts[m];
        degree += static_cast<long>(m) * counts[m];
    }
    if (total != r || degree != t) return std::nullopt;
    for (long m = static_cast<long>(counts.size()) - 1; m >= 0; --m)
        out.parts.insert(out.parts.end(), counts[m], m);
    return out;
}

} // namespace

LineSampleResult line_splitting_sample(int n, long r, long t, Seed seed, int lines,
                                       std::uint32_t p) {
    if (n < 1) throw std::invalid_argument("line_splitting_sample: need n >= 1");
    if (r < 1 || t < 1) throw std::invalid_argument("line_splitting_sample: need r, t >= 1");
    if (lines < 1) throw std::invalid_argument("line_splitting_sample: need lines >= 1");
    require_prime(p);

    GeneralMapSpec spec;
    spec.n = n;
    spec.source = LineBundleSum(n, {{-1, t}});
    spec.target = LineBundleSum(n, {{0, r + t}});
    spec.seed = seed;
    spec.prime = p;
    spec.trials = 1;
    const GeneralMap presentation(spec, 0);

    LineSampleResult out;
    out.note = "sampling certifies only that no non-ample witness appeared among the sampled "
               "lines; a part <= 0 on any line would falsify ampleness of this specialization";

    const LineBundleSum line_source(1, {{0, r + t}});
    const LineBundleSum line_target(1, {{1, t}});

    for (int li = 0; li < lines; ++li) {
        SplitMix64 g(derive(derive(seed, kLineTag), static_cast<std::uint64_t>(li)));
        std::optional<SplittingType> type;
        for (int attempt = 0; attempt < 4 && !type; ++attempt) {
            const Line line = draw_line(g, n, p);
            // The dual presentation restricted to the line: O^{r+t} -> O(1)^t
            // with the transposed, substituted linear forms.
            BlockMap restricted(1, line_source, line_target, p);
            for (long j = 0; j < t; ++j) {
                for (long i = 0; i < r + t; ++i) {
                    restricted.set_form(0, j, 0, i,
                                        restrict_linear(presentation.map().form(0, i, 0, j),
                                                        line, p));
                }
            }
            std::vector<long> profile;
            for (int b = 0; b <= static_cast<int>(t); ++b) {
                const FpMatrix m = restricted.section_matrix(b);
                profile.push_back(m.cols - rank_ffp(m, p));
            }
            type = splitting_from_profile(profile, r, t);
            // A failed recovery means the map degenerated along this line
            // (probability ~ 1/p); take a fresh substitution.
        }
        if (!type)
            throw std::runtime_error(
                "line_splitting_sample: restriction stayed degenerate after redraws");
        out.types.push_back(std::move(*type));
    }

    out.min_part_seen = out.types.front().min_part();
    for (const auto& ty : out.types) out.min_part_seen = std::min(out.min_part_seen, ty.min_part());
    return out;
}

} // namespace steiner
