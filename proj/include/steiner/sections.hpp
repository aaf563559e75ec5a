#pragma once

// Section matrices: the linear maps H^0(V_1(a)) -> H^0(V_2(a)) induced by a
// map of direct sums of line bundles, realized as block matrices of
// polynomial multiplication operators over F_p.
//
// A "general" map is realized by drawing every block's form with independent
// uniform F_p coefficients. Each form's stream is seeded by chaining
// derive(...) over (trial, target degree, target copy, source degree, source
// copy), so a block's draw depends only on its own identity: deleting a
// summand or lowering a multiplicity leaves every other block's entries
// untouched, and the same draw serves all twists of one map.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steiner/bott.hpp"
#include "steiner/fp.hpp"
#include "steiner/monomial.hpp"
#include "steiner/rng.hpp"

namespace steiner {

// Matrix of multiplication by a degree-m form f, from degree-d monomials to
// degree-(d+m) monomials; shape C(d+m+n,n) x C(d+n,n). f is a coefficient
// vector in the degree-m monomial basis (length C(m+n,n)).
FpMatrix mult_matrix(int n, int m, std::span<const std::uint32_t> f, int d, std::uint32_t p);

// A map between two line-bundle sums with explicitly given block forms.
// Block (j, i) holds one form of degree e_j - d_i per (target copy, source
// copy) pair; blocks with e_j < d_i are the zero map.
class BlockMap {
public:
    BlockMap(int n, LineBundleSum source, LineBundleSum target, std::uint32_t prime);

    int n() const { return n_; }
    const LineBundleSum& source() const { return source_; }
    const LineBundleSum& target() const { return target_; }
    std::uint32_t prime() const { return prime_; }

    void set_form(std::size_t target_summand, long copy_t, std::size_t source_summand,
                  long copy_s, std::vector<std::uint32_t> coeffs);
    std::span<const std::uint32_t> form(std::size_t target_summand, long copy_t,
                                        std::size_t source_summand, long copy_s) const;

    // Dimensions of the twisted section matrix without building it.
    long section_rows(int a) const;
    long section_cols(int a) const;

    FpMatrix section_matrix(int a) const;

    // The induced map between the dual sums (degrees negated, blocks
    // transposed, same forms).
    BlockMap transposed() const;

private:
    std::size_t block_index(std::size_t target_summand, std::size_t source_summand) const;

    int n_;
    LineBundleSum source_;
    LineBundleSum target_;
    std::uint32_t prime_;
    // forms_[block][copy_t * s_i + copy_s]; empty vector = zero form
    std::vector<std::vector<std::vector<std::uint32_t>>> forms_;
};

// A reproducible general map between two sums of line bundles.
struct GeneralMapSpec {
    int n = 2;
    LineBundleSum source;
    LineBundleSum target;
    Seed seed{1};
    std::uint32_t prime = kDefaultPrime;
    int trials = 3;
    // Normally every target degree must strictly exceed every source degree.
    // With the waiver, blocks with e_j < d_i are the zero map and blocks with
    // e_j = d_i are random scalars.
    bool allow_nonpositive_gap = false;

    void validate() const;
    bool has_nonpositive_gap() const;
};

class GeneralMap {
public:
    GeneralMap(const GeneralMapSpec& spec, int trial);

    // Wrap an explicitly built map (e.g. the transpose of another trial's
    // draw) under a spec describing it.
    static GeneralMap from_block_map(const GeneralMapSpec& spec, int trial, BlockMap map);

    const GeneralMapSpec& spec() const { return spec_; }
    int trial() const { return trial_; }
    const BlockMap& map() const { return map_; }

    FpMatrix section_matrix(int a) const { return map_.section_matrix(a); }
    long section_rows(int a) const { return map_.section_rows(a); }
    long section_cols(int a) const { return map_.section_cols(a); }

    // Same sheaf map, dual presentation (used for top-degree cohomology).
    BlockMap dual_map() const { return map_.transposed(); }

private:
    GeneralMap(GeneralMapSpec spec, int trial, BlockMap map)
        : spec_(std::move(spec)), trial_(trial), map_(std::move(map)) {}

    GeneralMapSpec spec_;
    int trial_;
    BlockMap map_;
};

// Rank of the section map at twist a of a general map: the maximum of
// rank_ffp over the spec's trials. Over F_p this is a certified lower bound
// for the characteristic-0 generic rank (specialization can only lose rank).
struct GenericRank {
    int rank = 0;
    bool certified_lower_bound = true;
    std::vector<int> per_trial;

    bool all_trials_agree() const;
};

GenericRank generic_rank(const GeneralMapSpec& spec, int a);

// Characteristic-0 cross-check: rank over Q of the integer lift of one
// trial's section matrix. At least the F_p rank by semicontinuity.
int generic_rank_rational(const GeneralMapSpec& spec, int a, int trial);

} // namespace steiner
