#pragma once

// Cohomology tables of kernel and cokernel sheaves of general maps between
// sums of line bundles on P^n (n >= 2), the two-point naturality verdict, the
// maximal-rank checker, and the sweep harness.
//
// Bookkeeping for 0 -> V -> V1 -> V2 -> 0 at twist a (line-bundle sums have no
// middle cohomology, so the long exact sequence collapses):
//   h^0(V(a)) = nullity of the section matrix H^0(V1(a)) -> H^0(V2(a)),
//   h^1(V(a)) = its cokernel dimension,
//   h^i(V(a)) = 0 for 2 <= i <= n-1,
//   h^n(V(a)) = h^n(V1(a)) - h^n(V2(a))   (the top map is onto: H^{n+1} = 0).
// For 0 -> W1 -> W2 -> V -> 0:
//   h^0(V(a)) = h^0(W2(a)) - h^0(W1(a)),
//   h^i(V(a)) = 0 for 1 <= i <= n-2,
//   h^{n-1}, h^n from the rank of the dual map's section matrix at -a-n-1
//   (Serre duality identifies H^n(W(a)) with H^0(W^*(-a-n-1))^*).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/bott.hpp"
#include "steiner/sections.hpp"

namespace steiner {

inline constexpr long kDefaultBudget = 20000;

// Thrown when a section matrix would exceed the configured dimension budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PresentationKind { Kernel, Cokernel };
enum class Provenance { Formula, Matrix };

struct TableEntry {
    std::int64_t value = 0;
    Provenance provenance = Provenance::Formula;
};

class CohomologyTable {
public:
    CohomologyTable(int n, PresentationKind kind, GeneralMapSpec spec, TwistWindow window);

    int n() const { return n_; }
    PresentationKind kind() const { return kind_; }
    const GeneralMapSpec& spec() const { return spec_; }
    const TwistWindow& window() const { return window_; }

    const TableEntry& entry(int a, int i) const;
    std::int64_t value(int a, int i) const { return entry(a, i).value; }

    // Indices i with h^i(V(a)) != 0.
    std::vector<int> nonzero_indices(int a) const;

    bool local_freeness_warning() const { return warn_kernel_rank_; }
    bool all_trials_agreed() const { return all_trials_agreed_; }

    void set_entry(int a, int i, TableEntry e);
    void set_local_freeness_warning(bool w) { warn_kernel_rank_ = w; }
    void set_all_trials_agreed(bool v) { all_trials_agreed_ = v; }

private:
    int n_;
    PresentationKind kind_;
    GeneralMapSpec spec_;
    TwistWindow window_;
    std::vector<TableEntry> entries_; // (a - lo) * (n+1) + i
    bool warn_kernel_rank_ = false;
    bool all_trials_agreed_ = true;
};

// Which exact rank engine backs the matrix entries. PrimeField certifies
// lower bounds for the characteristic-0 generic rank; Rational computes the
// exact characteristic-0 rank of the lifted specialization (slower).
enum class RankBackend { PrimeField, Rational };

struct TableOptions {
    long budget = kDefaultBudget; // max rows/cols of any section matrix built
    RankBackend backend = RankBackend::PrimeField;
};

// Build the table by drawing spec.trials independent maps.
CohomologyTable cohomology_table(PresentationKind kind, const GeneralMapSpec& spec,
                                 TwistWindow window, const TableOptions& opts = {});

// Build the table for explicitly constructed trial maps (all for the same
// spec). Used when the exact same sheaf map must be shared between a table and
// its dual.
CohomologyTable cohomology_table(PresentationKind kind, const std::vector<GeneralMap>& trials,
                                 TwistWindow window, const TableOptions& opts = {});

// Maximal rank of the induced map on global sections at twist 0.
struct MaxRankResult {
    bool holds = false;
    long defect = 0; // min(h^0 source, h^0 target) - achieved rank
    long expected = 0;
    long achieved = 0;
};
MaxRankResult max_rank_check(const GeneralMapSpec& spec);

// Naturality of the kernel of a general O^{t+r} -> O(1)^t on P^n.
//
// With alpha = ceil(tn/r) and beta = floor(tn/r), the bundle has natural
// cohomology iff h^0(V(beta-1)) = 0 and h^1(V(alpha-1)) = 0; a sanity window
// around the test points is tabulated as well and every twist is checked for
// at most one nonzero group.
struct NaturalOptions {
    Seed seed{1};
    std::uint32_t prime = kDefaultPrime;
    int trials = 3;
    long budget = kDefaultBudget;
    RankBackend backend = RankBackend::PrimeField;
    std::optional<TwistWindow> window; // default [-n-1, alpha+1]
};

struct FailingTwist {
    int a = 0;
    std::vector<int> nonzero; // cohomological indices with h^i != 0
};

struct NaturalVerdict {
    explicit NaturalVerdict(CohomologyTable t) : table(std::move(t)) {}

    bool natural = false;
    std::vector<FailingTwist> failing_twists;
    int beta_point = 0;  // beta - 1 (h^0 must vanish here)
    int alpha_point = 0; // alpha - 1 (h^1 must vanish here)
    long alpha = 0;
    long beta = 0;
    bool char0_unresolved = false; // failures certified over F_p only
    CohomologyTable table;
    std::vector<GeneralMap> trial_maps; // the draws behind the table
};

NaturalVerdict natural_check(int n, long r, long t, const NaturalOptions& opts = {});

// Window-scan verdict for an arbitrary presentation (no two-point reduction).
NaturalVerdict natural_check_spec(PresentationKind kind, const GeneralMapSpec& spec,
                                  TwistWindow window, const TableOptions& opts = {});

// Sweep over a (r, t) grid.
struct SweepOptions {
    Seed seed{1};
    std::uint32_t prime = kDefaultPrime;
    int trials = 3;
    long budget = kDefaultBudget;
    int threads = 0; // 0 = hardware concurrency
};

struct SweepRecord {
    int n = 0;
    long r = 0, t = 0;
    long alpha = 0, beta = 0;
    enum class Status { Natural, NotNatural, Skipped } status = Status::Natural;
    std::vector<int> fail_twists;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    int trials = 3;
    long max_cols = 0; // largest section-matrix dimension this cell needed
    bool all_trials_agreed = true;

    bool operator==(const SweepRecord&) const = default;
};

std::vector<SweepRecord> sweep(int n, long r_lo, long r_hi, long t_lo, long t_hi,
                               const SweepOptions& opts = {});

// Largest section-matrix dimension the O^{t+r} -> O(1)^t check needs over a
// window (a formula-level prediction; nothing is built).
long max_section_dim_steiner(int n, long r, long t, TwistWindow window);

// Persistence. Field order is frozen:
//   n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols
// natural is true/false/skipped; fail_twists joins twists with ';'.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);
std::string sweep_to_json(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> sweep_from_csv(const std::string& text);
std::vector<SweepRecord> sweep_from_json(const std::string& text);

} // namespace steiner
