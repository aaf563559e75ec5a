#include "steiner/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "steiner/rank.hpp"

namespace steiner {

namespace {

void check_budget(long rows, long cols, long budget) {
    if (rows > budget || cols > budget) {
        throw BudgetExceeded("section matrix of shape " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " exceeds the dimension budget " +
                             std::to_string(budget));
    }
}

int rank_via(RankBackend backend, const FpMatrix& m, std::uint32_t p) {
    if (backend == RankBackend::Rational) return rank_rational(lift_to_integers(m));
    return rank_ffp(m, p);
}

} // namespace

CohomologyTable::CohomologyTable(int n, PresentationKind kind, GeneralMapSpec spec,
                                 TwistWindow window)
    : n_(n), kind_(kind), spec_(std::move(spec)), window_(window),
      entries_(static_cast<std::size_t>(window.size()) * (n + 1)) {}

const TableEntry& CohomologyTable::entry(int a, int i) const {
    if (a < window_.lo || a > window_.hi || i < 0 || i > n_)
        throw std::out_of_range("CohomologyTable::entry");
    return entries_[static_cast<std::size_t>(a - window_.lo) * (n_ + 1) + i];
}

void CohomologyTable::set_entry(int a, int i, TableEntry e) {
    entries_[static_cast<std::size_t>(a - window_.lo) * (n_ + 1) + i] = e;
}

std::vector<int> CohomologyTable::nonzero_indices(int a) const {
    std::vector<int> out;
    for (int i = 0; i <= n_; ++i)
        if (value(a, i) != 0) out.push_back(i);
    return out;
}

CohomologyTable cohomology_table(PresentationKind kind, const GeneralMapSpec& spec,
                                 TwistWindow window, const TableOptions& opts) {
    spec.validate();
    std::vector<GeneralMap> trials;
    trials.reserve(spec.trials);
    for (int t = 0; t < spec.trials; ++t) trials.emplace_back(spec, t);
    return cohomology_table(kind, trials, window, opts);
}

CohomologyTable cohomology_table(PresentationKind kind, const std::vector<GeneralMap>& trials,
                                 TwistWindow window, const TableOptions& opts) {
    if (trials.empty()) throw std::invalid_argument("cohomology_table: no trial maps");
    const GeneralMapSpec& spec = trials.front().spec();
    const int n = spec.n;
    if (n < 2)
        throw std::invalid_argument(
            "cohomology_table: n = 1 is not supported (the middle-vanishing bookkeeping "
            "needs n >= 2)");
    if (spec.allow_nonpositive_gap && spec.has_nonpositive_gap())
        throw std::invalid_argument("cohomology_table: waived-degree specs are not tabulated");

    CohomologyTable table(n, kind, spec, window);

    if (kind == PresentationKind::Kernel) {
        const long gap = spec.source.rank() - spec.target.rank();
        if (gap < n) table.set_local_freeness_warning(true);
        for (int a = window.lo; a <= window.hi; ++a) {
            const long rows = trials.front().section_rows(a);
            const long cols = trials.front().section_cols(a);
            check_budget(rows, cols, opts.budget);
            int best = 0;
            bool agree = true;
            for (std::size_t t = 0; t < trials.size(); ++t) {
                const int r = rank_via(opts.backend, trials[t].section_matrix(a), spec.prime);
                if (t > 0 && r != best) agree = false;
                best = std::max(best, r);
            }
            if (!agree) table.set_all_trials_agreed(false);
            table.set_entry(a, 0, {cols - best, Provenance::Matrix});
            table.set_entry(a, 1, {rows - best, Provenance::Matrix});
            for (int i = 2; i <= n - 1; ++i) table.set_entry(a, i, {0, Provenance::Formula});
            const Int top = spec.source.twisted(a).h(n) - spec.target.twisted(a).h(n);
            table.set_entry(a, n, {to_i64(top), Provenance::Formula});
        }
        // Sections of V(a) inject into V(a+1), so the section counts must be
        // nondecreasing; a violation means the elimination went wrong.
        for (int a = window.lo; a < window.hi; ++a) {
            if (table.value(a, 0) > table.value(a + 1, 0))
                throw std::logic_error("cohomology_table: h^0 not monotone at a=" +
                                       std::to_string(a));
        }
    } else {
        if (spec.source.rank() > spec.target.rank())
            throw std::invalid_argument(
                "cohomology_table: a cokernel presentation needs rank(source) <= rank(target)");
        std::vector<BlockMap> duals;
        duals.reserve(trials.size());
        for (const auto& t : trials) duals.push_back(t.dual_map());
        for (int a = window.lo; a <= window.hi; ++a) {
            const Int h0 = spec.target.twisted(a).h0() - spec.source.twisted(a).h0();
            if (h0 < 0)
                throw std::logic_error("cohomology_table: negative section count for cokernel");
            table.set_entry(a, 0, {to_i64(h0), Provenance::Formula});
            for (int i = 1; i <= n - 2; ++i) table.set_entry(a, i, {0, Provenance::Formula});
            const int b = -a - n - 1;
            const long rows = duals.front().section_rows(b); // = h^n(W1(a))
            const long cols = duals.front().section_cols(b); // = h^n(W2(a))
            check_budget(rows, cols, opts.budget);
            int best = 0;
            bool agree = true;
            for (std::size_t t = 0; t < duals.size(); ++t) {
                const int r = rank_via(opts.backend, duals[t].section_matrix(b), spec.prime);
                if (t > 0 && r != best) agree = false;
                best = std::max(best, r);
            }
            if (!agree) table.set_all_trials_agreed(false);
            table.set_entry(a, n - 1, {rows - best, Provenance::Matrix});
            table.set_entry(a, n, {cols - best, Provenance::Matrix});
        }
    }
    return table;
}

MaxRankResult max_rank_check(const GeneralMapSpec& spec) {
    spec.validate();
    MaxRankResult out;
    const long h0_src = to_i64(spec.source.h0());
    const long h0_tgt = to_i64(spec.target.h0());
    out.expected = std::min(h0_src, h0_tgt);
    out.achieved = generic_rank(spec, 0).rank;
    out.defect = out.expected - out.achieved;
    out.holds = out.defect == 0;
    return out;
}

namespace {

NaturalVerdict verdict_from_table(CohomologyTable table, long alpha, long beta,
                                  bool two_point) {
    NaturalVerdict v(std::move(table));
    v.alpha = alpha;
    v.beta = beta;
    v.beta_point = static_cast<int>(beta) - 1;
    v.alpha_point = static_cast<int>(alpha) - 1;
    for (int a = v.table.window().lo; a <= v.table.window().hi; ++a) {
        auto nz = v.table.nonzero_indices(a);
        if (nz.size() > 1) v.failing_twists.push_back({a, std::move(nz)});
    }
    bool ok = v.failing_twists.empty();
    if (two_point)
        ok = ok && v.table.value(v.beta_point, 0) == 0 && v.table.value(v.alpha_point, 1) == 0;
    v.natural = ok;
    v.char0_unresolved = !v.natural;
    return v;
}

// A rank defect seen over F_p transfers to characteristic 0 only if an
// integer lift shows the same defect; attempt that when the matrix is small.
void try_confirm_char0(NaturalVerdict& v) {
    if (v.natural || v.failing_twists.empty()) return;
    const int a = v.failing_twists.front().a;
    GeneralMapSpec spec = v.table.spec();
    GeneralMap map(spec, 0);
    const long rows = map.section_rows(a);
    const long cols = map.section_cols(a);
    if (rows > 150 || cols > 150) return;
    const int rank_q = rank_rational(lift_to_integers(map.section_matrix(a)));
    if (rank_q < std::min(rows, cols)) v.char0_unresolved = false;
}

} // namespace

NaturalVerdict natural_check(int n, long r, long t, const NaturalOptions& opts) {
    if (r < n)
        throw std::invalid_argument("natural_check: needs r >= n for a locally free kernel");
    if (t < 1) throw std::invalid_argument("natural_check: needs t >= 1");
    const AlphaBeta ab = alpha_beta(n, r, t);
    TwistWindow window = opts.window.value_or(
        TwistWindow(-n - 1, static_cast<int>(ab.alpha) + 1));
    // The two test points are the verdict; a user window only widens the scan.
    window = TwistWindow(std::min(window.lo, static_cast<int>(ab.beta) - 1),
                         std::max(window.hi, static_cast<int>(ab.alpha) - 1));

    GeneralMapSpec spec;
    spec.n = n;
    spec.source = LineBundleSum(n, {{0, t + r}});
    spec.target = LineBundleSum(n, {{1, t}});
    spec.seed = opts.seed;
    spec.prime = opts.prime;
    spec.trials = opts.trials;

    TableOptions topts;
    topts.budget = opts.budget;
    topts.backend = opts.backend;
    std::vector<GeneralMap> trials;
    trials.reserve(spec.trials);
    for (int t = 0; t < spec.trials; ++t) trials.emplace_back(spec, t);
    NaturalVerdict v = verdict_from_table(
        cohomology_table(PresentationKind::Kernel, trials, window, topts), ab.alpha, ab.beta,
        /*two_point=*/true);
    v.trial_maps = std::move(trials);
    try_confirm_char0(v);
    return v;
}

NaturalVerdict natural_check_spec(PresentationKind kind, const GeneralMapSpec& spec,
                                  TwistWindow window, const TableOptions& opts) {
    NaturalVerdict v = verdict_from_table(cohomology_table(kind, spec, window, opts),
                                          /*alpha=*/0, /*beta=*/0, /*two_point=*/false);
    try_confirm_char0(v);
    return v;
}

std::vector<SweepRecord> sweep(int n, long r_lo, long r_hi, long t_lo, long t_hi,
                               const SweepOptions& opts) {
    if (r_lo > r_hi || t_lo > t_hi) return {};
    struct Cell {
        long r, t;
    };
    std::vector<Cell> cells;
    for (long r = r_lo; r <= r_hi; ++r)
        for (long t = t_lo; t <= t_hi; ++t) cells.push_back({r, t});
    std::vector<SweepRecord> records(cells.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) return;
            const auto [r, t] = cells[idx];
            SweepRecord rec;
            rec.n = n;
            rec.r = r;
            rec.t = t;
            rec.prime = opts.prime;
            rec.seed = opts.seed.value;
            rec.trials = opts.trials;
            if (r >= 1 && t >= 0) {
                const AlphaBeta ab = alpha_beta(n, r, t);
                rec.alpha = ab.alpha;
                rec.beta = ab.beta;
            }
            if (r < n || t < 1) {
                rec.status = SweepRecord::Status::Skipped;
                records[idx] = std::move(rec);
                continue;
            }
            // Predict the largest matrix the cell needs; cells over budget are
            // skipped without building anything.
            const TwistWindow window(-n - 1, static_cast<int>(rec.alpha) + 1);
            const long max_dim = max_section_dim_steiner(n, r, t, window);
            rec.max_cols = max_dim;
            if (max_dim > opts.budget) {
                rec.status = SweepRecord::Status::Skipped;
                records[idx] = std::move(rec);
                continue;
            }
            NaturalOptions nopts;
            nopts.seed = opts.seed;
            nopts.prime = opts.prime;
            nopts.trials = opts.trials;
            nopts.budget = opts.budget;
            try {
                NaturalVerdict v = natural_check(n, r, t, nopts);
                rec.status = v.natural ? SweepRecord::Status::Natural
                                       : SweepRecord::Status::NotNatural;
                for (const auto& f : v.failing_twists) rec.fail_twists.push_back(f.a);
                rec.all_trials_agreed = v.table.all_trials_agreed();
            } catch (const BudgetExceeded&) {
                rec.status = SweepRecord::Status::Skipped;
            } catch (const std::exception& e) {
                // Never let a cell take the whole sweep down.
                rec.status = SweepRecord::Status::Skipped;
                std::cerr << "[sweep] cell (r=" << r << ", t=" << t << ") skipped: " << e.what()
                          << "\n";
            }
            records[idx] = std::move(rec);
        }
    };

    int nthreads = opts.threads > 0
                       ? opts.threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (const auto& rec : records) {
        if (!rec.all_trials_agreed) {
            std::cerr << "[sweep] trial ranks disagreed at (n=" << rec.n << ", r=" << rec.r
                      << ", t=" << rec.t << ")\n";
        }
    }
    return records;
}

long max_section_dim_steiner(int n, long r, long t, TwistWindow window) {
    const LineBundleSum source(n, {{0, t + r}});
    const LineBundleSum target(n, {{1, t}});
    long max_dim = 0;
    for (int a = window.lo; a <= window.hi; ++a) {
        max_dim = std::max({max_dim, to_i64(source.twisted(a).h0()),
                            to_i64(target.twisted(a).h0())});
    }
    return max_dim;
}

namespace {

const char* status_str(SweepRecord::Status s) {
    switch (s) {
        case SweepRecord::Status::Natural: return "true";
        case SweepRecord::Status::NotNatural: return "false";
        case SweepRecord::Status::Skipped: return "skipped";
    }
    return "?";
}

SweepRecord::Status status_from(const std::string& s) {
    if (s == "true") return SweepRecord::Status::Natural;
    if (s == "false") return SweepRecord::Status::NotNatural;
    if (s == "skipped") return SweepRecord::Status::Skipped;
    throw std::invalid_argument("bad naturality status: " + s);
}

std::string join_twists(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> split_twists(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

constexpr const char* kSweepHeader = "n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols";

} // namespace

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = kSweepHeader;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.r) + ',' + std::to_string(r.t) +
               ',' + std::to_string(r.alpha) + ',' + std::to_string(r.beta) + ',' +
               status_str(r.status) + ',' + join_twists(r.fail_twists) + ',' +
               std::to_string(r.prime) + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.trials) + ',' + std::to_string(r.max_cols) + '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json o;
        o["n"] = r.n;
        o["r"] = r.r;
        o["t"] = r.t;
        o["alpha"] = r.alpha;
        o["beta"] = r.beta;
        o["natural"] = status_str(r.status);
        o["fail_twists"] = r.fail_twists;
        o["prime"] = r.prime;
        o["seed"] = r.seed;
        o["trials"] = r.trials;
        o["max_cols"] = r.max_cols;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRecord> sweep_from_csv(const std::string& text) {
    std::vector<SweepRecord> out;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line) || line != kSweepHeader)
        throw std::invalid_argument("sweep CSV: bad header");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string item;
        while (std::getline(ls, item, ',')) f.push_back(item);
        if (f.size() != 11) throw std::invalid_argument("sweep CSV: bad row: " + line);
        SweepRecord r;
        r.n = std::stoi(f[0]);
        r.r = std::stol(f[1]);
        r.t = std::stol(f[2]);
        r.alpha = std::stol(f[3]);
        r.beta = std::stol(f[4]);
        r.status = status_from(f[5]);
        r.fail_twists = split_twists(f[6]);
        r.prime = static_cast<std::uint32_t>(std::stoul(f[7]));
        r.seed = std::stoull(f[8]);
        r.trials = std::stoi(f[9]);
        r.max_cols = std::stol(f[10]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SweepRecord> sweep_from_json(const std::string& text) {
    std::vector<SweepRecord> out;
    nlohmann::json arr = nlohmann::json::parse(text);
    for (const auto& o : arr) {
        SweepRecord r;
        r.n = o.at("n").get<int>();
        r.r = o.at("r").get<long>();
        r.t = o.at("t").get<long>();
        r.alpha = o.at("alpha").get<long>();
        r.beta = o.at("beta").get<long>();
        r.status = status_from(o.at("natural").get<std::string>());
        r.fail_twists = o.at("fail_twists").get<std::vector<int>>();
        r.prime = o.at("prime").get<std::uint32_t>();
        r.seed = o.at("seed").get<std::uint64_t>();
        r.trials = o.at("trials").get<int>();
        r.max_cols = o.at("max_cols").get<long>();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace steiner
