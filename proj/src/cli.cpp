#include "steiner/cli.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "steiner/ample.hpp"
#include "steiner/cohomology.hpp"
#include "steiner/kronecker.hpp"
#include "steiner/macaulay.hpp"
#include "steiner/rank_n.hpp"
#include "steiner/stability.hpp"

namespace steiner::cli {

namespace {

using nlohmann::json;

struct Common {
    std::uint64_t seed = 1;
    std::uint32_t prime = kDefaultPrime;
    int trials = 3;
    long budget = kDefaultBudget;
    std::string backend = "prime-field";
    std::string format = "table";
    std::string out_path;
};

// Environment overrides supply the defaults; explicit flags win over both.
void apply_env(Common& c) {
    if (const char* p = std::getenv("STEINER_PRIME"))
        c.prime = static_cast<std::uint32_t>(std::stoul(p));
    if (const char* s = std::getenv("STEINER_SEED")) c.seed = std::stoull(s);
}

void add_common(CLI::App* cmd, Common& c, bool with_backend = false) {
    cmd->add_option("--prime", c.prime, "prime field modulus")->capture_default_str();
    cmd->add_option("--seed", c.seed, "base seed; all draws derive from it")
        ->capture_default_str();
    cmd->add_option("--trials", c.trials, "independent general maps per rank")
        ->capture_default_str();
    cmd->add_option("--budget", c.budget, "max rows/cols of any section matrix")
        ->capture_default_str();
    if (with_backend)
        cmd->add_option("--backend", c.backend, "rank engine")
            ->check(CLI::IsMember({"prime-field", "rational"}))
            ->capture_default_str();
}

void add_format(CLI::App* cmd, Common& c, const std::string& dflt) {
    c.format = dflt;
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out_path, "write output to this path instead of stdout");
}

RankBackend backend_of(const Common& c) {
    return c.backend == "rational" ? RankBackend::Rational : RankBackend::PrimeField;
}

TwistWindow parse_window(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const int v = std::stoi(text);
        return TwistWindow(v, v);
    }
    return TwistWindow(std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2)));
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += '"';
    return out;
}

void emit(const std::string& payload, const Common& c, std::ostream& out) {
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output path: " + c.out_path);
        f << payload;
    } else {
        out << payload;
    }
}

std::string provenance_str(const CohomologyTable& t, int a) {
    std::string s;
    for (int i = 0; i <= t.n(); ++i)
        s += t.entry(a, i).provenance == Provenance::Matrix ? 'm' : 'f';
    return s;
}

Int table_chi(const CohomologyTable& t, int a) {
    const auto& spec = t.spec();
    const Int cs = chi_sum(spec.source, a), ct = chi_sum(spec.target, a);
    return t.kind() == PresentationKind::Kernel ? cs - ct : ct - cs;
}

json table_json(const CohomologyTable& t) {
    json o;
    o["n"] = t.n();
    o["kind"] = t.kind() == PresentationKind::Kernel ? "kernel" : "cokernel";
    o["source"] = t.spec().source.str();
    o["target"] = t.spec().target.str();
    o["prime"] = t.spec().prime;
    o["seed"] = t.spec().seed.value;
    o["trials"] = t.spec().trials;
    o["window"] = {t.window().lo, t.window().hi};
    o["local_freeness_warning"] = t.local_freeness_warning();
    json rows = json::array();
    for (int a = t.window().lo; a <= t.window().hi; ++a) {
        json row;
        row["a"] = a;
        std::vector<std::int64_t> h;
        for (int i = 0; i <= t.n(); ++i) h.push_back(t.value(a, i));
        row["h"] = h;
        row["chi"] = to_i64(table_chi(t, a));
        row["provenance"] = provenance_str(t, a);
        rows.push_back(std::move(row));
    }
    o["entries"] = std::move(rows);
    return o;
}

std::string table_csv(const CohomologyTable& t) {
    std::string out = "a";
    for (int i = 0; i <= t.n(); ++i) out += ",h" + std::to_string(i);
    out += ",chi,provenance\n";
    for (int a = t.window().lo; a <= t.window().hi; ++a) {
        out += std::to_string(a);
        for (int i = 0; i <= t.n(); ++i) out += ',' + std::to_string(t.value(a, i));
        out += ',' + table_chi(t, a).get_str() + ',' + provenance_str(t, a) + '\n';
    }
    return out;
}

std::string table_pretty(const CohomologyTable& t) {
    std::ostringstream os;
    os << "# " << (t.kind() == PresentationKind::Kernel ? "kernel" : "cokernel") << " of "
       << t.spec().source.str() << " -> " << t.spec().target.str() << " on P^" << t.n()
       << "  (p=" << t.spec().prime << ", seed=" << t.spec().seed.value
       << ", trials=" << t.spec().trials << ")\n";
    if (t.local_freeness_warning())
        os << "# warning: rank gap below n; the kernel sheaf may not be locally free\n";
    os << std::setw(6) << "a";
    for (int i = 0; i <= t.n(); ++i) os << std::setw(8) << ("h^" + std::to_string(i));
    os << std::setw(10) << "chi" << std::setw(6) << "src" << '\n';
    for (int a = t.window().lo; a <= t.window().hi; ++a) {
        os << std::setw(6) << a;
        for (int i = 0; i <= t.n(); ++i) os << std::setw(8) << t.value(a, i);
        os << std::setw(10) << table_chi(t, a).get_str() << std::setw(6) << provenance_str(t, a)
           << '\n';
    }
    return os.str();
}

// ---- subcommand handlers ------------------------------------------------

int cmd_cohomology(const Common& c, int n, const std::string& source, const std::string& target,
                   const std::string& kind, const std::string& window_text, std::ostream& out) {
    GeneralMapSpec spec;
    spec.n = n;
    spec.source = LineBundleSum::parse(n, source);
    spec.target = LineBundleSum::parse(n, target);
    spec.seed = Seed{c.seed};
    spec.prime = c.prime;
    spec.trials = c.trials;
    const PresentationKind k =
        kind == "cokernel" ? PresentationKind::Cokernel : PresentationKind::Kernel;

    TwistWindow window(0, 0);
    if (!window_text.empty()) {
        window = parse_window(window_text);
    } else if (spec.source.summands().size() == 1 && spec.source.min_degree() == 0 &&
               spec.target.summands().size() == 1 && spec.target.max_degree() == 1 &&
               spec.source.rank() > spec.target.rank()) {
        // Steiner-dual shape: cover the acyclic band, the h^1 band and the
        // h^0 band.
        const long t = spec.target.rank();
        const AlphaBeta ab = alpha_beta(n, spec.source.rank() - t, t);
        window = TwistWindow(-n - 2, static_cast<int>(std::max(ab.alpha + 2, t + 1)));
    } else {
        // Generic default: from the acyclic band to where the target side
        // stabilizes.
        const int hi = std::max(spec.target.max_degree() - spec.source.min_degree() + 2, n + 2);
        window = TwistWindow(-n - 2, hi);
    }

    TableOptions topts;
    topts.budget = c.budget;
    topts.backend = backend_of(c);
    const CohomologyTable table = cohomology_table(k, spec, window, topts);

    if (c.format == "json")
        emit(table_json(table).dump(2) + "\n", c, out);
    else if (c.format == "csv")
        emit(table_csv(table), c, out);
    else
        emit(table_pretty(table), c, out);
    return 0;
}

int cmd_natural(const Common& c, int n, long r, long t, const std::string& window_text,
                std::ostream& out) {
    NaturalOptions opts;
    opts.seed = Seed{c.seed};
    opts.prime = c.prime;
    opts.trials = c.trials;
    opts.budget = c.budget;
    opts.backend = backend_of(c);
    if (!window_text.empty()) opts.window = parse_window(window_text);
    const NaturalVerdict v = natural_check(n, r, t, opts);

    if (c.format == "json") {
        json o;
        o["n"] = n;
        o["r"] = r;
        o["t"] = t;
        o["alpha"] = v.alpha;
        o["beta"] = v.beta;
        o["natural"] = v.natural;
        o["test_points"] = {{"h0_vanishes_at", v.beta_point}, {"h1_vanishes_at", v.alpha_point}};
        json fails = json::array();
        for (const auto& f : v.failing_twists) fails.push_back({{"a", f.a}, {"nonzero", f.nonzero}});
        o["failing_twists"] = std::move(fails);
        if (!v.natural) o["char0_status"] = v.char0_unresolved ? "unresolved" : "confirmed defect";
        o["prime"] = c.prime;
        o["seed"] = c.seed;
        o["trials"] = c.trials;
        emit(o.dump(2) + "\n", c, out);
    } else if (c.format == "csv") {
        SweepRecord rec;
        rec.n = n;
        rec.r = r;
        rec.t = t;
        rec.alpha = v.alpha;
        rec.beta = v.beta;
        rec.status = v.natural ? SweepRecord::Status::Natural : SweepRecord::Status::NotNatural;
        for (const auto& f : v.failing_twists) rec.fail_twists.push_back(f.a);
        rec.prime = c.prime;
        rec.seed = c.seed;
        rec.trials = c.trials;
        rec.max_cols = max_section_dim_steiner(n, r, t, v.table.window());
        emit(sweep_to_csv({rec}), c, out);
    } else {
        std::ostringstream os;
        os << "natural: " << (v.natural ? "true" : "false") << "\n"
           << "alpha: " << v.alpha << "  beta: " << v.beta << "  (h^0 tested at a=" << v.beta_point
           << ", h^1 at a=" << v.alpha_point << ")\n";
        if (!v.failing_twists.empty()) {
            os << "failing twists:";
            for (const auto& f : v.failing_twists) {
                os << "  a=" << f.a << " (h^";
                for (std::size_t i = 0; i < f.nonzero.size(); ++i)
                    os << (i ? ",h^" : "") << f.nonzero[i];
                os << " nonzero)";
            }
            os << "\n";
            os << "char-0 status: "
               << (v.char0_unresolved ? "unresolved (F_p evidence only)" : "defect confirmed over Q")
               << "\n";
        }
        os << table_pretty(v.table);
        emit(os.str(), c, out);
    }
    return 0;
}

int cmd_sweep(const Common& c, int n, const std::string& r_range, const std::string& t_range,
              int threads, std::ostream& out) {
    const auto [rlo, rhi] = parse_range(r_range);
    const auto [tlo, thi] = parse_range(t_range);
    SweepOptions opts;
    opts.seed = Seed{c.seed};
    opts.prime = c.prime;
    opts.trials = c.trials;
    opts.budget = c.budget;
    opts.threads = threads;
    const auto records = sweep(n, rlo, rhi, tlo, thi, opts);

    if (!c.out_path.empty()) {
        std::string base = c.out_path;
        for (const char* ext : {".csv", ".json"}) {
            if (base.size() > 4 && base.ends_with(ext)) base.resize(base.size() - strlen(ext));
        }
        std::ofstream fc(base + ".csv", std::ios::binary);
        std::ofstream fj(base + ".json", std::ios::binary);
        if (!fc || !fj) throw std::invalid_argument("cannot open output path: " + base);
        fc << sweep_to_csv(records);
        fj << sweep_to_json(records);
        return 0;
    }
    if (c.format == "json")
        out << sweep_to_json(records);
    else if (c.format == "table") {
        std::ostringstream os;
        os << std::setw(4) << "r" << std::setw(4) << "t" << std::setw(7) << "alpha" << std::setw(6)
           << "beta" << std::setw(10) << "natural" << "  fail_twists\n";
        for (const auto& rec : records) {
            os << std::setw(4) << rec.r << std::setw(4) << rec.t << std::setw(7) << rec.alpha
               << std::setw(6) << rec.beta << std::setw(10)
               << (rec.status == SweepRecord::Status::Natural
                       ? "true"
                       : rec.status == SweepRecord::Status::NotNatural ? "false" : "skipped");
            for (std::size_t i = 0; i < rec.fail_twists.size(); ++i)
                os << (i ? ";" : "  ") << rec.fail_twists[i];
            os << '\n';
        }
        out << os.str();
    } else {
        out << sweep_to_csv(records);
    }
    return 0;
}

int cmd_stability(const Common& c, int n, long r, long t, long d, std::ostream& out) {
    const StabilityVerdict v = semistable_degree_d(n, r, t, d);
    const QuadricCharacter q = quadric_character(r, t);
    if (c.format == "csv") {
        std::string s = "n,r,t,d,outcome,witness\n";
        s += std::to_string(n) + ',' + std::to_string(r) + ',' + std::to_string(t) + ',' +
             std::to_string(d) + ',' + outcome_name(v.outcome) + ',' + csv_escape(v.witness) +
             '\n';
        emit(s, c, out);
    } else if (c.format == "table") {
        std::ostringstream os;
        os << "outcome: " << outcome_name(v.outcome) << "\nwitness: " << v.witness
           << "\nmu = " << q.mu << ", Delta = " << q.Delta << "\n";
        emit(os.str(), c, out);
    } else {
        json o;
        o["outcome"] = outcome_name(v.outcome);
        o["witness"] = v.witness;
        o["n"] = n;
        o["r"] = r;
        o["t"] = t;
        o["d"] = d;
        o["mu"] = q.mu.str();
        o["Delta"] = q.Delta.str();
        o["abe_applicable"] = q.abe_applicable;
        emit(o.dump(2) + "\n", c, out);
    }
    return 0;
}

int cmd_ample(const Common& c, int n, long r, long t, long d, int sample_lines,
              std::ostream& out) {
    const AmpleVerdict v = ample_criterion(n, r, t, d);
    std::optional<LineSampleResult> sample;
    if (sample_lines > 0)
        sample = line_splitting_sample(n, r, t, Seed{c.seed}, sample_lines, c.prime);

    // aggregate identical splitting types
    std::map<std::vector<long>, int> type_counts;
    if (sample)
        for (const auto& ty : sample->types) ++type_counts[ty.parts];

    if (c.format == "json") {
        json o;
        o["n"] = n;
        o["r"] = r;
        o["t"] = t;
        o["d"] = d;
        o["criterion"] = v.outcome == AmpleOutcome::GeneralAmple ? "GeneralAmple" : "Inconclusive";
        o["excess"] = v.excess;
        o["note"] = v.note;
        if (sample) {
            o["lines"] = sample_lines;
            o["min_part"] = sample->min_part_seen;
            json types = json::array();
            for (const auto& [parts, count] : type_counts)
                types.push_back({{"parts", parts}, {"count", count}});
            o["types"] = std::move(types);
            o["sampling_note"] = sample->note;
        }
        emit(o.dump(2) + "\n", c, out);
    } else if (c.format == "csv") {
        std::string s = "n,r,t,d,criterion,excess,lines,min_part\n";
        s += std::to_string(n) + ',' + std::to_string(r) + ',' + std::to_string(t) + ',' +
             std::to_string(d) + ',' +
             (v.outcome == AmpleOutcome::GeneralAmple ? "GeneralAmple" : "Inconclusive") + ',' +
             std::to_string(v.excess) + ',' + std::to_string(sample ? sample_lines : 0) + ',' +
             (sample ? std::to_string(sample->min_part_seen) : "") + '\n';
        emit(s, c, out);
    } else {
        std::ostringstream os;
        os << "criterion: "
           << (v.outcome == AmpleOutcome::GeneralAmple ? "GeneralAmple" : "Inconclusive") << "\n"
           << v.note << "\n";
        if (sample) {
            os << "sampled lines: " << sample_lines << ", min part: " << sample->min_part_seen
               << "\n";
            for (const auto& [parts, count] : type_counts) {
                os << "  (";
                for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
                os << ") x" << count << "\n";
            }
            os << sample->note << "\n";
        }
        emit(os.str(), c, out);
    }
    return 0;
}

int cmd_macaulay(const Common& c, long cval, long d, long steps, std::ostream& out) {
    const Int cv(cval);
    const MacaulayRep rep = macaulay_rep(cv, d);
    std::vector<Int> chain{cv};
    for (long s = 0; s < steps; ++s) chain.push_back(growth_chain(cv, d, s + 1));

    if (c.format == "json") {
        json o;
        o["c"] = cval;
        o["d"] = d;
        json terms = json::array();
        for (const auto& tm : rep.terms) terms.push_back({{"k", tm.k.get_str()}, {"j", tm.j}});
        o["terms"] = std::move(terms);
        o["growth"] = growth(cv, d).get_str();
        json ch = json::array();
        for (const auto& v : chain) ch.push_back(v.get_str());
        o["chain"] = std::move(ch);
        emit(o.dump(2) + "\n", c, out);
    } else if (c.format == "csv") {
        std::string s = "step,degree,value\n";
        for (std::size_t i = 0; i < chain.size(); ++i)
            s += std::to_string(i) + ',' + std::to_string(d + static_cast<long>(i)) + ',' +
                 chain[i].get_str() + '\n';
        emit(s, c, out);
    } else {
        std::ostringstream os;
        os << cval << " = ";
        for (std::size_t i = 0; i < rep.terms.size(); ++i) {
            if (i) os << " + ";
            os << "C(" << rep.terms[i].k.get_str() << "," << rep.terms[i].j << ")";
        }
        os << "\ngrowth: " << growth(cv, d).get_str() << "\nchain:";
        for (const auto& v : chain) os << " " << v.get_str();
        os << "\n";
        emit(os.str(), c, out);
    }
    return 0;
}

int cmd_kronecker(const Common& c, int n, int i, int j, std::uint32_t field, bool brute,
                  long budget, std::ostream& out) {
    if (!brute)
        throw std::invalid_argument("kronecker: only --brute-force mode is implemented");
    const SubspaceReport rep = brute_force_sks(n, i, j, field, budget);
    if (c.format == "json") {
        json o;
        o["n"] = n;
        o["i"] = i;
        o["j"] = j;
        o["field"] = field;
        o["stable"] = rep.stable;
        o["evaluation_surjective"] = rep.evaluation_surjective;
        o["min_margin"] = rep.min_margin.str();
        o["worst_subspace"] = rep.worst_subspace;
        o["subspaces_checked"] = rep.subspaces_checked;
        o["caveat"] = rep.caveat;
        emit(o.dump(2) + "\n", c, out);
    } else if (c.format == "csv") {
        std::string s = "n,i,j,field,stable,min_margin,subspaces_checked\n";
        s += std::to_string(n) + ',' + std::to_string(i) + ',' + std::to_string(j) + ',' +
             std::to_string(field) + ',' + (rep.stable ? "true" : "false") + ',' +
             csv_escape(rep.min_margin.str()) + ',' + std::to_string(rep.subspaces_checked) +
             '\n';
        emit(s, c, out);
    } else {
        std::ostringstream os;
        os << "stable: " << (rep.stable ? "true" : "false") << "\n"
           << "evaluation surjective: " << (rep.evaluation_surjective ? "true" : "false") << "\n"
           << "min margin over " << rep.subspaces_checked
           << " proper nonzero subspaces: " << rep.min_margin << "\n"
           << "worst subspace: " << rep.worst_subspace << "\n"
           << "caveat: " << rep.caveat << "\n";
        emit(os.str(), c, out);
    }
    return 0;
}

int cmd_bounds(const Common& c, int n, bool scale, long r, long t, const std::string& source,
               const std::string& target, std::ostream& out) {
    if (scale) {
        const Int m = steiner_scale_bound(n, r, t);
        const AlphaBeta ab = alpha_beta(n, r, t);
        if (c.format == "json") {
            json o;
            o["mode"] = "scale";
            o["n"] = n;
            o["r"] = r;
            o["t"] = t;
            o["alpha"] = ab.alpha;
            o["beta"] = ab.beta;
            o["m_min"] = m.get_str();
            emit(o.dump(2) + "\n", c, out);
        } else if (c.format == "csv") {
            emit("n,r,t,alpha,beta,m_min\n" + std::to_string(n) + ',' + std::to_string(r) + ',' +
                     std::to_string(t) + ',' + std::to_string(ab.alpha) + ',' +
                     std::to_string(ab.beta) + ',' + m.get_str() + '\n',
                 c, out);
        } else {
            emit("m_min: " + m.get_str() + " (scaled bundles are natural for every m >= m_min)\n",
                 c, out);
        }
        return 0;
    }
    if (source.empty() || target.empty())
        throw std::invalid_argument("bounds: need either --scale or --source and --target");
    const LineBundleSum v1 = LineBundleSum::parse(n, source);
    const LineBundleSum v2 = LineBundleSum::parse(n, target);
    std::vector<Int> e, f;
    std::vector<long> s, t_;
    for (const auto& sm : v1.summands()) {
        e.push_back(h_line(n, sm.degree, 0));
        s.push_back(sm.multiplicity);
    }
    for (const auto& sm : v2.summands()) {
        f.push_back(h_line(n, sm.degree, 0));
        t_.push_back(sm.multiplicity);
    }
    const BoundSides sides = thm_bound_sides(e, f, s, t_);
    if (c.format == "json") {
        json o;
        o["mode"] = "max-rank-bound";
        o["n"] = n;
        o["source"] = v1.str();
        o["target"] = v2.str();
        o["lhs"] = sides.lhs.get_str();
        o["rhs"] = sides.rhs.str();
        o["holds"] = sides.holds;
        emit(o.dump(2) + "\n", c, out);
    } else if (c.format == "csv") {
        emit("n,source,target,lhs,rhs,holds\n" + std::to_string(n) + ',' + csv_escape(v1.str()) +
                 ',' + csv_escape(v2.str()) + ',' + sides.lhs.get_str() + ',' +
                 csv_escape(sides.rhs.str()) + ',' + (sides.holds ? "true" : "false") + '\n',
             c, out);
    } else {
        std::ostringstream os;
        os << "max{h^0(V1), h^0(V2)} = " << sides.lhs.get_str() << "\n"
           << "(1/4)(max h^0(E))(max h^0(F)) sum h^0(E)^2 = " << sides.rhs << "\n"
           << "bound " << (sides.holds ? "holds" : "does not hold")
           << (sides.holds ? ": a general map has maximal rank on sections\n"
                           : ": the criterion is silent\n");
        emit(os.str(), c, out);
    }
    return 0;
}

int cmd_rank_n(const Common& c, int n, const std::string& source, const std::string& target,
               int twist, bool detector, bool vanishing, long d, long t, long a, long r,
               std::ostream& out) {
    if (detector) {
        const bool two = two_group_detector(n, static_cast<int>(d), t, static_cast<int>(a));
        if (c.format == "json") {
            json o;
            o["n"] = n;
            o["d"] = d;
            o["t"] = t;
            o["a"] = a;
            o["two_nonzero_groups"] = two;
            emit(o.dump(2) + "\n", c, out);
        } else {
            emit(std::string("two nonzero groups at a=") + std::to_string(a) + ": " +
                     (two ? "true" : "false") + "\n",
                 c, out);
        }
        return 0;
    }
    if (vanishing) {
        const VanishingRanges vr = vanishing_ranges(n, r, t);
        if (c.format == "json") {
            json o;
            o["n"] = n;
            o["r"] = r;
            o["t"] = t;
            o["k"] = vr.k;
            o["h0_vanish_max"] = vr.h0_vanish_max.str();
            o["h1_vanish_min"] = vr.h1_vanish_min.str();
            o["rules"] = {vr.h0_rule, vr.h1_rule};
            emit(o.dump(2) + "\n", c, out);
        } else {
            emit("H^0(V(d)) = 0 for d <= " + vr.h0_vanish_max.str() + "\nH^1(V(d)) = 0 for d >= " +
                     vr.h1_vanish_min.str() + "\n" + vr.h0_rule + "\n" + vr.h1_rule + "\n",
                 c, out);
        }
        return 0;
    }
    if (source.empty() || target.empty())
        throw std::invalid_argument("rank-n: need --source and --target (or --detector/--vanishing)");
    LineBundleSum v1 = LineBundleSum::parse(n, source);
    LineBundleSum v2 = LineBundleSum::parse(n, target);
    if (twist != 0) {
        v1 = v1.twisted(twist);
        v2 = v2.twisted(twist);
    }
    const ResolutionCohomology rc = h0_h1_formula(n, v1, v2);
    if (c.format == "json") {
        json o;
        o["n"] = n;
        o["source"] = v1.str();
        o["target"] = v2.str();
        json terms = json::array();
        for (const auto& tm : rc.terms)
            terms.push_back({{"i", tm.index}, {"bundle", tm.bundle.str()}});
        o["terms"] = std::move(terms);
        o["h0_applicable"] = rc.h0_applicable;
        o["h1_applicable"] = rc.h1_applicable;
        if (rc.h0) o["h0"] = rc.h0->get_str();
        if (rc.h1) o["h1"] = rc.h1->get_str();
        o["failed_hypotheses"] = rc.failed_hypotheses;
        emit(o.dump(2) + "\n", c, out);
    } else {
        std::ostringstream os;
        os << "resolution terms:";
        for (const auto& tm : rc.terms) os << "  U_" << tm.index << " = " << tm.bundle.str();
        os << "\n";
        if (rc.h0)
            os << "h^0 = " << rc.h0->get_str() << "\n";
        else
            os << "h^0 formula inapplicable\n";
        if (rc.h1)
            os << "h^1 = " << rc.h1->get_str() << "\n";
        else
            os << "h^1 formula inapplicable\n";
        for (const auto& fh : rc.failed_hypotheses) os << "  failed: " << fh << "\n";
        emit(os.str(), c, out);
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cohomology, stability and ampleness of kernel/cokernel bundles on P^n"};
    app.require_subcommand(1);

    Common c;
    apply_env(c);

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "cohomology table of a kernel/cokernel sheaf");
    int coh_n = 3;
    std::string coh_src, coh_tgt, coh_kind = "kernel", coh_window;
    Common coh_c = c;
    coh->add_option("--n", coh_n, "ambient projective dimension")->required();
    coh->add_option("--source", coh_src, "source sum, e.g. 2^4 or 0^7,1^2")->required();
    coh->add_option("--target", coh_tgt, "target sum, e.g. 4^1")->required();
    coh->add_option("--kind", coh_kind)->check(CLI::IsMember({"kernel", "cokernel"}));
    coh->add_option("--window", coh_window, "twist window lo..hi");
    add_common(coh, coh_c, /*with_backend=*/true);
    add_format(coh, coh_c, "table");
    coh->footer("CSV schema: a,h0,...,h{n},chi,provenance");

    // natural-check
    auto* nat = app.add_subcommand("natural-check",
                                   "two-point naturality test for ker(O^{t+r} -> O(1)^t)");
    int nat_n = 3;
    long nat_r = 3, nat_t = 1;
    std::string nat_window;
    Common nat_c = c;
    nat->add_option("--n", nat_n)->required();
    nat->add_option("--r", nat_r, "kernel rank")->required();
    nat->add_option("--t", nat_t, "target multiplicity")->required();
    nat->add_option("--window", nat_window, "sanity window lo..hi (default -n-1..alpha+1)");
    add_common(nat, nat_c, /*with_backend=*/true);
    add_format(nat, nat_c, "table");
    nat->footer("CSV schema: n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols");

    // sweep
    auto* sw = app.add_subcommand("sweep", "naturality sweep over an (r, t) grid");
    int sw_n = 3, sw_threads = 0;
    std::string sw_r, sw_t;
    Common sw_c = c;
    sw->add_option("--n", sw_n)->required();
    sw->add_option("--r", sw_r, "rank range lo..hi")->required();
    sw->add_option("--t", sw_t, "multiplicity range lo..hi")->required();
    sw->add_option("--threads", sw_threads, "worker threads (0 = hardware)");
    add_common(sw, sw_c);
    add_format(sw, sw_c, "csv");
    sw->footer("CSV schema: n,r,t,alpha,beta,natural,fail_twists,prime,seed,trials,max_cols\n"
               "--out BASE writes BASE.csv and the JSON mirror BASE.json");

    // stability
    auto* st = app.add_subcommand("stability", "slope-stability classification (JSON verdict)");
    int st_n = 3;
    long st_r = 3, st_t = 1, st_d = 1;
    Common st_c = c;
    st->add_option("--n", st_n)->required();
    st->add_option("--r", st_r)->required();
    st->add_option("--t", st_t)->required();
    st->add_option("--d", st_d, "form degree (1 = linear forms)");
    add_format(st, st_c, "json");
    st->footer("CSV schema: n,r,t,d,outcome,witness");

    // ample
    auto* am = app.add_subcommand("ample", "ampleness criterion and line-splitting sampler");
    int am_n = 2, am_lines = 0;
    long am_r = 2, am_t = 4, am_d = 1;
    Common am_c = c;
    am->add_option("--n", am_n)->required();
    am->add_option("--r", am_r)->required();
    am->add_option("--t", am_t)->required();
    am->add_option("--d", am_d);
    am->add_option("--sample-lines", am_lines, "number of random lines to sample");
    add_common(am, am_c);
    add_format(am, am_c, "table");
    am->footer("CSV schema: n,r,t,d,criterion,excess,lines,min_part");

    // macaulay
    auto* mc = app.add_subcommand("macaulay", "Macaulay representation and growth chain");
    long mc_c = 1, mc_d = 1, mc_steps = 1;
    Common mc_common = c;
    mc->add_option("--c", mc_c, "positive integer to expand")->required();
    mc->add_option("--d", mc_d, "degree")->required();
    mc->add_option("--steps", mc_steps, "growth chain length");
    add_format(mc, mc_common, "table");
    mc->footer("CSV schema: step,degree,value");

    // kronecker
    auto* kr = app.add_subcommand("kronecker", "brute-force strong Kronecker stability oracle");
    int kr_n = 2, kr_i = 1, kr_j = 1;
    std::uint32_t kr_field = 2;
    bool kr_brute = false;
    long kr_budget = 1000000;
    Common kr_c = c;
    kr->add_option("--n", kr_n)->required();
    kr->add_option("--i", kr_i, "source degree")->required();
    kr->add_option("--j", kr_j, "degree gap")->required();
    kr->add_option("--field", kr_field, "small prime to enumerate over");
    kr->add_flag("--brute-force", kr_brute, "enumerate all F_p-rational subspaces");
    kr->add_option("--budget", kr_budget, "max subspaces to enumerate");
    add_format(kr, kr_c, "table");
    kr->footer("CSV schema: n,i,j,field,stable,min_margin,subspaces_checked");

    // bounds
    auto* bd = app.add_subcommand("bounds", "maximal-rank and scaling bound evaluators");
    int bd_n = 3;
    bool bd_scale = false;
    long bd_r = 3, bd_t = 1;
    std::string bd_src, bd_tgt;
    Common bd_c = c;
    bd->add_option("--n", bd_n)->required();
    bd->add_flag("--scale", bd_scale, "minimal m making the scaled bundle natural");
    bd->add_option("--r", bd_r);
    bd->add_option("--t", bd_t);
    bd->add_option("--source", bd_src);
    bd->add_option("--target", bd_tgt);
    add_format(bd, bd_c, "table");
    bd->footer("CSV schema: n,r,t,alpha,beta,m_min (--scale) or n,source,target,lhs,rhs,holds");

    // rank-n
    auto* rn = app.add_subcommand("rank-n", "resolution formulas for rank-n kernels");
    int rn_n = 3, rn_twist = 0;
    bool rn_detector = false, rn_vanishing = false;
    long rn_d = 1, rn_t = 1, rn_a = 0, rn_r = 3;
    std::string rn_src, rn_tgt;
    Common rn_c = c;
    rn->add_option("--n", rn_n)->required();
    rn->add_option("--source", rn_src);
    rn->add_option("--target", rn_tgt);
    rn->add_option("--twist", rn_twist, "twist both sides before the formula");
    rn->add_flag("--detector", rn_detector, "two-nonzero-groups test (needs --d --t --a)");
    rn->add_flag("--vanishing", rn_vanishing, "vanishing thresholds (needs --r --t)");
    rn->add_option("--d", rn_d);
    rn->add_option("--t", rn_t);
    rn->add_option("--a", rn_a);
    rn->add_option("--r", rn_r);
    add_format(rn, rn_c, "table");

    std::vector<const char*> argv;
    static const std::string prog = "steiner";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (coh->parsed())
            return cmd_cohomology(coh_c, coh_n, coh_src, coh_tgt, coh_kind, coh_window, out);
        if (nat->parsed()) return cmd_natural(nat_c, nat_n, nat_r, nat_t, nat_window, out);
        if (sw->parsed()) return cmd_sweep(sw_c, sw_n, sw_r, sw_t, sw_threads, out);
        if (st->parsed()) return cmd_stability(st_c, st_n, st_r, st_t, st_d, out);
        if (am->parsed()) return cmd_ample(am_c, am_n, am_r, am_t, am_d, am_lines, out);
        if (mc->parsed()) return cmd_macaulay(mc_common, mc_c, mc_d, mc_steps, out);
        if (kr->parsed())
            return cmd_kronecker(kr_c, kr_n, kr_i, kr_j, kr_field, kr_brute, kr_budget, out);
        if (bd->parsed())
            return cmd_bounds(bd_c, bd_n, bd_scale, bd_r, bd_t, bd_src, bd_tgt, out);
        if (rn->parsed())
            return cmd_rank_n(rn_c, rn_n, rn_src, rn_tgt, rn_twist, rn_detector, rn_vanishing,
                              rn_d, rn_t, rn_a, rn_r, out);
        err << "no subcommand\n" << app.help();
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace steiner::cli
