#include "steiner/bott.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace steiner {

LineBundleSum::LineBundleSum(int n, std::vector<Summand> summands)
    : n_(n), summands_(std::move(summands)) {
    if (n < 1) throw std::invalid_argument("LineBundleSum: ambient dimension must be >= 1");
    for (const auto& s : summands_) {
        if (s.multiplicity < 1)
            throw std::invalid_argument("LineBundleSum: multiplicities must be >= 1");
    }
    std::sort(summands_.begin(), summands_.end(),
              [](const Summand& a, const Summand& b) { return a.degree < b.degree; });
    std::vector<Summand> merged;
    for (const auto& s : summands_) {
        if (!merged.empty() && merged.back().degree == s.degree)
            merged.back().multiplicity += s.multiplicity;
        else
            merged.push_back(s);
    }
    summands_ = std::move(merged);
    if (summands_.empty()) throw std::invalid_argument("LineBundleSum: empty sum");
}

long LineBundleSum::rank() const {
    long r = 0;
    for (const auto& s : summands_) r += s.multiplicity;
    return r;
}

Int LineBundleSum::degree() const {
    Int d = 0;
    for (const auto& s : summands_) d += Int(s.degree) * s.multiplicity;
    return d;
}

int LineBundleSum::min_degree() const { return summands_.front().degree; }
int LineBundleSum::max_degree() const { return summands_.back().degree; }

LineBundleSum LineBundleSum::twisted(int a) const {
    std::vector<Summand> out = summands_;
    for (auto& s : out) s.degree += a;
    return LineBundleSum(n_, std::move(out));
}

LineBundleSum LineBundleSum::dual() const {
    std::vector<Summand> out = summands_;
    for (auto& s : out) s.degree = -s.degree;
    return LineBundleSum(n_, std::move(out));
}

Int LineBundleSum::h(int i) const {
    Int total = 0;
    for (const auto& s : summands_) total += h_line(n_, s.degree, i) * s.multiplicity;
    return total;
}

Int LineBundleSum::h0() const { return h(0); }

Int LineBundleSum::chi() const { return chi_sum(*this, 0); }

LineBundleSum LineBundleSum::parse(int n, const std::string& text) {
    std::vector<Summand> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // strip blanks
        item.erase(std::remove_if(item.begin(), item.end(),
                                  [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        if (item.empty()) throw std::invalid_argument("empty summand in sum: '" + text + "'");
        Summand s;
        auto caret = item.find('^');
        try {
            if (caret == std::string::npos) {
                s.degree = std::stoi(item);
                s.multiplicity = 1;
            } else {
                s.degree = std::stoi(item.substr(0, caret));
                s.multiplicity = std::stol(item.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse summand '" + item + "' (expected d^s)");
        }
        out.push_back(s);
    }
    return LineBundleSum(n, std::move(out));
}

std::string LineBundleSum::str() const {
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(summands_[i].degree);
        out += '^';
        out += std::to_string(summands_[i].multiplicity);
    }
    return out;
}

TwistWindow::TwistWindow(int l, int h) : lo(l), hi(h) {
    if (l > h) throw std::invalid_argument("TwistWindow: lo > hi");
}

Int h_line(int n, int d, int i) {
    if (n < 1) throw std::invalid_argument("h_line: ambient dimension must be >= 1");
    if (i < 0 || i > n)
        throw std::invalid_argument("h_line: cohomological index outside [0, n]");
    if (i == 0) return d >= 0 ? binom(static_cast<long>(d) + n, n) : Int(0);
    if (i == n) return d <= -n - 1 ? binom(-static_cast<long>(d) - 1, n) : Int(0);
    return 0;
}

Int chi_line(int n, int d) {
    Int c = h_line(n, d, 0);
    const Int top = h_line(n, d, n);
    if (n % 2 == 0)
        c += top;
    else
        c -= top;
    return c;
}

Int chi_sum(const LineBundleSum& v, int a) {
    Int total = 0;
    for (const auto& s : v.summands()) total += chi_line(v.n(), s.degree + a) * s.multiplicity;
    return total;
}

AlphaBeta alpha_beta(int n, long r, long t) {
    if (r < 1) throw std::invalid_argument("alpha_beta: rank must be >= 1");
    if (t < 0) throw std::invalid_argument("alpha_beta: count must be >= 0");
    const long num = t * n;
    AlphaBeta ab;
    ab.beta = num / r;
    ab.alpha = (num + r - 1) / r;
    return ab;
}

} // namespace steiner
