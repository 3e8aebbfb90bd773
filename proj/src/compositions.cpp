#include "qsymtab/compositions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsymtab {

namespace {

std::vector<int> parse_parts(std::string_view text) {
    std::string body(text);
    // strip whitespace and optional surrounding parentheses
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw std::invalid_argument("unbalanced parentheses in '" + body + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    if (body.empty()) return parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in composition string");
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad part '" + tok + "' in composition string");
        parts.push_back(v);
    }
    return parts;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ')';
    return out;
}

}  // namespace

// --- Composition ---

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) {
    return Composition(parse_parts(text));
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::str() const { return join_parts(parts_); }

// --- WeakComposition ---

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("weak composition parts must be nonnegative");
}

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

WeakComposition WeakComposition::parse(std::string_view text) {
    return WeakComposition(parse_parts(text));
}

int WeakComposition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index must be >= 1");
    if (i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

int WeakComposition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition WeakComposition::collapse() const {
    std::vector<int> out;
    for (int p : parts_)
        if (p > 0) out.push_back(p);
    return Composition(std::move(out));
}

WeakComposition WeakComposition::padded(int len) const {
    if (len < length())
        throw std::invalid_argument("cannot pad a weak composition to a shorter length");
    std::vector<int> out = parts_;
    out.resize(static_cast<size_t>(len), 0);
    return WeakComposition(std::move(out));
}

std::string WeakComposition::str() const { return join_parts(parts_); }

// --- Partition ---

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    return Partition(parse_parts(text));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index must be >= 1");
    if (i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::str() const { return join_parts(parts_); }

// --- SkewShape ---

SkewShape::SkewShape(Composition outer)
    : outer_(std::move(outer)), inner_(WeakComposition().padded(0)) {
    inner_ = WeakComposition(std::vector<int>(static_cast<size_t>(outer_.length()), 0));
}

SkewShape::SkewShape(Composition outer, WeakComposition inner) : outer_(std::move(outer)) {
    if (inner.length() > outer_.length())
        throw std::invalid_argument("inner shape longer than outer shape");
    inner_ = inner.padded(outer_.length());
    for (int i = 1; i <= outer_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw std::invalid_argument("inner shape exceeds outer shape in row " +
                                        std::to_string(i));
}

SkewShape::SkewShape(Composition outer, const Composition& inner)
    : SkewShape(std::move(outer), WeakComposition(inner.parts())) {}

int SkewShape::max_row_length() const {
    int m = 0;
    for (int p : outer_.parts()) m = std::max(m, p);
    return m;
}

bool SkewShape::contains_cell(int row, int col) const {
    if (row < 1 || row > rows() || col < 1) return false;
    return col > inner_.part(row) && col <= outer_.part(row);
}

std::string SkewShape::str() const {
    if (is_straight()) return outer_.str();
    return outer_.str() + "//" + inner_.collapse().str();
}

// --- subset correspondence ---

Composition comp_of_subset(const std::set<int>& subset, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0) {
        if (!subset.empty()) throw std::invalid_argument("nonempty subset of [-1]");
        return Composition();
    }
    std::vector<int> parts;
    int prev = 0;
    for (int s : subset) {
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("subset element " + std::to_string(s) +
                                        " outside [" + std::to_string(n - 1) + "]");
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::set<int> subset_of_comp(const Composition& alpha) {
    std::set<int> out;
    int sum = 0;
    for (int i = 1; i < alpha.length(); ++i) {
        sum += alpha.part(i);
        out.insert(sum);
    }
    return out;
}

Composition complement(const Composition& beta) {
    int n = beta.weight();
    std::set<int> s = subset_of_comp(beta);
    std::set<int> comp;
    for (int i = 1; i <= n - 1; ++i)
        if (!s.count(i)) comp.insert(i);
    return comp_of_subset(comp, n);
}

// --- L_c ---

std::vector<Composition> lc_covers_of(const Composition& alpha) {
    std::vector<Composition> out;
    std::vector<int> appended = alpha.parts();
    appended.push_back(1);
    out.emplace_back(std::move(appended));
    // add 1 to the rightmost part of each size present
    std::set<int> seen;
    for (int j = alpha.length(); j >= 1; --j) {
        int size = alpha.part(j);
        if (seen.count(size)) continue;
        seen.insert(size);
        std::vector<int> parts = alpha.parts();
        parts[static_cast<size_t>(j - 1)] += 1;
        out.emplace_back(std::move(parts));
    }
    return out;
}

LcRelation lc_relation(const Composition& alpha, const Composition& beta) {
    int steps = beta.weight() - alpha.weight();
    if (steps <= 0) return LcRelation::IncomparableOrEqual;
    // breadth-first search through covers, bounded by the weight difference
    std::set<Composition> frontier = {alpha};
    for (int step = 1; step <= steps; ++step) {
        std::set<Composition> next;
        for (const Composition& c : frontier)
            for (Composition& up : lc_covers_of(c)) {
                if (!contains(up, beta)) continue;  // prune off-path branches
                next.insert(std::move(up));
            }
        if (next.count(beta))
            return step == 1 ? LcRelation::Covers : LcRelation::StrictlyBelow;
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return LcRelation::IncomparableOrEqual;
}

bool contains(const Composition& alpha, const Composition& beta) {
    if (alpha.length() > beta.length()) return false;
    for (int i = 1; i <= alpha.length(); ++i)
        if (alpha.part(i) > beta.part(i)) return false;
    return true;
}

// --- (de)concatenation ---

Composition concat(const Composition& beta, const Composition& gamma) {
    std::vector<int> parts = beta.parts();
    parts.insert(parts.end(), gamma.parts().begin(), gamma.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& beta, const Composition& gamma) {
    if (beta.empty()) return gamma;
    if (gamma.empty()) return beta;
    std::vector<int> parts = beta.parts();
    parts.back() += gamma.part(1);
    parts.insert(parts.end(), gamma.parts().begin() + 1, gamma.parts().end());
    return Composition(std::move(parts));
}

std::vector<Deconcatenation> deconcatenations(const Composition& alpha) {
    std::vector<Deconcatenation> out;
    int n = alpha.weight();
    for (int i = 0; i <= n; ++i) {
        int sum = 0;
        int t = 0;  // number of whole parts in the left piece
        while (t < alpha.length() && sum + alpha.part(t + 1) <= i) {
            sum += alpha.part(t + 1);
            ++t;
        }
        std::vector<int> left(alpha.parts().begin(), alpha.parts().begin() + t);
        if (sum == i) {
            std::vector<int> right(alpha.parts().begin() + t, alpha.parts().end());
            out.push_back({Composition(std::move(left)), Composition(std::move(right)), false});
        } else {
            // the cut falls inside part t+1
            left.push_back(i - sum);
            std::vector<int> right;
            right.push_back(alpha.part(t + 1) - (i - sum));
            right.insert(right.end(), alpha.parts().begin() + t + 1, alpha.parts().end());
            out.push_back({Composition(std::move(left)), Composition(std::move(right)), true});
        }
    }
    return out;
}

// --- partition statistics ---

Partition shape_of(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.weight() != alpha.weight()) return false;
    const std::set<int> coarse = subset_of_comp(alpha);
    const std::set<int> fine = subset_of_comp(beta);
    return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("dominance compares partitions of equal weight");
    int len = std::max(lambda.length(), mu.length());
    int sl = 0, sm = 0;
    for (int i = 1; i <= len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl > sm) return false;
    }
    return true;
}

bool partition_contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

// --- declared total order ---

bool composition_order_less(const Composition& a, const Composition& b) {
    Partition sa = shape_of(a), sb = shape_of(b);
    if (sa != sb) return sa > sb;  // shapes lexicographically descending
    return a < b;                  // then the composition itself, ascending
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // one composition per subset of [n-1]
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1u << (i - 1))) s.insert(i);
        out.push_back(comp_of_subset(s, n));
    }
    std::sort(out.begin(), out.end(), composition_order_less);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(maxPart, remaining); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a > b; });
    return out;
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.str(); }
std::ostream& operator<<(std::ostream& os, const WeakComposition& c) { return os << c.str(); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const SkewShape& s) { return os << s.str(); }

}  // namespace qsymtab
