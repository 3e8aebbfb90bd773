#include "qsymtab/insertion_lr.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qsymtab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// The scan sequence of Algorithms 5.1/5.2: every cell in columns >= 2 up
// to one past each row end, columns right to left, each column display
// top to bottom.  The appended cell at (r, len_r + 1) is the row's
// sentinel slot.
struct ScanCell {
    int row;
    int col;
    bool sentinel;
};

std::vector<ScanCell> scan_sequence(const std::vector<std::vector<int>>& rows, bool french) {
    int maxlen = 0;
    for (const auto& row : rows) maxlen = std::max(maxlen, static_cast<int>(row.size()));
    std::vector<ScanCell> seq;
    const int l = static_cast<int>(rows.size());
    for (int c = maxlen + 1; c >= 2; --c) {
        auto visit = [&](int r) {
            int len = static_cast<int>(rows[static_cast<size_t>(r - 1)].size());
            if (c <= len)
                seq.push_back({r, c, false});
            else if (c == len + 1)
                seq.push_back({r, c, true});
        };
        if (french)
            for (int r = l; r >= 1; --r) visit(r);
        else
            for (int r = 1; r <= l; ++r) visit(r);
    }
    return seq;
}

}  // namespace

InsertionResult insert(const Filling& t, int x) {
    const Family fam = t.kind().family;
    if (fam != Family::SSYRT && fam != Family::SSRRT)
        throw std::invalid_argument("insertion is defined for SSYRT and SSRRT");
    if (!t.shape().is_straight())
        throw std::invalid_argument("insertion expects a straight shape");
    if (x <= 0) throw std::invalid_argument("inserted values must be positive");

    const bool young = fam == Family::SSYRT;
    std::vector<std::vector<int>> rows = t.rows();
    std::vector<Cell> path;
    int value = x;

    const std::vector<ScanCell> seq = scan_sequence(rows, young);
    size_t pos = 0;
    std::optional<Cell> settled;
    while (pos < seq.size()) {
        const ScanCell& cell = seq[pos];
        auto& row = rows[static_cast<size_t>(cell.row - 1)];
        const int left = row[static_cast<size_t>(cell.col - 2)];
        const int here = cell.sentinel ? (young ? kInf : 0)
                                       : row[static_cast<size_t>(cell.col - 1)];
        const bool hit = young ? (here >= value && left < value)
                               : (here <= value && left > value);
        // sentinel slots in column 2 are not eligible: length-one rows
        // grow only through the first-column fallback
        if (hit && !(cell.sentinel && cell.col == 2)) {
            path.emplace_back(cell.row, cell.col);
            if (cell.sentinel) {
                row.push_back(value);
                settled = Cell{cell.row, cell.col};
                break;
            }
            std::swap(value, row[static_cast<size_t>(cell.col - 1)]);  // bump
        }
        ++pos;
    }

    Cell new_cell;
    if (settled) {
        new_cell = *settled;
    } else {
        // first-column insertion at the unique admissible position
        int p = 0;
        for (const auto& row : rows) {
            int first = row.front();
            if (young ? first < value : first <= value) ++p;
        }
        const int l = static_cast<int>(rows.size());
        if (p > 0) {
            int prev = rows[static_cast<size_t>(p - 1)].front();
            if (!(young ? prev < value : prev <= value))
                throw std::logic_error("first-column insertion position is not admissible");
        }
        if (p < l) {
            int next = rows[static_cast<size_t>(p)].front();
            if (!(young ? value <= next : value < next))
                throw std::logic_error("first-column insertion position is not unique");
        }
        rows.insert(rows.begin() + p, std::vector<int>{value});
        new_cell = {p + 1, 1};
        for (auto& [r, c] : path)
            if (r >= p + 1) ++r;
        path.push_back(new_cell);
    }

    std::vector<int> outer;
    for (const auto& row : rows) outer.push_back(static_cast<int>(row.size()));
    Filling result({fam, false}, SkewShape(Composition(outer)), std::move(rows));
    if (auto report = validate(result); !report.ok)
        throw std::logic_error("insertion produced an invalid filling:\n" + report.str());
    return {std::move(result), new_cell, std::move(path)};
}

LatticeProperties lattice_predicates(const std::vector<int>& word) {
    LatticeProperties out;
    int maxv = 0;
    for (int v : word) {
        if (v < 1) throw std::invalid_argument("word letters must be positive");
        maxv = std::max(maxv, v);
    }
    std::vector<int> count(static_cast<size_t>(maxv) + 2, 0);

    out.lattice = true;
    for (int v : word) {
        ++count[static_cast<size_t>(v)];
        if (v >= 2 && count[static_cast<size_t>(v)] > count[static_cast<size_t>(v - 1)]) {
            out.lattice = false;
            break;
        }
    }

    std::fill(count.begin(), count.end(), 0);
    out.reverse_lattice = true;
    for (int v : word) {
        ++count[static_cast<size_t>(v)];
        if (v + 1 <= maxv && count[static_cast<size_t>(v)] > count[static_cast<size_t>(v + 1)]) {
            out.reverse_lattice = false;
            break;
        }
    }
    out.regular_reverse =
        out.reverse_lattice && std::find(word.begin(), word.end(), 1) != word.end();
    return out;
}

namespace {

// Values seen by the LR triple checks: column 0 and inner cells carry
// the sentinel (0 for the lattice rule, infinity for the reverse rule).
int lr_value(const Filling& l, int r, int c, int sentinel) {
    if (c == 0) return sentinel;
    return l.shape().contains_cell(r, c) ? l.entry(r, c) : sentinel;
}

// Type A/B triple conditions.  Horizontally adjacent sentinel pairs
// count as increasing (decreasing for the reverse rule), matching the
// convention that inner cells never constrain one another.
bool lr_triple_ok(int a, int b, int c, int sentinel) {
    const bool ab = (a == sentinel && b == sentinel) ||
                    (sentinel == 0 ? a < b : b < a);
    if (!ab) return false;
    return sentinel == 0 ? (b <= c || c <= a) : (c <= b || a <= c);
}

bool lr_check(const Filling& l, int sentinel) {
    const SkewShape& sh = l.shape();
    const bool reverse = sentinel != 0;
    // rows strictly increase (decrease for the reverse rule)
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = sh.inner_length(r) + 2; c <= sh.row_length(r); ++c) {
            if (reverse ? l.entry(r, c - 1) <= l.entry(r, c)
                        : l.entry(r, c - 1) >= l.entry(r, c))
                return false;
        }
    // column word condition
    std::vector<int> word;
    for (int c = 1; c <= sh.max_row_length(); ++c) {
        if (reverse) {
            for (int r = sh.rows(); r >= 1; --r)
                if (sh.contains_cell(r, c)) word.push_back(l.entry(r, c));
        } else {
            for (int r = 1; r <= sh.rows(); ++r)
                if (sh.contains_cell(r, c)) word.push_back(l.entry(r, c));
        }
    }
    LatticeProperties lat = lattice_predicates(word);
    if (reverse ? !lat.regular_reverse : !lat.lattice) return false;

    // type A and B triples, including column 0
    for (int above = 1; above <= sh.rows(); ++above)
        for (int below = 1; below <= sh.rows(); ++below) {
            if (above == below) continue;
            const bool is_above = reverse ? above < below : above > below;
            if (!is_above) continue;
            const int ba = sh.row_length(above), bb = sh.row_length(below);
            if (ba >= bb) {
                // type A: a, b in the upper row at columns k-1, k; c below
                for (int k = 1; k <= bb; ++k)
                    if (!lr_triple_ok(lr_value(l, above, k - 1, sentinel),
                                      lr_value(l, above, k, sentinel),
                                      lr_value(l, below, k, sentinel), sentinel))
                        return false;
            } else {
                // type B: c in the upper row at column k-1; a, b below
                for (int k = 1; k <= std::min(bb, ba + 1); ++k)
                    if (!lr_triple_ok(lr_value(l, below, k - 1, sentinel),
                                      lr_value(l, below, k, sentinel),
                                      lr_value(l, above, k - 1, sentinel), sentinel))
                        return false;
            }
        }
    return true;
}

}  // namespace

bool is_lr_skew_ssyrt(const Filling& l) { return lr_check(l, 0); }

bool is_reverse_lr(const Filling& l) { return lr_check(l, kInf); }

namespace {

// Zero placements gamma with gamma+ = alpha inside a shape of len rows.
std::vector<WeakComposition> zero_placements(const Composition& alpha,
                                             const Composition& beta) {
    const int len = beta.length();
    std::vector<WeakComposition> out;
    std::vector<int> gamma(static_cast<size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int part, int row) {
        if (part > alpha.length()) {
            out.emplace_back(gamma);
            return;
        }
        for (int r = row; r <= len - (alpha.length() - part); ++r) {
            if (alpha.part(part) <= beta.part(r)) {
                gamma[static_cast<size_t>(r - 1)] = alpha.part(part);
                rec(part + 1, r + 1);
                gamma[static_cast<size_t>(r - 1)] = 0;
            }
        }
    };
    rec(1, 1);
    return out;
}

// Backtracking enumeration of LR fillings of one skew diagram with the
// given content, in column-word order so the lattice condition and the
// triples close over determined cells.
void enumerate_lr_fillings(const SkewShape& shape, const Partition& lambda, int sentinel,
                           std::vector<LRWitness>& out) {
    const bool reverse = sentinel != 0;
    const int values = lambda.length();
    std::vector<int> quota(static_cast<size_t>(values));
    for (int v = 1; v <= values; ++v)
        quota[static_cast<size_t>(v - 1)] =
            reverse ? lambda.part(values - v + 1) : lambda.part(v);
    if (shape.size() != lambda.weight()) return;

    // fill order = column word order
    std::vector<Cell> order;
    for (int c = 1; c <= shape.max_row_length(); ++c) {
        if (reverse) {
            for (int r = shape.rows(); r >= 1; --r)
                if (shape.contains_cell(r, c)) order.emplace_back(r, c);
        } else {
            for (int r = 1; r <= shape.rows(); ++r)
                if (shape.contains_cell(r, c)) order.emplace_back(r, c);
        }
    }

    std::vector<std::vector<int>> grid(static_cast<size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        grid[static_cast<size_t>(r - 1)].assign(
            static_cast<size_t>(shape.row_length(r)), 0);
    std::vector<int> count(static_cast<size_t>(values) + 2, 0);

    auto value_at = [&](int r, int c) -> int {
        if (c == 0) return sentinel;
        if (r < 1 || r > shape.rows() || c > shape.row_length(r)) return -1;  // absent
        if (c <= shape.inner_length(r)) return sentinel;
        return grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    };

    auto check = [&](int r, int c, int v) {
        // row condition
        if (c >= 2 && c > shape.inner_length(r) + 1) {
            int left = value_at(r, c - 1);
            if (reverse ? left <= v : left >= v) return false;
        }
        // lattice prefix condition
        if (reverse) {
            if (v + 1 <= values &&
                count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v + 1)])
                return false;
        } else {
            if (v >= 2 && count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v - 1)])
                return false;
        }
        // triples closing at this cell: the current cell plays b against
        // every other row, and c against upper rows whose b cell is
        // structurally settled
        for (int other = 1; other <= shape.rows(); ++other) {
            if (other == r) continue;
            const bool r_above = reverse ? r < other : r > other;
            const int br = shape.row_length(r), bo = shape.row_length(other);
            if (r_above && br >= bo) {
                // type A with (r, c) = b; c cell at (other, c)
                if (c <= bo) {
                    int a = value_at(r, c - 1), cc = value_at(other, c);
                    if (cc > 0 || cc == sentinel)
                        if (!lr_triple_ok(a, v, cc, sentinel)) return false;
                }
            } else if (!r_above && bo < br) {
                // type B with (r, c) = b; c cell at (other, c - 1)
                if (c <= bo + 1) {
                    int a = value_at(r, c - 1), cc = value_at(other, c - 1);
                    if (!lr_triple_ok(a, v, cc, sentinel)) return false;
                }
            }
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
            for (int r = 1; r <= shape.rows(); ++r)
                for (int c = shape.inner_length(r) + 1; c <= shape.row_length(r); ++c)
                    rows[static_cast<size_t>(r - 1)].push_back(
                        grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]);
            Filling filling({reverse ? Family::SSRRT : Family::SSYRT, false}, shape,
                            std::move(rows));
            out.push_back({std::move(filling), lambda});
            return;
        }
        auto [r, c] = order[idx];
        for (int v = 1; v <= values; ++v) {
            if (count[static_cast<size_t>(v)] >= quota[static_cast<size_t>(v - 1)]) continue;
            if (!check(r, c, v)) continue;
            grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
            ++count[static_cast<size_t>(v)];
            rec(idx + 1);
            --count[static_cast<size_t>(v)];
            grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
        }
    };
    rec(0);
}

std::vector<LRWitness> enumerate_rule(const Composition& alpha, const Partition& lambda,
                                      const Composition& beta, int sentinel) {
    std::vector<LRWitness> out;
    if (beta.weight() != alpha.weight() + lambda.weight()) return out;
    for (const WeakComposition& gamma : zero_placements(alpha, beta)) {
        std::vector<LRWitness> found;
        enumerate_lr_fillings(SkewShape(beta, gamma), lambda, sentinel, found);
        for (auto& w : found) {
            // safety net: re-check against the full rule
            if (sentinel == 0 ? !is_lr_skew_ssyrt(w.filling) : !is_reverse_lr(w.filling))
                throw std::logic_error("enumerated filling fails the LR rule");
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

std::vector<LRWitness> enumerate_lr(const Composition& alpha, const Partition& lambda,
                                    const Composition& beta) {
    return enumerate_rule(alpha, lambda, beta, 0);
}

std::vector<LRWitness> enumerate_reverse_lr(const Composition& alpha,
                                            const Partition& lambda,
                                            const Composition& beta) {
    return enumerate_rule(alpha, lambda, beta, kInf);
}

Coeff lr_count(const Composition& alpha, const Partition& lambda, const Composition& beta) {
    return static_cast<Coeff>(enumerate_lr(alpha, lambda, beta).size());
}

std::map<Composition, Coeff> lr_coefficients(const Composition& alpha,
                                             const Partition& lambda) {
    std::map<Composition, Coeff> out;
    for (const Composition& beta : compositions_of(alpha.weight() + lambda.weight())) {
        Coeff d = lr_count(alpha, lambda, beta);
        if (d != 0) out.emplace(beta, d);
    }
    return out;
}

DoubleWordResult double_word_insertion(const Filling& u, const Filling& s) {
    if (u.kind().family != Family::SSYRT || !u.shape().is_straight())
        throw std::invalid_argument("the insertion tableau must be a straight SSYRT");
    if (s.kind().family != Family::RowStrictSSYT || !s.shape().is_straight())
        throw std::invalid_argument("the record source must be a row-strict SSYT");
    std::vector<int> sparts = s.shape().outer().parts();
    for (size_t i = 1; i < sparts.size(); ++i)
        if (sparts[i] > sparts[i - 1])
            throw std::invalid_argument("the record source must have partition shape");

    DoubleWordResult out;
    // read both tableaux by columns, display top to bottom, left to right;
    // the top word letter of a cell is its column index
    for (int c = 1; c <= s.shape().max_row_length(); ++c)
        for (int r = s.shape().rows(); r >= 1; --r)
            if (s.shape().contains_cell(r, c)) {
                out.top_word.push_back(c);
                out.bottom_word.push_back(s.entry(r, c));
            }

    Filling v = u;
    // star rows mirror v's rows; 0 marks an original cell of u
    std::vector<std::vector<int>> stars;
    for (const auto& row : u.rows())
        stars.emplace_back(row.size(), 0);

    for (size_t t = 0; t < out.bottom_word.size(); ++t) {
        InsertionResult step = insert(v, out.bottom_word[t]);
        auto [r, c] = step.new_cell;
        if (c == 1)
            stars.insert(stars.begin() + (r - 1), std::vector<int>{out.top_word[t]});
        else
            stars[static_cast<size_t>(r - 1)].push_back(out.top_word[t]);
        v = std::move(step.tableau);
    }

    // split the star grid into inner shape and labels
    std::vector<int> inner;
    std::vector<std::vector<int>> labels;
    for (const auto& row : stars) {
        int lead = 0;
        std::vector<int> entries;
        for (int x : row) {
            if (x == 0) {
                if (!entries.empty())
                    throw std::logic_error("star cells do not form a row prefix");
                ++lead;
            } else {
                entries.push_back(x);
            }
        }
        inner.push_back(lead);
        labels.push_back(std::move(entries));
    }

    // content of the witness is the conjugate of the record shape
    Partition lambda = Partition(sparts).conjugate();
    Filling witness({Family::SSYRT, false},
                    SkewShape(v.shape().outer(), WeakComposition(inner)),
                    std::move(labels));
    out.v = std::move(v);
    out.witness = {std::move(witness), std::move(lambda)};
    return out;
}

}  // namespace qsymtab
