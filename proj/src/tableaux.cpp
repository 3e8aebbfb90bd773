#include "qsymtab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsymtab {

bool is_french(Family f) {
    return f == Family::SSYRT || f == Family::SSYCT || f == Family::SSYT ||
           f == Family::RowStrictSSYT;
}

bool is_reverse(Family f) { return f == Family::SSRRT || f == Family::SSRCT; }

std::string family_name(Family f) {
    switch (f) {
        case Family::SSYRT: return "SSYRT";
        case Family::SSRRT: return "SSRRT";
        case Family::SSRCT: return "SSRCT";
        case Family::SSYCT: return "SSYCT";
        case Family::SSYT: return "SSYT";
        case Family::RowStrictSSYT: return "RowStrictSSYT";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::SSYRT, Family::SSRRT, Family::SSRCT, Family::SSYCT,
                     Family::SSYT, Family::RowStrictSSYT})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown tableau family '" + name + "'");
}

// --- Entry ---

Entry Entry::finite(int v) {
    if (v < 1) throw std::invalid_argument("entries must be positive");
    return Entry(Kind::Finite, v);
}

int Entry::value() const {
    if (!is_finite()) throw std::logic_error("sentinel entry has no value");
    return value_;
}

std::string Entry::str() const {
    switch (kind_) {
        case Kind::Zero: return "0*";
        case Kind::Infinity: return "inf";
        case Kind::Finite: return std::to_string(value_);
    }
    return "?";
}

// --- Filling ---

Filling::Filling(TableauKind kind, SkewShape shape, std::vector<std::vector<int>> rows)
    : kind_(kind), shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("row count does not match the shape");
    for (int i = 1; i <= shape_.rows(); ++i) {
        const auto& row = rows_[static_cast<size_t>(i - 1)];
        if (static_cast<int>(row.size()) != shape_.row_length(i) - shape_.inner_length(i))
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " does not match the shape");
        for (int v : row)
            if (v < 1) throw std::invalid_argument("entries must be positive");
    }
}

Filling Filling::empty(TableauKind kind) { return Filling(kind, SkewShape(), {}); }

Entry Filling::at(int row, int col) const {
    if (row < 1 || col < 1) throw std::out_of_range("cells are 1-indexed");
    const bool rev = is_reverse(kind_.family);
    if (row > shape_.rows() || col > shape_.row_length(row))
        return rev ? Entry::zero() : Entry::infinity();  // absent
    if (col <= shape_.inner_length(row))
        return rev ? Entry::infinity() : Entry::zero();  // inner
    return Entry::finite(entry(row, col));
}

int Filling::entry(int row, int col) const {
    if (!shape_.contains_cell(row, col))
        throw std::out_of_range("no cell at (" + std::to_string(row) + "," +
                                std::to_string(col) + ")");
    return rows_[static_cast<size_t>(row - 1)]
                [static_cast<size_t>(col - 1 - shape_.inner_length(row))];
}

int Filling::size() const { return shape_.size(); }

bool Filling::is_standard() const {
    std::vector<int> c = content();
    if (static_cast<int>(c.size()) != size()) return false;
    return std::all_of(c.begin(), c.end(), [](int k) { return k == 1; });
}

std::vector<int> Filling::content() const {
    std::vector<int> counts;
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > static_cast<int>(counts.size())) counts.resize(static_cast<size_t>(v), 0);
            ++counts[static_cast<size_t>(v - 1)];
        }
    return counts;
}

std::map<int, int> Filling::weight() const {
    std::map<int, int> w;
    for (const auto& row : rows_)
        for (int v : row) ++w[v];
    return w;
}

std::vector<Cell> Filling::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = shape_.inner_length(r) + 1; c <= shape_.row_length(r); ++c)
            out.emplace_back(r, c);
    return out;
}

Cell Filling::cell_of(int value) const {
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = shape_.inner_length(r) + 1; c <= shape_.row_length(r); ++c)
            if (entry(r, c) == value) return {r, c};
    throw std::out_of_range("value " + std::to_string(value) + " not present");
}

Filling Filling::with_kind(TableauKind kind) const { return Filling(kind, shape_, rows_); }

// --- validation ---

std::string ValidationReport::str() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.rule << " at";
        for (const auto& [r, c] : v.cells) os << " (" << r << "," << c << ")";
        os << '\n';
    }
    return os.str();
}

namespace {

// Row condition between horizontally adjacent entries.
bool row_pair_ok(Family f, int left, int right) {
    switch (f) {
        case Family::SSYRT:
        case Family::RowStrictSSYT: return left < right;
        case Family::SSYCT:
        case Family::SSYT: return left <= right;
        case Family::SSRRT: return left > right;
        case Family::SSRCT: return left >= right;
    }
    return false;
}

// First-column condition between real entries at rows r < r' (composition
// kinds).  In internal indexing all four kinds increase with the row
// index, weakly for the row-strict kinds and strictly otherwise.
bool column_one_pair_ok(Family f, int lower, int higher) {
    switch (f) {
        case Family::SSYRT:
        case Family::SSRRT: return lower <= higher;
        case Family::SSYCT:
        case Family::SSRCT: return lower < higher;
        default: return true;
    }
}

// Column condition for the two straight Young tableau kinds.
bool column_pair_ok(Family f, int below, int above) {
    if (f == Family::SSYT) return below < above;
    return below <= above;  // RowStrictSSYT
}

// The triple condition: a and b sit in the display-upper row at columns
// k and k+1, c in the display-lower row at column k+1.  The two reverse
// kinds constrain c only when it is a real entry; the Young column-strict
// rule likewise fires only on real c.
bool triple_ok(Family f, const Entry& a, const Entry& b, const Entry& c) {
    switch (f) {
        case Family::SSYRT: return !(a < c) || b <= c;
        case Family::SSYCT: return !c.is_finite() || !(a <= c) || b < c;
        case Family::SSRRT: return !(c < a) || c <= b;
        case Family::SSRCT: return !c.is_finite() || !(c <= a) || c < b;
        default: return true;
    }
}

bool has_triple_condition(Family f) {
    return f == Family::SSYRT || f == Family::SSYCT || f == Family::SSRRT ||
           f == Family::SSRCT;
}

}  // namespace

ValidationReport validate(const Filling& f) {
    ValidationReport report;
    const Family fam = f.kind().family;
    const SkewShape& sh = f.shape();
    auto flag = [&](std::string rule, std::vector<Cell> cells) {
        report.ok = false;
        report.violations.push_back({std::move(rule), std::move(cells)});
    };

    // row condition on adjacent real cells
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = sh.inner_length(r) + 2; c <= sh.row_length(r); ++c)
            if (!row_pair_ok(fam, f.entry(r, c - 1), f.entry(r, c)))
                flag("row condition", {{r, c - 1}, {r, c}});

    if (has_triple_condition(fam)) {
        // first-column condition on real cells
        int prev_row = 0;
        for (int r = 1; r <= sh.rows(); ++r) {
            if (!sh.contains_cell(r, 1)) continue;
            if (prev_row && !column_one_pair_ok(fam, f.entry(prev_row, 1), f.entry(r, 1)))
                flag("first-column condition", {{prev_row, 1}, {r, 1}});
            prev_row = r;
        }
        // triple condition over all (upper row, lower row, k)
        const int m = sh.max_row_length();
        for (int upper = 1; upper <= sh.rows(); ++upper)
            for (int lower = 1; lower <= sh.rows(); ++lower) {
                if (upper == lower) continue;
                const bool above = is_french(fam) ? upper > lower : upper < lower;
                if (!above) continue;
                for (int k = 1; k < m; ++k) {
                    Entry a = f.at(upper, k);
                    Entry b = f.at(upper, k + 1);
                    Entry c = f.at(lower, k + 1);
                    if (!triple_ok(fam, a, b, c))
                        flag("triple condition",
                             {{upper, k}, {upper, k + 1}, {lower, k + 1}});
                }
            }
    } else {
        // plain column conditions for SSYT / RowStrictSSYT
        for (int r = 2; r <= sh.rows(); ++r)
            for (int c = 1; c <= sh.row_length(r); ++c)
                if (sh.contains_cell(r, c) && sh.contains_cell(r - 1, c) &&
                    !column_pair_ok(fam, f.entry(r - 1, c), f.entry(r, c)))
                    flag("column condition", {{r - 1, c}, {r, c}});
    }

    if (f.kind().standard && !f.is_standard())
        flag("standard condition", {});

    return report;
}

// --- enumeration ---

namespace {

// Backtracking enumerator.  Cells are filled column by column from the
// left, each column from the display bottom upward, so that every
// constraint involving the new cell and previously determined or
// structural cells can be checked immediately.
class Enumerator {
public:
    Enumerator(TableauKind kind, const SkewShape& shape, int max_entry, bool standard)
        : kind_(kind), shape_(shape), max_entry_(max_entry), standard_(standard) {
        const bool french = is_french(kind.family);
        for (int c = 1; c <= shape_.max_row_length(); ++c) {
            if (french)
                for (int r = 1; r <= shape_.rows(); ++r)
                    maybe_add(r, c);
            else
                for (int r = shape_.rows(); r >= 1; --r)
                    maybe_add(r, c);
        }
        grid_.resize(static_cast<size_t>(shape_.rows()));
        for (int r = 1; r <= shape_.rows(); ++r)
            grid_[static_cast<size_t>(r - 1)].assign(
                static_cast<size_t>(shape_.row_length(r)), 0);
        if (standard_) used_.assign(static_cast<size_t>(max_entry_) + 1, false);
    }

    std::vector<Filling> run() {
        results_.clear();
        place(0);
        std::sort(results_.begin(), results_.end(),
                  [](const Filling& a, const Filling& b) {
                      return reading_word(a, ReadingOrder::Standard) <
                             reading_word(b, ReadingOrder::Standard);
                  });
        return std::move(results_);
    }

private:
    void maybe_add(int r, int c) {
        if (shape_.contains_cell(r, c)) order_.emplace_back(r, c);
    }

    // nullopt = a real cell whose value is not yet determined
    std::optional<Entry> probe(int r, int c) const {
        const bool rev = is_reverse(kind_.family);
        if (r < 1 || r > shape_.rows() || c > shape_.row_length(r))
            return rev ? Entry::zero() : Entry::infinity();
        if (c <= shape_.inner_length(r)) return rev ? Entry::infinity() : Entry::zero();
        int v = grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
        if (v == 0) return std::nullopt;
        return Entry::finite(v);
    }

    bool check(int r, int c, int v) const {
        const Family fam = kind_.family;
        // row condition against the left neighbour
        if (c >= 2) {
            auto left = probe(r, c - 1);
            if (left && left->is_finite() && !row_pair_ok(fam, left->value(), v))
                return false;
        }
        if (!has_triple_condition(fam)) {
            // column conditions, SSYT / RowStrictSSYT
            auto below = probe(r - 1, c);
            if (r >= 2 && shape_.contains_cell(r - 1, c) && below && below->is_finite() &&
                !column_pair_ok(fam, below->value(), v))
                return false;
            return true;
        }
        const bool french = is_french(fam);
        // first-column condition against the nearest determined neighbour
        if (c == 1) {
            if (french) {
                for (int r2 = r - 1; r2 >= 1; --r2)
                    if (shape_.contains_cell(r2, 1)) {
                        if (!column_one_pair_ok(fam, value_at(r2, 1), v)) return false;
                        break;
                    }
            } else {
                for (int r2 = r + 1; r2 <= shape_.rows(); ++r2)
                    if (shape_.contains_cell(r2, 1)) {
                        if (!column_one_pair_ok(fam, v, value_at(r2, 1))) return false;
                        break;
                    }
            }
        }
        // triples with the new cell in the b role: the c cells in this
        // column below it (display-wise) are already determined
        if (c >= 2) {
            Entry a = *probe(r, c - 1);  // column c-1 is complete
            Entry b = Entry::finite(v);
            for (int lower = 1; lower <= shape_.rows(); ++lower) {
                if (lower == r) continue;
                const bool above = french ? r > lower : r < lower;
                if (!above) continue;
                auto cv = probe(lower, c);
                if (!cv) continue;  // real cell filled later; checked then
                if (!triple_ok(fam, a, b, *cv)) return false;
            }
        }
        // triples with the new cell in the c role and a structurally
        // sentinel b cell; real b cells above are checked at their turn
        {
            Entry cv = Entry::finite(v);
            for (int upper = 1; upper <= shape_.rows(); ++upper) {
                if (upper == r) continue;
                const bool above = french ? upper > r : upper < r;
                if (!above) continue;
                auto b = probe(upper, c);
                if (!b || b->is_finite()) continue;
                auto a = probe(upper, c - 1);  // determined: previous column
                if (c == 1 || !a) continue;
                if (!triple_ok(fam, *a, *b, cv)) return false;
            }
        }
        return true;
    }

    int value_at(int r, int c) const {
        return grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    }

    void place(size_t idx) {
        if (idx == order_.size()) {
            emit();
            return;
        }
        auto [r, c] = order_[idx];
        for (int v = 1; v <= max_entry_; ++v) {
            if (standard_ && used_[static_cast<size_t>(v)]) continue;
            if (!check(r, c, v)) continue;
            grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
            if (standard_) used_[static_cast<size_t>(v)] = true;
            place(idx + 1);
            if (standard_) used_[static_cast<size_t>(v)] = false;
            grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
        }
    }

    void emit() {
        std::vector<std::vector<int>> rows(static_cast<size_t>(shape_.rows()));
        for (int r = 1; r <= shape_.rows(); ++r)
            for (int c = shape_.inner_length(r) + 1; c <= shape_.row_length(r); ++c)
                rows[static_cast<size_t>(r - 1)].push_back(value_at(r, c));
        results_.emplace_back(kind_, shape_, std::move(rows));
    }

    TableauKind kind_;
    SkewShape shape_;
    int max_entry_;
    bool standard_;
    std::vector<Cell> order_;
    std::vector<std::vector<int>> grid_;
    std::vector<bool> used_;
    std::vector<Filling> results_;
};

}  // namespace

std::vector<Filling> enumerate_fillings(TableauKind kind, const SkewShape& shape,
                                        int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
    if (kind.standard) {
        if (max_entry < shape.size()) return {};
        return enumerate_standard(kind, shape);
    }
    if (shape.size() > 0 && max_entry == 0) return {};
    return Enumerator(kind, shape, max_entry, false).run();
}

std::vector<Filling> enumerate_standard(TableauKind kind, const SkewShape& shape) {
    TableauKind k{kind.family, true};
    return Enumerator(k, shape, shape.size(), true).run();
}

// --- reading words ---

std::vector<Cell> reading_cells(const Filling& f, ReadingOrder order) {
    const SkewShape& sh = f.shape();
    const bool french = is_french(f.kind().family);
    const int m = sh.max_row_length();
    std::vector<Cell> out;
    auto add_column = [&](int c, bool ascending) {
        if (ascending) {
            for (int r = 1; r <= sh.rows(); ++r)
                if (sh.contains_cell(r, c)) out.emplace_back(r, c);
        } else {
            for (int r = sh.rows(); r >= 1; --r)
                if (sh.contains_cell(r, c)) out.emplace_back(r, c);
        }
    };
    if (order == ReadingOrder::Standard) {
        // right to left, display top to bottom, leftmost column reversed
        for (int c = m; c >= 2; --c) add_column(c, !french);
        if (m >= 1) add_column(1, french);
    } else {
        // left to right, display bottom to top
        for (int c = 1; c <= m; ++c) add_column(c, french);
    }
    return out;
}

std::vector<int> reading_word(const Filling& f, ReadingOrder order) {
    std::vector<int> word;
    for (const auto& [r, c] : reading_cells(f, order)) word.push_back(f.entry(r, c));
    return word;
}

// --- standardization ---

Filling standardize(const Filling& f) {
    const Family fam = f.kind().family;
    std::vector<Cell> cells;
    if (fam == Family::SSYRT) {
        cells = reading_cells(f, ReadingOrder::Standard);
    } else if (fam == Family::RowStrictSSYT) {
        // up each column, right to left
        const SkewShape& sh = f.shape();
        for (int c = sh.max_row_length(); c >= 1; --c)
            for (int r = 1; r <= sh.rows(); ++r)
                if (sh.contains_cell(r, c)) cells.emplace_back(r, c);
    } else {
        throw std::invalid_argument("standardize supports SSYRT and RowStrictSSYT only");
    }

    std::vector<int> counts = f.content();
    std::vector<int> offsets(counts.size() + 1, 0);
    for (size_t i = 0; i < counts.size(); ++i)
        offsets[i + 1] = offsets[i] + counts[i];

    std::vector<std::vector<int>> rows(f.rows().size());
    for (size_t i = 0; i < rows.size(); ++i)
        rows[i].assign(f.rows()[i].size(), 0);
    std::vector<int> seen(counts.size(), 0);
    for (const auto& [r, c] : cells) {
        int v = f.entry(r, c);
        int label = offsets[static_cast<size_t>(v - 1)] + (++seen[static_cast<size_t>(v - 1)]);
        rows[static_cast<size_t>(r - 1)]
            [static_cast<size_t>(c - 1 - f.shape().inner_length(r))] = label;
    }
    return Filling({fam, true}, f.shape(), std::move(rows));
}

// --- descent data ---

DescentData descent_data(const Filling& f) {
    if (!f.is_standard())
        throw std::invalid_argument("descent data requires a standard filling");
    const int n = f.size();
    DescentData d;
    for (int i = 1; i < n; ++i) {
        int ci = f.cell_of(i).second;
        int cn = f.cell_of(i + 1).second;
        if (cn > ci) d.reverse_descents.insert(i);
        if (cn < ci) d.left_descents.insert(i);
    }
    d.comp_reverse = comp_of_subset(d.reverse_descents, n);
    d.comp_left = comp_of_subset(d.left_descents, n);
    return d;
}

// --- restriction and gluing ---

Restriction restrict(const Filling& t, int i) {
    if (t.kind().family != Family::SSYRT || !t.shape().is_straight() || !t.is_standard())
        throw std::invalid_argument("restrict expects a standard straight-shape SSYRT");
    const int n = t.size();
    if (i < 0 || i > n) throw std::invalid_argument("restriction index out of range");

    const SkewShape& sh = t.shape();
    std::vector<int> prefix(static_cast<size_t>(sh.rows()), 0);
    std::vector<std::vector<int>> lower_rows(static_cast<size_t>(sh.rows()));
    std::vector<std::vector<int>> upper_rows(static_cast<size_t>(sh.rows()));
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c) {
            int v = t.entry(r, c);
            if (v <= i) {
                prefix[static_cast<size_t>(r - 1)] = c;
                lower_rows[static_cast<size_t>(r - 1)].push_back(v);
            } else {
                upper_rows[static_cast<size_t>(r - 1)].push_back(v - i);
            }
        }

    int lower_len = sh.rows();
    while (lower_len > 0 && prefix[static_cast<size_t>(lower_len - 1)] == 0) --lower_len;
    std::vector<int> lower_parts(prefix.begin(), prefix.begin() + lower_len);
    for (int p : lower_parts)
        if (p == 0) throw std::logic_error("restriction produced an interior empty row");
    lower_rows.resize(static_cast<size_t>(lower_len));

    Filling lower({Family::SSYRT, true}, SkewShape(Composition(lower_parts)),
                  std::move(lower_rows));
    Filling upper({Family::SSYRT, true},
                  SkewShape(sh.outer(), WeakComposition(prefix)), std::move(upper_rows));
    return {std::move(lower), std::move(upper)};
}

Filling glue(const Filling& lower, const Filling& upper) {
    if (lower.kind().family != Family::SSYRT || upper.kind().family != Family::SSYRT)
        throw std::invalid_argument("glue expects SSYRT fillings");
    if (!lower.shape().is_straight())
        throw std::invalid_argument("glue expects a straight-shape lower filling");
    const SkewShape& up = upper.shape();
    for (int r = 1; r <= up.rows(); ++r) {
        int expected = r <= lower.shape().rows() ? lower.shape().row_length(r) : 0;
        if (up.inner_length(r) != expected)
            throw std::invalid_argument("shapes do not compose in row " + std::to_string(r));
    }
    if (lower.shape().rows() > up.rows())
        throw std::invalid_argument("lower shape has more rows than the upper shape");

    const int shift = lower.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(up.rows()));
    for (int r = 1; r <= up.rows(); ++r) {
        auto& row = rows[static_cast<size_t>(r - 1)];
        if (r <= lower.shape().rows())
            row = lower.rows()[static_cast<size_t>(r - 1)];
        for (int v : upper.rows()[static_cast<size_t>(r - 1)]) row.push_back(v + shift);
    }
    bool standard = lower.kind().standard && upper.kind().standard;
    Filling out({Family::SSYRT, standard}, SkewShape(up.outer()), std::move(rows));
    if (auto report = validate(out); !report.ok)
        throw std::invalid_argument("glued filling is not an SSYRT:\n" + report.str());
    return out;
}

// --- saturated chains ---

Filling chain_syrt(const std::vector<Composition>& chain) {
    if (chain.empty()) throw std::invalid_argument("chain must be nonempty");
    for (size_t t = 1; t < chain.size(); ++t)
        if (lc_relation(chain[t - 1], chain[t]) != LcRelation::Covers)
            throw std::invalid_argument("chain is not saturated at step " + std::to_string(t));

    const Composition& outer = chain.back();
    const Composition& inner = chain.front();
    SkewShape shape(outer, inner);
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        rows[static_cast<size_t>(r - 1)].assign(
            static_cast<size_t>(shape.row_length(r) - shape.inner_length(r)), 0);

    for (size_t t = 1; t < chain.size(); ++t) {
        const Composition& prev = chain[t - 1];
        const Composition& next = chain[t];
        int r, c;
        if (next.length() == prev.length() + 1) {
            r = next.length();
            c = 1;
        } else {
            r = 0;
            for (int j = 1; j <= prev.length(); ++j)
                if (next.part(j) != prev.part(j)) {
                    r = j;
                    break;
                }
            c = next.part(r);
        }
        rows[static_cast<size_t>(r - 1)]
            [static_cast<size_t>(c - 1 - shape.inner_length(r))] = static_cast<int>(t);
    }
    return Filling({Family::SSYRT, true}, std::move(shape), std::move(rows));
}

std::vector<Composition> syrt_chain(const Filling& t) {
    if (t.kind().family != Family::SSYRT || !t.is_standard())
        throw std::invalid_argument("chain extraction expects a standard SSYRT");
    std::vector<Composition> chain;
    std::vector<int> current = t.shape().inner().parts();
    chain.push_back(t.shape().inner().collapse());
    if (chain.front().length() != static_cast<int>(
            std::count_if(current.begin(), current.end(), [](int p) { return p > 0; })) ||
        !std::is_partitioned(current.begin(), current.end(), [](int p) { return p > 0; }))
        throw std::invalid_argument("inner shape is not a leading composition");

    int len = chain.front().length();
    for (int label = 1; label <= t.size(); ++label) {
        auto [r, c] = t.cell_of(label);
        if (r == len + 1 && c == 1) {
            ++len;
        } else if (r > len || c != current[static_cast<size_t>(r - 1)] + 1) {
            throw std::invalid_argument("filling does not trace a chain at label " +
                                        std::to_string(label));
        }
        current[static_cast<size_t>(r - 1)] += 1;
        Composition next(std::vector<int>(current.begin(), current.begin() + len));
        if (lc_relation(chain.back(), next) != LcRelation::Covers)
            throw std::invalid_argument("filling does not trace a saturated chain at label " +
                                        std::to_string(label));
        chain.push_back(std::move(next));
    }
    return chain;
}

// --- rendering ---

std::string render(const Filling& f) {
    const SkewShape& sh = f.shape();
    size_t width = 1;
    for (const auto& row : f.rows())
        for (int v : row) width = std::max(width, std::to_string(v).size());

    auto render_row = [&](int r) {
        std::string line;
        for (int c = 1; c <= sh.row_length(r); ++c) {
            std::string cell =
                sh.contains_cell(r, c) ? std::to_string(f.entry(r, c)) : "*";
            line += std::string(width - cell.size(), ' ') + cell;
            if (c < sh.row_length(r)) line += ' ';
        }
        return line;
    };

    std::ostringstream os;
    if (is_french(f.kind().family)) {
        for (int r = sh.rows(); r >= 1; --r) os << render_row(r) << '\n';
    } else {
        for (int r = 1; r <= sh.rows(); ++r) os << render_row(r) << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Filling& f) { return os << render(f); }

}  // namespace qsymtab
