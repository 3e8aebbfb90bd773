#include "qsymtab/bijections.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <stdexcept>

namespace qsymtab {

namespace {

// Working grid for the column-packing procedures.  Slot values are
// positive entries or 0 for an inner-shape marker; unset slots are empty.
class PackGrid {
public:
    explicit PackGrid(int rows) : grid_(static_cast<size_t>(rows)) {}

    int rows() const { return static_cast<int>(grid_.size()); }
    bool occupied(int r, int c) const {
        const auto& row = grid_[static_cast<size_t>(r - 1)];
        return c >= 1 && c <= static_cast<int>(row.size()) &&
               row[static_cast<size_t>(c - 1)].has_value();
    }
    int value(int r, int c) const {
        return *grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    }

    void set(int r, int c, int v) {
        auto& row = grid_[static_cast<size_t>(r - 1)];
        if (static_cast<int>(row.size()) < c) row.resize(static_cast<size_t>(c));
        if (row[static_cast<size_t>(c - 1)])
            throw std::logic_error("packing placed two entries in one cell");
        if (c > 1 && !row[static_cast<size_t>(c - 2)])
            throw std::logic_error("packing left a gap in a row");
        row[static_cast<size_t>(c - 1)] = v;
    }

    /// Assembles a Filling; 0 markers become the inner shape.
    Filling to_filling(TableauKind kind) const {
        std::vector<int> outer, inner;
        std::vector<std::vector<int>> rows;
        for (const auto& row : grid_) {
            outer.push_back(static_cast<int>(row.size()));
            int stars = 0;
            std::vector<int> entries;
            for (const auto& slot : row) {
                if (!slot) throw std::logic_error("packing left an unset slot");
                if (*slot == 0) {
                    if (!entries.empty())
                        throw std::logic_error("inner marker to the right of an entry");
                    ++stars;
                } else {
                    entries.push_back(*slot);
                }
            }
            inner.push_back(stars);
            rows.push_back(std::move(entries));
        }
        while (!outer.empty() && outer.back() == 0) {
            outer.pop_back();
            inner.pop_back();
            rows.pop_back();
        }
        return Filling(kind, SkewShape(Composition(outer), WeakComposition(inner)),
                       std::move(rows));
    }

private:
    std::vector<std::vector<std::optional<int>>> grid_;
};

// Row entry lists of a filling, inner cells as 0 markers.  Under
// conjugation these are exactly the columns of the transposed filling.
std::vector<std::vector<int>> rows_with_markers(const Filling& f) {
    const SkewShape& sh = f.shape();
    std::vector<std::vector<int>> rows(static_cast<size_t>(sh.rows()));
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c)
            rows[static_cast<size_t>(r - 1)].push_back(
                sh.contains_cell(r, c) ? f.entry(r, c) : 0);
    return rows;
}

// Column entry lists of a filling, inner cells as 0 markers.
std::vector<std::vector<int>> columns_with_markers(const Filling& f) {
    const SkewShape& sh = f.shape();
    std::vector<std::vector<int>> cols(static_cast<size_t>(sh.max_row_length()));
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c)
            cols[static_cast<size_t>(c - 1)].push_back(
                sh.contains_cell(r, c) ? f.entry(r, c) : 0);
    return cols;
}

// Rebuilds a filling whose column k holds cols[k-1] from row 1 upward.
// Column lengths must be weakly decreasing so rows stay contiguous.
Filling from_columns(const std::vector<std::vector<int>>& cols, TableauKind kind) {
    for (size_t k = 1; k < cols.size(); ++k)
        if (cols[k].size() > cols[k - 1].size())
            throw std::invalid_argument("column lengths must weakly decrease");
    int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> body(static_cast<size_t>(rows));
    for (int r = 1; r <= rows; ++r) {
        int len = 0, stars = 0;
        for (size_t k = 0; k < cols.size(); ++k) {
            if (static_cast<int>(cols[k].size()) < r) break;
            int v = cols[k][static_cast<size_t>(r - 1)];
            ++len;
            if (v == 0) {
                if (!body[static_cast<size_t>(r - 1)].empty())
                    throw std::invalid_argument("inner cells do not form a row prefix");
                ++stars;
            } else {
                body[static_cast<size_t>(r - 1)].push_back(v);
            }
        }
        outer.push_back(len);
        inner.push_back(stars);
    }
    return Filling(kind, SkewShape(Composition(outer), WeakComposition(inner)),
                   std::move(body));
}

// Packs column entry lists into an output grid (0 = inner marker).
// Entries are placed smallest first; an entry lands in the highest
// available cell whose left neighbour is strictly smaller, and a marker
// to the right of a marker.  "Highest" is the display top: the largest
// internal row index for French output, the smallest for English.
Filling pack_columns(const std::vector<std::vector<int>>& columns, TableauKind out_kind) {
    const bool french = is_french(out_kind.family);
    const int rows = columns.empty() ? 0 : static_cast<int>(columns[0].size());
    PackGrid grid(rows);

    for (size_t k = 0; k < columns.size(); ++k) {
        std::vector<int> entries = columns[k];
        std::sort(entries.begin(), entries.end());
        const int col = static_cast<int>(k) + 1;
        for (int e : entries) {
            if (col == 1) {
                int r = 1;
                while (grid.occupied(r, 1)) ++r;
                grid.set(r, 1, e);
                continue;
            }
            auto eligible = [&](int r) {
                if (grid.occupied(r, col) || !grid.occupied(r, col - 1)) return false;
                int left = grid.value(r, col - 1);
                return e == 0 ? left == 0 : left < e;
            };
            int target = 0;
            if (french) {
                for (int r = rows; r >= 1 && !target; --r)
                    if (eligible(r)) target = r;
            } else {
                for (int r = 1; r <= rows && !target; ++r)
                    if (eligible(r)) target = r;
            }
            if (!target)
                throw std::invalid_argument("no admissible cell while packing column " +
                                            std::to_string(col));
            grid.set(target, col, e);
        }
    }
    return grid.to_filling(out_kind);
}

}  // namespace

Filling rho(const Filling& t) {
    if (t.kind().family != Family::RowStrictSSYT)
        throw std::invalid_argument("rho expects a row-strict semistandard Young tableau");
    Filling out = pack_columns(columns_with_markers(t), {Family::SSYRT, t.kind().standard});
    if (out.size() != t.size()) throw std::logic_error("rho changed the cell count");
    return out;
}

Filling rho_inverse(const Filling& f) {
    if (f.kind().family != Family::SSYRT)
        throw std::invalid_argument("rho_inverse expects an SSYRT");
    auto cols = columns_with_markers(f);
    for (auto& col : cols) std::sort(col.begin(), col.end());
    return from_columns(cols, {Family::RowStrictSSYT, f.kind().standard});
}

Filling f_map(const Filling& t, int m) {
    Family from = t.kind().family, to;
    switch (from) {
        case Family::SSRRT: to = Family::SSYRT; break;
        case Family::SSYRT: to = Family::SSRRT; break;
        case Family::SSRCT: to = Family::SSYCT; break;
        case Family::SSYCT: to = Family::SSRCT; break;
        default:
            throw std::invalid_argument("f applies to composition tableau families");
    }
    const SkewShape& sh = t.shape();
    const int l = sh.rows();
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int r = l; r >= 1; --r) {
        outer.push_back(sh.row_length(r));
        inner.push_back(sh.inner_length(r));
        std::vector<int> row;
        for (int v : t.rows()[static_cast<size_t>(r - 1)]) {
            if (v > m)
                throw std::invalid_argument("entry " + std::to_string(v) +
                                            " exceeds the reversal bound " + std::to_string(m));
            row.push_back(m - v + 1);
        }
        rows.push_back(std::move(row));
    }
    bool standard = t.kind().standard && m == t.size();
    return Filling({to, standard}, SkewShape(Composition(outer), WeakComposition(inner)),
                   std::move(rows));
}

Filling h_map(const Filling& s) {
    if (s.kind().family != Family::SSYT)
        throw std::invalid_argument("h expects a semistandard Young tableau");
    // the rows of s are the columns of its conjugate r(s); pack them,
    // inner cells travelling as zero markers
    Filling out = pack_columns(rows_with_markers(s), {Family::SSYRT, s.kind().standard});
    if (out.size() != s.size()) throw std::logic_error("h changed the cell count");
    return out;
}

Filling h_inverse(const Filling& u) {
    if (u.kind().family != Family::SSYRT)
        throw std::invalid_argument("h_inverse expects an SSYRT");
    auto cols = columns_with_markers(u);
    for (auto& col : cols) std::sort(col.begin(), col.end());
    // the sorted columns are the rows of the conjugate SSYT
    return from_columns(rows_with_markers(from_columns(cols, {Family::RowStrictSSYT, false})),
                        {Family::SSYT, u.kind().standard});
}

namespace {

// Shared engine for phi and phi_tilde.  `young` selects per-column
// minima with the strictly-smaller placement rule producing an SSYRT;
// otherwise maxima with strictly-greater producing an SSRRT.  Inner
// cells participate as sentinels and land as the output's inner shape.
Filling phi_engine(const Filling& t, bool young) {
    const SkewShape& sh = t.shape();
    const int star = young ? 0 : INT_MAX;
    std::vector<std::vector<int>> cols(static_cast<size_t>(sh.max_row_length()));
    for (int r = 1; r <= sh.rows(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c)
            cols[static_cast<size_t>(c - 1)].push_back(
                sh.contains_cell(r, c) ? t.entry(r, c) : star);
    for (auto& col : cols) {
        if (young)
            std::sort(col.begin(), col.end());  // minima first
        else
            std::sort(col.begin(), col.end(), std::greater<int>());  // maxima first
    }

    const int out_rows = static_cast<int>(cols.size());
    PackGrid grid(out_rows);
    const bool out_french = young;

    for (size_t depth = 0;; ++depth) {
        // the depth-th extreme entry of each input column, ties processed
        // stably by source column index
        std::vector<int> batch;
        for (const auto& col : cols)
            if (depth < col.size()) batch.push_back(col[depth]);
        if (batch.empty()) break;
        if (young)
            std::stable_sort(batch.begin(), batch.end());
        else
            std::stable_sort(batch.begin(), batch.end(), std::greater<int>());

        const int out_col = static_cast<int>(depth) + 1;
        if (out_col == 1) {
            // weakly increasing with the internal row index; zeros sort
            // below entries and infinities above them
            std::sort(batch.begin(), batch.end());
            for (size_t i = 0; i < batch.size(); ++i)
                grid.set(static_cast<int>(i) + 1, 1, batch[i] == star ? 0 : batch[i]);
            continue;
        }
        for (int e : batch) {
            const bool is_star = e == star;
            auto eligible = [&](int r) {
                if (grid.occupied(r, out_col) || !grid.occupied(r, out_col - 1))
                    return false;
                int left = grid.value(r, out_col - 1);
                if (is_star) return left == 0;
                if (left == 0) return true;  // sentinel neighbour admits any entry
                return young ? left < e : left > e;
            };
            int target = 0;
            if (out_french) {
                for (int r = out_rows; r >= 1 && !target; --r)
                    if (eligible(r)) target = r;
            } else {
                for (int r = 1; r <= out_rows && !target; ++r)
                    if (eligible(r)) target = r;
            }
            if (!target)
                throw std::invalid_argument("no admissible cell in output column " +
                                            std::to_string(out_col));
            grid.set(target, out_col, is_star ? 0 : e);
        }
    }
    Family out_family = young ? Family::SSYRT : Family::SSRRT;
    return grid.to_filling({out_family, t.kind().standard});
}

}  // namespace

Filling phi(const Filling& t) {
    if (t.kind().family != Family::SSRCT)
        throw std::invalid_argument("phi expects an SSRCT");
    return phi_engine(t, false);
}

Filling phi_tilde(const Filling& u) {
    if (u.kind().family != Family::SSYCT)
        throw std::invalid_argument("phi_tilde expects an SSYCT");
    return phi_engine(u, true);
}

}  // namespace qsymtab
