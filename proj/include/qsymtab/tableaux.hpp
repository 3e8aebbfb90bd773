#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsymtab/compositions.hpp"

namespace qsymtab {

/// The six tableau families.  SSYRT/SSYCT/SSYT/RowStrictSSYT display in
/// French convention (row 1 at the bottom), SSRRT/SSRCT in English (row 1
/// at the top).  Internally row i always means part i of the outer shape;
/// only rendering and the notion of "above" in triple checks differ.
enum class Family { SSYRT, SSRRT, SSRCT, SSYCT, SSYT, RowStrictSSYT };

struct TableauKind {
    Family family = Family::SSYRT;
    bool standard = false;

    auto operator<=>(const TableauKind&) const = default;
};

bool is_french(Family f);
/// Reverse families (SSRRT, SSRCT) treat absent cells as zero and inner
/// cells as infinity; the Young families use the opposite convention.
bool is_reverse(Family f);
std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A cell value as seen by the defining conditions: a positive entry, or
/// one of the two sentinels with Zero < any entry < Infinity.
class Entry {
public:
    enum class Kind { Zero, Finite, Infinity };

    static Entry zero() { return Entry(Kind::Zero, 0); }
    static Entry infinity() { return Entry(Kind::Infinity, 0); }
    static Entry finite(int v);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_sentinel() const { return kind_ != Kind::Finite; }
    int value() const;

    friend bool operator==(const Entry& a, const Entry& b) = default;
    friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
        if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
        return a.value_ <=> b.value_;
    }

    std::string str() const;

private:
    Entry(Kind k, int v) : kind_(k), value_(v) {}
    Kind kind_;
    int value_;
};

using Cell = std::pair<int, int>;  // (row, column), 1-indexed

/// A filling of a skew composition diagram.  Only the cells strictly
/// between the inner and outer shapes carry entries; rows_ stores them
/// row by row (row i holds outer_i - inner_i values).  Probing any other
/// position yields the kind-appropriate sentinel.
class Filling {
public:
    Filling() = default;
    Filling(TableauKind kind, SkewShape shape, std::vector<std::vector<int>> rows);

    /// The filling with no cells.
    static Filling empty(TableauKind kind);

    const TableauKind& kind() const { return kind_; }
    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Sentinel-aware probe at any (row, col) >= (1, 1).
    Entry at(int row, int col) const;
    /// The entry of a real cell; throws std::out_of_range otherwise.
    int entry(int row, int col) const;

    int size() const;  // number of real cells
    bool is_standard() const;
    /// content()[v-1] = number of cells holding v, up to the max entry.
    std::vector<int> content() const;
    /// Exponent map of the weight monomial x^T.
    std::map<int, int> weight() const;
    /// All real cells, row-major from row 1.
    std::vector<Cell> cells() const;
    /// The cell holding the given value; requires a standard filling.
    Cell cell_of(int value) const;

    Filling with_kind(TableauKind kind) const;

    auto operator<=>(const Filling&) const = default;

private:
    TableauKind kind_;
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// --- validation ---

struct Violation {
    std::string rule;
    std::vector<Cell> cells;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::string str() const;
};

/// Checks the defining conditions of the filling's kind: the row
/// condition, the first-column condition, and the triple condition with
/// the kind's sentinels.  With kind.standard set, also checks that the
/// entries are exactly 1..n.
ValidationReport validate(const Filling& f);

// --- enumeration ---

/// All valid fillings with entries in [max_entry], ordered
/// lexicographically by their standard reading words.
std::vector<Filling> enumerate_fillings(TableauKind kind, const SkewShape& shape, int max_entry);

/// All standard fillings (entries 1..n, each once), in the same order.
std::vector<Filling> enumerate_standard(TableauKind kind, const SkewShape& shape);

// --- reading words and standardization ---

enum class ReadingOrder { Standard, Column };

/// Standard order: columns right to left, each read from display top to
/// bottom except the leftmost column, which is read bottom to top.
/// Column order: columns left to right, each read display bottom to top.
/// Sentinel cells are skipped.
std::vector<int> reading_word(const Filling& f, ReadingOrder order);

/// The cells of f in the given reading order.
std::vector<Cell> reading_cells(const Filling& f, ReadingOrder order);

/// Standardization. SSYRT fillings use the standard reading order; row
/// strict tableaux replace the ones with 1..k_1 in their own column
/// reading order, then the twos, and so on.
Filling standardize(const Filling& f);

// --- descent data ---

struct DescentData {
    std::set<int> reverse_descents;  // i with i+1 strictly right of i
    std::set<int> left_descents;     // i with i+1 strictly left of i
    Composition comp_reverse;
    Composition comp_left;
};

DescentData descent_data(const Filling& f);

// --- restriction and gluing ---

struct Restriction {
    Filling lower;  // labels <= i, straight shape
    Filling upper;  // labels > i, shifted down by i, skew shape
};

/// Splits a standard straight-shape SSYRT at label i.
Restriction restrict(const Filling& t, int i);

/// Inverse of restrict: shifts the upper filling's entries by the weight
/// of the lower shape and takes the union.  The shapes must compose.
Filling glue(const Filling& lower, const Filling& upper);

// --- saturated chains ---

/// Builds the standard SSYRT associated to a saturated chain in L_c:
/// label i occupies the cell added in the i-th cover step.
Filling chain_syrt(const std::vector<Composition>& chain);

/// Inverse: reads the chain of shapes off a standard skew SSYRT.
std::vector<Composition> syrt_chain(const Filling& t);

// --- rendering ---

/// ASCII rendering in the kind's display convention, inner cells as '*'.
std::string render(const Filling& f);

std::ostream& operator<<(std::ostream& os, const Filling& f);

}  // namespace qsymtab
