#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qsymtab {

/// A composition: a finite sequence of positive integers.  The empty
/// composition is the unique composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    /// Parses "(1,2,1)" or "1,2,1"; "()" and "" give the empty composition.
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_.at(static_cast<size_t>(i - 1)); }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    Composition reversed() const;
    std::string str() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// A weak composition: nonnegative parts.  Collapsing (dropping zeros)
/// yields a composition.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);
    WeakComposition(std::initializer_list<int> parts);

    static WeakComposition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // zero beyond the stored length
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;

    Composition collapse() const;
    WeakComposition padded(int len) const;
    std::string str() const;

    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> parts_;
};

/// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // zero beyond the stored length
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    Composition as_composition() const { return Composition(parts_); }
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Skew composition shape: outer composition with a zero-padded weak inner
/// shape.  Covers both the strong-inner diagrams of straight/skew tableaux
/// and the zero-placement diagrams of the Littlewood-Richardson rule.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Composition outer);
    SkewShape(Composition outer, WeakComposition inner);
    SkewShape(Composition outer, const Composition& inner);

    const Composition& outer() const { return outer_; }
    /// Inner shape, zero-padded to the length of the outer shape.
    const WeakComposition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int row_length(int i) const { return outer_.part(i); }
    int inner_length(int i) const { return inner_.part(i); }
    int max_row_length() const;

    /// Number of cells between the inner and outer shapes.
    int size() const { return outer_.weight() - inner_.weight(); }
    bool is_straight() const { return inner_.weight() == 0; }
    bool contains_cell(int row, int col) const;

    std::string str() const;

    auto operator<=>(const SkewShape&) const = default;

private:
    Composition outer_;
    WeakComposition inner_;
};

// --- subsets of [n-1] and compositions of n ---

/// comp(S) for S = {s_1 < ... < s_k} a subset of [n-1]:
/// (s_1, s_2-s_1, ..., n-s_k).  The empty set gives (n); n = 0 gives ().
Composition comp_of_subset(const std::set<int>& subset, int n);

/// Inverse of comp_of_subset: the partial sums of all but the last part.
std::set<int> subset_of_comp(const Composition& alpha);

/// Complementary composition: comp([n-1] \ subset_of_comp(beta), n).
Composition complement(const Composition& beta);

// --- the Young composition poset L_c ---

enum class LcRelation { Covers, StrictlyBelow, IncomparableOrEqual };

/// Compositions covering alpha in L_c: append a part 1, or add 1 to the
/// rightmost part of any given size.
std::vector<Composition> lc_covers_of(const Composition& alpha);

/// Cover/strictly-below classification of (alpha, beta) in L_c.
LcRelation lc_relation(const Composition& alpha, const Composition& beta);

/// Containment: l(alpha) <= l(beta) and alpha_i <= beta_i for all i.
bool contains(const Composition& alpha, const Composition& beta);

// --- (de)concatenation ---

struct Deconcatenation {
    Composition left;
    Composition right;
    bool near;  // true when the cut falls inside a part (beta (.) gamma)
};

/// All |alpha|+1 splits of alpha into (left, right) by weight of the left
/// piece; each is either a concatenation or a near-concatenation.
std::vector<Deconcatenation> deconcatenations(const Composition& alpha);

/// Concatenation beta.gamma.
Composition concat(const Composition& beta, const Composition& gamma);

/// Near-concatenation beta (.) gamma: the last part of beta absorbs the
/// first part of gamma.  Empty operands act as identities.
Composition near_concat(const Composition& beta, const Composition& gamma);

// --- partition statistics on compositions ---

/// The underlying partition: parts sorted decreasingly.
Partition shape_of(const Composition& alpha);

/// True when alpha can be obtained from beta by summing consecutive parts.
bool refines(const Composition& beta, const Composition& alpha);

/// Dominance order on partitions of equal weight; throws on weight mismatch.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// True when mu_i <= lambda_i for all i.
bool partition_contains(const Partition& mu, const Partition& lambda);

// --- the declared total order ---

/// Total order used everywhere a matrix ordering is needed: underlying
/// partitions lexicographically descending, ties broken by lexicographic
/// order on the composition itself.
bool composition_order_less(const Composition& a, const Composition& b);

/// All compositions of n in the declared total order.
std::vector<Composition> compositions_of(int n);

/// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const WeakComposition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const SkewShape& s);

}  // namespace qsymtab
