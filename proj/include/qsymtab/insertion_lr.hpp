#pragma once

#include <map>
#include <vector>

#include "qsymtab/compositions.hpp"
#include "qsymtab/qsym.hpp"
#include "qsymtab/tableaux.hpp"

namespace qsymtab {

struct InsertionResult {
    Filling tableau;
    Cell new_cell;                // the unique cell of the result not in the input
    std::vector<Cell> bump_path;  // scan hits in order, ending at new_cell
};

/// Schensted-style insertion into a straight-shape SSYRT or SSRRT.
/// Sentinel cells appended at the row ends participate in the scan;
/// those in column 2 are never hits, so length-one rows only grow
/// through the first-column fallback.
InsertionResult insert(const Filling& t, int x);

struct LatticeProperties {
    bool lattice = false;
    bool reverse_lattice = false;
    bool regular_reverse = false;
};

/// Prefix-counting predicates on words.
LatticeProperties lattice_predicates(const std::vector<int>& word);

/// Littlewood-Richardson validity of a skew filling with a virtual
/// column 0 of zeros: rows strictly increase, the column word is a
/// lattice word, and every type A and type B triple holds.
bool is_lr_skew_ssyrt(const Filling& l);

/// Ferreira's reverse variant: column 0 of infinities, strictly
/// decreasing rows, regular reverse lattice column word.
bool is_reverse_lr(const Filling& l);

/// A Littlewood-Richardson filling together with its content.
struct LRWitness {
    Filling filling;  // shape beta//gamma with gamma collapsing to alpha
    Partition content;
};

/// All LR skew SSYRT of shape beta/alpha and content lambda, aggregated
/// over the zero placements gamma with gamma+ = alpha.
std::vector<LRWitness> enumerate_lr(const Composition& alpha, const Partition& lambda,
                                    const Composition& beta);

/// The reverse-rule witnesses of shape beta/alpha and content rev(lambda).
std::vector<LRWitness> enumerate_reverse_lr(const Composition& alpha,
                                            const Partition& lambda,
                                            const Composition& beta);

/// Number of LR witnesses for one outer shape.
Coeff lr_count(const Composition& alpha, const Partition& lambda, const Composition& beta);

/// The full coefficient map D^beta_{alpha,lambda} over all outer shapes
/// of weight |alpha| + |lambda|; zero entries are omitted.
std::map<Composition, Coeff> lr_coefficients(const Composition& alpha,
                                             const Partition& lambda);

struct DoubleWordResult {
    std::vector<int> top_word;
    std::vector<int> bottom_word;
    Filling v;          // the insertion tableau
    LRWitness witness;  // the star tableau
};

/// The pair construction: reads the double word off (S, S_lambda) by
/// columns, inserts the bottom word into U, and records each new cell in
/// a star tableau labelled by the top word.
DoubleWordResult double_word_insertion(const Filling& u, const Filling& s);

}  // namespace qsymtab
