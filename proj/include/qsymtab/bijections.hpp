#pragma once

#include "qsymtab/compositions.hpp"
#include "qsymtab/tableaux.hpp"

namespace qsymtab {

/// Column-packing bijection from row-strict semistandard Young tableaux
/// of partition shape to SSYRT whose shape rearranges the same partition.
Filling rho(const Filling& t);

/// Inverse of rho: sorts each column weakly increasing from the bottom.
Filling rho_inverse(const Filling& f);

/// The diagram-reversing, weight-reversing bijection between the reverse
/// and Young families: row i maps to row l-i+1 and entries to m-e+1.
/// SSRRT <-> SSYRT and SSRCT <-> SSYCT; applies to skew fillings as well.
Filling f_map(const Filling& t, int m);

/// Column-packing bijection from skew SSYT of shape lambda'/mu' to skew
/// SSYRT whose shape rearranges lambda/mu, treating inner cells as zeros.
Filling h_map(const Filling& s);

/// Inverse of h_map: sorts columns (with inner zeros) and conjugates back.
Filling h_inverse(const Filling& u);

/// Conjugation-like map on reverse composition tableaux: per-column
/// maxima form the first column, later columns insert the next-largest
/// entries below strictly greater left neighbours.  Inner cells travel
/// as sentinels, so skew inputs are supported.
Filling phi(const Filling& t);

/// The Young mirror of phi, built from per-column minima.
Filling phi_tilde(const Filling& u);

}  // namespace qsymtab
