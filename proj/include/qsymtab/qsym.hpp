#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsymtab/compositions.hpp"
#include "qsymtab/tableaux.hpp"

namespace qsymtab {

using Coeff = long long;  // all arithmetic is exact and integral

enum class Basis { M, F, R, RS, S, QS };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// A formal integer-linear combination of basis elements indexed by
/// compositions.  Zero coefficients are never stored.
class QSymExpr {
public:
    QSymExpr() = default;
    explicit QSymExpr(Basis basis) : basis_(basis) {}

    static QSymExpr term(Basis basis, const Composition& index, Coeff c = 1);

    Basis basis() const { return basis_; }
    const std::map<Composition, Coeff>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Coeff coeff(const Composition& index) const;
    void add(const Composition& index, Coeff c);
    QSymExpr& operator+=(const QSymExpr& other);  // same basis
    QSymExpr& operator*=(Coeff c);

    /// True when every index has the same weight; the common weight.
    bool homogeneous() const;
    int degree() const;

    std::string str() const;  // e.g. "F(2,2,1) + F(2,1,2)"

    friend bool operator==(const QSymExpr&, const QSymExpr&) = default;

private:
    Basis basis_ = Basis::F;
    std::map<Composition, Coeff> terms_;
};

/// An integer-linear combination of Schur functions.
class SymExpr {
public:
    SymExpr() = default;
    static SymExpr term(const Partition& index, Coeff c = 1);

    const std::map<Partition, Coeff>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    void add(const Partition& index, Coeff c);
    bool homogeneous() const;
    int degree() const;
    std::string str() const;

    friend bool operator==(const SymExpr&, const SymExpr&) = default;

private:
    std::map<Partition, Coeff> terms_;
};

/// An exact polynomial in a fixed number of variables, stored as a map
/// from exponent vectors to integer coefficients.
class MonomialPoly {
public:
    MonomialPoly() = default;
    explicit MonomialPoly(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<std::vector<int>, Coeff>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Coeff coeff(const std::vector<int>& exps) const;
    void add(const std::vector<int>& exps, Coeff c);

    MonomialPoly& operator+=(const MonomialPoly& other);
    MonomialPoly operator*(const MonomialPoly& other) const;
    MonomialPoly& operator*=(Coeff c);

    int degree() const;  // max total degree, 0 for the zero polynomial
    std::string str() const;

    friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

private:
    int vars_ = 0;
    std::map<std::vector<int>, Coeff> terms_;
};

/// An integer tensor over pairs of fundamental-basis indices.
class TensorExpr {
public:
    TensorExpr() = default;

    const std::map<std::pair<Composition, Composition>, Coeff>& terms() const {
        return terms_;
    }
    bool zero() const { return terms_.empty(); }
    Coeff coeff(const Composition& left, const Composition& right) const;
    void add(const Composition& left, const Composition& right, Coeff c);
    TensorExpr& operator+=(const TensorExpr& other);

    std::string str() const;

    friend bool operator==(const TensorExpr&, const TensorExpr&) = default;

private:
    std::map<std::pair<Composition, Composition>, Coeff> terms_;
};

// --- expansions into the fundamental basis ---

/// Expands a single basis element into fundamental quasisymmetric
/// functions via its generating tableau family: SSYRT reverse descents
/// for R, SSRRT left descents for RS, SSYCT weak-left descents for S and
/// SSRCT weak-right descents for QS.  F maps to itself and M routes
/// through the refinement expansion.
QSymExpr expand_in_F(Basis basis, const Composition& index);

/// F-expansion of a skew Young row-strict function via standard skew
/// SSYRT (the combinatorial route of skew_R).
QSymExpr expand_in_F_skew(const SkewShape& shape);

/// Linear extension of expand_in_F to whole expressions.
QSymExpr expand_in_F(const QSymExpr& e);

// --- basis conversions ---

/// F-to-M refinement expansion.
QSymExpr to_M(const QSymExpr& e);

/// M-to-F conversion by inclusion-exclusion over refinements.
QSymExpr M_to_F(const QSymExpr& e);

/// Reads the monomial-basis coefficients off a quasisymmetric polynomial
/// in at least deg(p) variables; throws std::invalid_argument if p is
/// not quasisymmetric or has too few variables.
QSymExpr monomials_to_M(const MonomialPoly& p);

/// Expresses an F-expression in the R basis by solving against the
/// uni-triangular transition matrix, degree by degree.
QSymExpr F_to_R(const QSymExpr& e);

// --- polynomial realizations ---

MonomialPoly to_monomials(const QSymExpr& e, int vars);
MonomialPoly to_monomials(const SymExpr& e, int vars);
MonomialPoly schur_to_monomials(const Partition& lambda, int vars);
MonomialPoly skew_schur_to_monomials(const Partition& lambda, const Partition& mu, int vars);

/// Checks that all monomial coefficient classes agree under support
/// shifts.  Requires vars >= degree for a faithful answer and throws an
/// inconclusive error otherwise.
bool is_quasisymmetric(const MonomialPoly& p);

// --- Hopf structure on the fundamental basis ---

/// Coproduct of an F-expression: each F_alpha splits over the |alpha|+1
/// concatenation and near-concatenation factorizations.
TensorExpr coproduct(const QSymExpr& e);

/// omega(F_alpha) = F of the complementary composition, extended linearly.
QSymExpr omega(const QSymExpr& e);

/// Antipode S(F_alpha) = (-1)^{|alpha|} F of the complement.
QSymExpr antipode(const QSymExpr& e);

/// x_i -> x_{k+1-i} on exponent vectors.
MonomialPoly reverse_variables(const MonomialPoly& p);

// --- skew functions ---

enum class SkewRoute { Combinatorial, Hopf };

/// Skew function R_{alpha//beta} in the F basis.  The combinatorial route
/// sums over standard skew SSYRT; the Hopf route reads the coefficient of
/// R_beta in the left tensor factors of the coproduct of R_alpha.
QSymExpr skew_R(const Composition& alpha, const Composition& beta, SkewRoute route);

// --- transition matrices ---

struct TransitionMatrix {
    int n = 0;
    std::vector<Composition> row_order;  // declared total order
    std::vector<Composition> col_order;  // complements in the same order
    std::vector<std::vector<Coeff>> entries;

    Coeff at(int i, int j) const { return entries[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    bool upper_unitriangular() const;
};

/// The R-to-F transition matrix in homogeneous degree n; cached.
const TransitionMatrix& transition_matrix_R_to_F(int n);

// --- products ---

/// Multiplies a quasisymmetric expression by a Schur expression through
/// exact monomial arithmetic and decomposes the result in the R basis.
QSymExpr product_and_decompose(const QSymExpr& a, const SymExpr& b);

// --- Schur sums ---

struct SchurSumCheck {
    MonomialPoly schur_side;
    MonomialPoly tableau_side;
    bool equal() const { return schur_side == tableau_side; }
};

/// s_lambda versus the sum of R_alpha over shape(alpha) = lambda'.
SchurSumCheck schur_sums(const Partition& lambda, int vars);

/// s_{lambda'/mu'} versus the sum of skew functions over all skew
/// composition shapes rearranging lambda/mu.
SchurSumCheck schur_sums_skew(const Partition& lambda, const Partition& mu, int vars);

/// All skew composition shapes whose rows rearrange the rows of
/// lambda/mu (pairs of inner offset and outer length).
std::vector<SkewShape> skew_rearrangements(const Partition& lambda, const Partition& mu);

/// All compositions whose underlying partition is lambda.
std::vector<Composition> compositions_with_shape(const Partition& lambda);

std::ostream& operator<<(std::ostream& os, const QSymExpr& e);
std::ostream& operator<<(std::ostream& os, const MonomialPoly& p);
std::ostream& operator<<(std::ostream& os, const TensorExpr& t);

}  // namespace qsymtab
