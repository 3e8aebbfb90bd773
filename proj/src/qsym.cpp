#include "qsymtab/qsym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsymtab {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::R: return "R";
        case Basis::RS: return "RS";
        case Basis::S: return "S";
        case Basis::QS: return "QS";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    for (Basis b : {Basis::M, Basis::F, Basis::R, Basis::RS, Basis::S, Basis::QS})
        if (basis_name(b) == name) return b;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

// --- QSymExpr ---

QSymExpr QSymExpr::term(Basis basis, const Composition& index, Coeff c) {
    QSymExpr e(basis);
    e.add(index, c);
    return e;
}

Coeff QSymExpr::coeff(const Composition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? 0 : it->second;
}

void QSymExpr::add(const Composition& index, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& other) {
    if (other.zero()) return *this;
    if (zero()) basis_ = other.basis_;
    if (basis_ != other.basis_)
        throw std::invalid_argument("cannot add expressions in different bases");
    for (const auto& [idx, c] : other.terms_) add(idx, c);
    return *this;
}

QSymExpr& QSymExpr::operator*=(Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
}

bool QSymExpr::homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.weight();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.weight() == d; });
}

int QSymExpr::degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, idx.weight());
    return d;
}

namespace {

void append_term(std::ostringstream& os, bool& first, Coeff c, const std::string& symbol) {
    if (first) {
        if (c < 0) os << "-";
        first = false;
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    Coeff a = c < 0 ? -c : c;
    if (a != 1 || symbol.empty()) {
        os << a;
        if (!symbol.empty()) os << " ";
    }
    os << symbol;
}

}  // namespace

std::string QSymExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(os, first, it->second, basis_name(basis_) + it->first.str());
    return os.str();
}

// --- SymExpr ---

SymExpr SymExpr::term(const Partition& index, Coeff c) {
    SymExpr e;
    e.add(index, c);
    return e;
}

void SymExpr::add(const Partition& index, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

bool SymExpr::homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.weight();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.weight() == d; });
}

int SymExpr::degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, idx.weight());
    return d;
}

std::string SymExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(os, first, it->second, "s" + it->first.str());
    return os.str();
}

// --- MonomialPoly ---

Coeff MonomialPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void MonomialPoly::add(const std::vector<int>& exps, Coeff c) {
    if (c == 0) return;
    if (static_cast<int>(exps.size()) != vars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& other) {
    if (other.zero()) return *this;
    if (zero() && terms_.empty() && vars_ == 0) vars_ = other.vars_;
    if (vars_ != other.vars_)
        throw std::invalid_argument("cannot add polynomials in different variable counts");
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("cannot multiply polynomials in different variable counts");
    MonomialPoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            std::vector<int> e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add(e, c1 * c2);
        }
    return out;
}

MonomialPoly& MonomialPoly::operator*=(Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

int MonomialPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::string MonomialPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "x" + std::to_string(i + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        append_term(os, first, it->second, mono);
    }
    return os.str();
}

// --- TensorExpr ---

Coeff TensorExpr::coeff(const Composition& left, const Composition& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? 0 : it->second;
}

void TensorExpr::add(const Composition& left, const Composition& right, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& other) {
    for (const auto& [idx, c] : other.terms_) add(idx.first, idx.second, c);
    return *this;
}

std::string TensorExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(os, first, it->second,
                    "F" + it->first.first.str() + " (x) F" + it->first.second.str());
    return os.str();
}

// --- expansions ---

namespace {

// Descent sets of the four composition-tableau families, by column
// comparison of consecutive entries.
enum class DescentRule { StrictlyRight, StrictlyLeft, WeaklyLeft, WeaklyRight };

Composition descent_composition(const Filling& t, DescentRule rule) {
    const int n = t.size();
    std::set<int> descents;
    for (int i = 1; i < n; ++i) {
        int ci = t.cell_of(i).second;
        int cn = t.cell_of(i + 1).second;
        bool in = false;
        switch (rule) {
            case DescentRule::StrictlyRight: in = cn > ci; break;
            case DescentRule::StrictlyLeft: in = cn < ci; break;
            case DescentRule::WeaklyLeft: in = cn <= ci; break;
            case DescentRule::WeaklyRight: in = cn >= ci; break;
        }
        if (in) descents.insert(i);
    }
    return comp_of_subset(descents, n);
}

QSymExpr tableau_expansion(Family family, DescentRule rule, const SkewShape& shape) {
    QSymExpr out(Basis::F);
    for (const Filling& t : enumerate_standard({family, true}, shape))
        out.add(descent_composition(t, rule), 1);
    return out;
}

std::vector<Composition> refinements_of(const Composition& alpha) {
    std::vector<Composition> out{Composition()};
    for (int i = 1; i <= alpha.length(); ++i) {
        std::vector<Composition> next;
        for (const Composition& head : out)
            for (const Composition& piece : compositions_of(alpha.part(i)))
                next.push_back(concat(head, piece));
        out = std::move(next);
    }
    return out;
}

}  // namespace

QSymExpr expand_in_F(Basis basis, const Composition& index) {
    switch (basis) {
        case Basis::F: return QSymExpr::term(Basis::F, index);
        case Basis::M: return M_to_F(QSymExpr::term(Basis::M, index));
        case Basis::R:
            return tableau_expansion(Family::SSYRT, DescentRule::StrictlyRight,
                                     SkewShape(index));
        case Basis::RS:
            return tableau_expansion(Family::SSRRT, DescentRule::StrictlyLeft,
                                     SkewShape(index));
        case Basis::S:
            return tableau_expansion(Family::SSYCT, DescentRule::WeaklyLeft,
                                     SkewShape(index));
        case Basis::QS:
            return tableau_expansion(Family::SSRCT, DescentRule::WeaklyRight,
                                     SkewShape(index));
    }
    throw std::invalid_argument("unknown basis tag");
}

QSymExpr expand_in_F_skew(const SkewShape& shape) {
    return tableau_expansion(Family::SSYRT, DescentRule::StrictlyRight, shape);
}

QSymExpr expand_in_F(const QSymExpr& e) {
    QSymExpr out(Basis::F);
    for (const auto& [idx, c] : e.terms()) {
        QSymExpr part = expand_in_F(e.basis(), idx);
        part *= c;
        out += part;
    }
    return out;
}

// --- basis conversions ---

QSymExpr to_M(const QSymExpr& e) {
    if (e.basis() == Basis::M) return e;
    QSymExpr f = e.basis() == Basis::F ? e : expand_in_F(e);
    QSymExpr out(Basis::M);
    for (const auto& [alpha, c] : f.terms())
        for (const Composition& beta : refinements_of(alpha)) out.add(beta, c);
    return out;
}

QSymExpr M_to_F(const QSymExpr& e) {
    if (e.basis() != Basis::M)
        throw std::invalid_argument("M_to_F expects an M-basis expression");
    QSymExpr out(Basis::F);
    for (const auto& [alpha, c] : e.terms())
        for (const Composition& beta : refinements_of(alpha)) {
            int sign = (beta.length() - alpha.length()) % 2 == 0 ? 1 : -1;
            out.add(beta, c * sign);
        }
    return out;
}

QSymExpr monomials_to_M(const MonomialPoly& p) {
    QSymExpr out(Basis::M);
    for (const auto& [exps, c] : p.terms()) {
        std::vector<int> packed;
        bool leading = true;
        for (int e : exps) {
            if (e > 0) {
                if (!leading) {
                    packed.clear();
                    break;  // not the packed representative of its class
                }
                packed.push_back(e);
            } else if (!packed.empty()) {
                leading = false;
            }
        }
        if (leading || exps.empty() ||
            std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; }))
            out.add(Composition(packed), c);
    }
    if (to_monomials(out, p.vars()) != p)
        throw std::invalid_argument("polynomial is not quasisymmetric in " +
                                    std::to_string(p.vars()) + " variables");
    return out;
}

QSymExpr F_to_R(const QSymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("F_to_R expects an F-basis expression");
    QSymExpr out(Basis::R);
    std::map<int, std::map<Composition, Coeff>> by_degree;
    for (const auto& [idx, c] : e.terms()) by_degree[idx.weight()][idx] = c;
    for (const auto& [n, coeffs] : by_degree) {
        const TransitionMatrix& t = transition_matrix_R_to_F(n);
        const size_t dim = t.row_order.size();
        std::vector<Coeff> c(dim, 0), r(dim, 0);
        for (size_t j = 0; j < dim; ++j) {
            auto it = coeffs.find(t.col_order[j]);
            if (it != coeffs.end()) c[j] = it->second;
        }
        // back-substitution against the upper uni-triangular matrix
        for (size_t j = 0; j < dim; ++j) {
            Coeff v = c[j];
            for (size_t i = 0; i < j; ++i) v -= r[i] * t.entries[i][j];
            r[j] = v;
        }
        for (size_t j = 0; j < dim; ++j) out.add(t.row_order[j], r[j]);
    }
    return out;
}

// --- polynomial realizations ---

namespace {

MonomialPoly monomial_basis_poly(const Composition& alpha, int vars) {
    MonomialPoly out(vars);
    const int len = alpha.length();
    if (len > vars) return out;
    std::vector<int> support(static_cast<size_t>(len));
    std::function<void(int, int)> rec = [&](int pos, int minVar) {
        if (pos == len) {
            std::vector<int> exps(static_cast<size_t>(vars), 0);
            for (int t = 0; t < len; ++t)
                exps[static_cast<size_t>(support[static_cast<size_t>(t)])] =
                    alpha.part(t + 1);
            out.add(exps, 1);
            return;
        }
        for (int v = minVar; v < vars - (len - pos - 1); ++v) {
            support[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    if (len == 0)
        out.add(std::vector<int>(static_cast<size_t>(vars), 0), 1);
    else
        rec(0, 0);
    return out;
}

MonomialPoly tableau_weight_sum(TableauKind kind, const SkewShape& shape, int vars) {
    MonomialPoly out(vars);
    for (const Filling& t : enumerate_fillings(kind, shape, vars)) {
        std::vector<int> exps(static_cast<size_t>(vars), 0);
        for (const auto& [v, m] : t.weight()) exps[static_cast<size_t>(v - 1)] = m;
        out.add(exps, 1);
    }
    return out;
}

}  // namespace

MonomialPoly to_monomials(const QSymExpr& e, int vars) {
    if (vars < 0) throw std::invalid_argument("variable count must be nonnegative");
    QSymExpr m = to_M(e);
    MonomialPoly out(vars);
    for (const auto& [alpha, c] : m.terms()) {
        MonomialPoly part = monomial_basis_poly(alpha, vars);
        part *= c;
        out += part;
    }
    return out;
}

MonomialPoly to_monomials(const SymExpr& e, int vars) {
    MonomialPoly out(vars);
    for (const auto& [lambda, c] : e.terms()) {
        MonomialPoly part = schur_to_monomials(lambda, vars);
        part *= c;
        out += part;
    }
    return out;
}

MonomialPoly schur_to_monomials(const Partition& lambda, int vars) {
    return tableau_weight_sum({Family::SSYT, false}, SkewShape(lambda.as_composition()),
                              vars);
}

MonomialPoly skew_schur_to_monomials(const Partition& lambda, const Partition& mu,
                                     int vars) {
    if (!partition_contains(mu, lambda))
        throw std::invalid_argument("mu must be contained in lambda");
    return tableau_weight_sum(
        {Family::SSYT, false},
        SkewShape(lambda.as_composition(), WeakComposition(mu.parts())), vars);
}

bool is_quasisymmetric(const MonomialPoly& p) {
    if (p.zero()) return true;
    if (p.vars() < p.degree())
        throw std::invalid_argument(
            "quasisymmetry check is inconclusive with fewer variables than the degree");
    // group coefficients by the composition of the exponent support
    std::map<Composition, std::pair<Coeff, long long>> classes;  // coeff, count
    for (const auto& [exps, c] : p.terms()) {
        std::vector<int> packed;
        for (int e : exps)
            if (e > 0) packed.push_back(e);
        Composition cls(packed);
        auto [it, inserted] = classes.emplace(cls, std::make_pair(c, 1));
        if (!inserted) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [cls, info] : classes) {
        // each class must cover every increasing support: C(vars, len) terms
        long long expect = 1;
        for (int i = 0; i < cls.length(); ++i)
            expect = expect * (p.vars() - i) / (i + 1);
        if (info.second != expect) return false;
    }
    return true;
}

// --- Hopf structure ---

TensorExpr coproduct(const QSymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("coproduct expects an F-basis expression");
    TensorExpr out;
    for (const auto& [alpha, c] : e.terms())
        for (const Deconcatenation& d : deconcatenations(alpha))
            out.add(d.left, d.right, c);
    return out;
}

QSymExpr omega(const QSymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("omega expects an F-basis expression");
    QSymExpr out(Basis::F);
    for (const auto& [alpha, c] : e.terms()) out.add(complement(alpha), c);
    return out;
}

QSymExpr antipode(const QSymExpr& e) {
    if (e.basis() != Basis::F)
        throw std::invalid_argument("antipode expects an F-basis expression");
    QSymExpr out(Basis::F);
    for (const auto& [alpha, c] : e.terms())
        out.add(complement(alpha), alpha.weight() % 2 == 0 ? c : -c);
    return out;
}

MonomialPoly reverse_variables(const MonomialPoly& p) {
    MonomialPoly out(p.vars());
    for (const auto& [exps, c] : p.terms())
        out.add(std::vector<int>(exps.rbegin(), exps.rend()), c);
    return out;
}

// --- skew functions ---

QSymExpr skew_R(const Composition& alpha, const Composition& beta, SkewRoute route) {
    if (route == SkewRoute::Combinatorial) {
        if (!contains(beta, alpha)) return QSymExpr(Basis::F);
        return expand_in_F_skew(SkewShape(alpha, beta));
    }
    // Hopf route: Delta R_alpha in F (x) F, left factors rewritten in the
    // R basis, coefficient of R_beta (x) (.) read off.
    TensorExpr delta = coproduct(expand_in_F(Basis::R, alpha));
    std::map<Composition, QSymExpr> left_by_right;
    for (const auto& [pair, c] : delta.terms())
        left_by_right[pair.second].add(pair.first, c);
    QSymExpr out(Basis::F);
    for (auto& [right, left] : left_by_right) {
        QSymExpr in_R = F_to_R(QSymExpr(Basis::F) += left);
        out.add(right, in_R.coeff(beta));
    }
    return out;
}

// --- transition matrices ---

bool TransitionMatrix::upper_unitriangular() const {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i][i] != 1) return false;
        for (size_t j = 0; j < i; ++j)
            if (entries[i][j] != 0) return false;
    }
    return true;
}

const TransitionMatrix& transition_matrix_R_to_F(int n) {
    static std::mutex mutex;
    static std::map<int, TransitionMatrix> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    TransitionMatrix t;
    t.n = n;
    t.row_order = compositions_of(n);
    for (const Composition& alpha : t.row_order) t.col_order.push_back(complement(alpha));
    const size_t dim = t.row_order.size();
    t.entries.assign(dim, std::vector<Coeff>(dim, 0));
    for (size_t i = 0; i < dim; ++i) {
        QSymExpr r = expand_in_F(Basis::R, t.row_order[i]);
        for (size_t j = 0; j < dim; ++j) t.entries[i][j] = r.coeff(t.col_order[j]);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// --- products ---

QSymExpr product_and_decompose(const QSymExpr& a, const SymExpr& b) {
    if (!a.homogeneous() || !b.homogeneous())
        throw std::invalid_argument("product_and_decompose expects homogeneous inputs");
    const int k = a.degree() + b.degree();
    MonomialPoly product = to_monomials(a, k) * to_monomials(b, k);
    QSymExpr result = F_to_R(M_to_F(monomials_to_M(product)));
    if (to_monomials(result, k) != product)
        throw std::logic_error("R-basis decomposition failed to reproduce the product");
    return result;
}

// --- Schur sums ---

std::vector<Composition> compositions_with_shape(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

SchurSumCheck schur_sums(const Partition& lambda, int vars) {
    SchurSumCheck check;
    check.schur_side = schur_to_monomials(lambda, vars);
    check.tableau_side = MonomialPoly(vars);
    for (const Composition& alpha : compositions_with_shape(lambda.conjugate()))
        check.tableau_side += to_monomials(expand_in_F(Basis::R, alpha), vars);
    return check;
}

std::vector<SkewShape> skew_rearrangements(const Partition& lambda, const Partition& mu) {
    if (!partition_contains(mu, lambda))
        throw std::invalid_argument("mu must be contained in lambda");
    std::vector<std::pair<int, int>> rows;  // (inner offset, outer length)
    for (int i = 1; i <= lambda.length(); ++i) rows.emplace_back(mu.part(i), lambda.part(i));
    std::sort(rows.begin(), rows.end());
    std::vector<SkewShape> out;
    do {
        std::vector<int> outer, inner;
        for (const auto& [in, len] : rows) {
            inner.push_back(in);
            outer.push_back(len);
        }
        out.emplace_back(Composition(outer), WeakComposition(inner));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

SchurSumCheck schur_sums_skew(const Partition& lambda, const Partition& mu, int vars) {
    SchurSumCheck check;
    check.schur_side = skew_schur_to_monomials(lambda.conjugate(), mu.conjugate(), vars);
    check.tableau_side = MonomialPoly(vars);
    for (const SkewShape& shape : skew_rearrangements(lambda, mu))
        check.tableau_side += to_monomials(expand_in_F_skew(shape), vars);
    return check;
}

std::ostream& operator<<(std::ostream& os, const QSymExpr& e) { return os << e.str(); }
std::ostream& operator<<(std::ostream& os, const MonomialPoly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const TensorExpr& t) { return os << t.str(); }

}  // namespace qsymtab
