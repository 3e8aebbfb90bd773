// Python bindings for the main operations: expansions, coproducts, skew
// functions, transition matrices, enumeration, insertion, the structural
// bijections and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsymtab/bijections.hpp"
#include "qsymtab/compositions.hpp"
#include "qsymtab/insertion_lr.hpp"
#include "qsymtab/qsym.hpp"
#include "qsymtab/tableaux.hpp"
#include "qsymtab/verify.hpp"

namespace py = pybind11;
using namespace qsymtab;

namespace {

using Parts = std::vector<int>;

Filling filling_from_parts(const std::string& kind, const Parts& outer, const Parts& inner,
                           const std::vector<Parts>& rows) {
    return Filling({family_from_name(kind), false},
                   SkewShape(Composition(outer), WeakComposition(inner)), rows);
}

py::dict filling_to_dict(const Filling& f) {
    py::dict d;
    d["kind"] = family_name(f.kind().family);
    d["outer"] = f.shape().outer().parts();
    d["inner"] = f.shape().inner().parts();
    d["rows"] = f.rows();
    return d;
}

Filling filling_from_dict(const py::dict& d) {
    return filling_from_parts(d["kind"].cast<std::string>(), d["outer"].cast<Parts>(),
                              d.contains("inner") ? d["inner"].cast<Parts>() : Parts{},
                              d["rows"].cast<std::vector<Parts>>());
}

py::dict expr_to_dict(const QSymExpr& e) {
    py::dict d;
    for (const auto& [idx, c] : e.terms()) d[py::tuple(py::cast(idx.parts()))] = c;
    return d;
}

py::dict tensor_to_dict(const TensorExpr& t) {
    py::dict d;
    for (const auto& [idx, c] : t.terms()) {
        py::tuple key =
            py::make_tuple(py::tuple(py::cast(idx.first.parts())),
                           py::tuple(py::cast(idx.second.parts())));
        d[key] = c;
    }
    return d;
}

py::dict poly_to_dict(const MonomialPoly& p) {
    py::dict d;
    for (const auto& [exps, c] : p.terms()) d[py::tuple(py::cast(exps))] = c;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Young row-strict quasisymmetric Schur functions";

    // compositions
    m.def("complement", [](const Parts& parts) { return complement(Composition(parts)).parts(); },
          py::arg("composition"));
    m.def("shape_of", [](const Parts& parts) { return shape_of(Composition(parts)).parts(); },
          py::arg("composition"));
    m.def("compositions_of", [](int n) {
        std::vector<Parts> out;
        for (const Composition& c : compositions_of(n)) out.push_back(c.parts());
        return out;
    });
    m.def("lc_covers_of", [](const Parts& alpha) {
        std::vector<Parts> out;
        for (const Composition& c : lc_covers_of(Composition(alpha))) out.push_back(c.parts());
        return out;
    });

    // expansions and polynomials
    m.def("expand_in_f", [](const std::string& basis, const Parts& index) {
        return expr_to_dict(expand_in_F(basis_from_name(basis), Composition(index)));
    }, py::arg("basis"), py::arg("index"));
    m.def("expand_skew_in_f", [](const Parts& outer, const Parts& inner) {
        return expr_to_dict(skew_R(Composition(outer), Composition(inner),
                                   SkewRoute::Combinatorial));
    });
    m.def("to_monomials", [](const std::string& basis, const Parts& index, int vars) {
        return poly_to_dict(to_monomials(expand_in_F(basis_from_name(basis), Composition(index)), vars));
    }, py::arg("basis"), py::arg("index"), py::arg("vars"));
    m.def("schur_to_monomials", [](const Parts& lambda, int vars) {
        return poly_to_dict(schur_to_monomials(Partition(lambda), vars));
    });
    m.def("coproduct_r", [](const Parts& alpha) {
        return tensor_to_dict(coproduct(expand_in_F(Basis::R, Composition(alpha))));
    });
    m.def("omega_f", [](const Parts& alpha) {
        return expr_to_dict(omega(QSymExpr::term(Basis::F, Composition(alpha))));
    });
    m.def("skew_r", [](const Parts& alpha, const Parts& beta, const std::string& route) {
        return expr_to_dict(skew_R(Composition(alpha), Composition(beta),
                                   route == "hopf" ? SkewRoute::Hopf
                                                   : SkewRoute::Combinatorial));
    }, py::arg("alpha"), py::arg("beta"), py::arg("route") = "combinatorial");
    m.def("multiply_r_schur", [](const Parts& alpha, const Parts& lambda) {
        return expr_to_dict(product_and_decompose(
            QSymExpr::term(Basis::R, Composition(alpha)), SymExpr::term(Partition(lambda))));
    });
    m.def("transition_matrix", [](int n) {
        const TransitionMatrix& t = transition_matrix_R_to_F(n);
        std::vector<Parts> rows, cols;
        for (const Composition& c : t.row_order) rows.push_back(c.parts());
        for (const Composition& c : t.col_order) cols.push_back(c.parts());
        return py::make_tuple(rows, cols, t.entries, t.upper_unitriangular());
    });
    m.def("lr_coefficients", [](const Parts& alpha, const Parts& lambda) {
        py::dict d;
        for (const auto& [beta, c] : lr_coefficients(Composition(alpha), Partition(lambda)))
            d[py::tuple(py::cast(beta.parts()))] = c;
        return d;
    });

    // tableaux
    m.def("enumerate_fillings",
          [](const std::string& kind, const Parts& outer, const Parts& inner, int max_entry,
             bool standard) {
              SkewShape shape(Composition(outer), WeakComposition(inner));
              auto fillings = standard
                                  ? enumerate_standard({family_from_name(kind), true}, shape)
                                  : enumerate_fillings({family_from_name(kind), false}, shape,
                                                       max_entry);
              py::list out;
              for (const Filling& f : fillings) out.append(filling_to_dict(f));
              return out;
          },
          py::arg("kind"), py::arg("outer"), py::arg("inner") = Parts{},
          py::arg("max_entry") = 0, py::arg("standard") = false);
    m.def("validate", [](const py::dict& d) {
        auto report = validate(filling_from_dict(d));
        return py::make_tuple(report.ok, report.str());
    });
    m.def("reading_word", [](const py::dict& d, const std::string& order) {
        return reading_word(filling_from_dict(d), order == "column" ? ReadingOrder::Column
                                                                    : ReadingOrder::Standard);
    }, py::arg("tableau"), py::arg("order") = "standard");
    m.def("standardize", [](const py::dict& d) {
        return filling_to_dict(standardize(filling_from_dict(d)));
    });
    m.def("insert", [](const py::dict& d, int x) {
        InsertionResult r = insert(filling_from_dict(d), x);
        py::dict out;
        out["tableau"] = filling_to_dict(r.tableau);
        out["new_cell"] = py::make_tuple(r.new_cell.first, r.new_cell.second);
        py::list path;
        for (auto [row, col] : r.bump_path) path.append(py::make_tuple(row, col));
        out["bump_path"] = path;
        return out;
    });

    // bijections
    m.def("rho", [](const py::dict& d) { return filling_to_dict(rho(filling_from_dict(d))); });
    m.def("rho_inverse",
          [](const py::dict& d) { return filling_to_dict(rho_inverse(filling_from_dict(d))); });
    m.def("f_map", [](const py::dict& d, int mbound) {
        return filling_to_dict(f_map(filling_from_dict(d), mbound));
    });
    m.def("h_map", [](const py::dict& d) { return filling_to_dict(h_map(filling_from_dict(d))); });
    m.def("h_inverse",
          [](const py::dict& d) { return filling_to_dict(h_inverse(filling_from_dict(d))); });
    m.def("phi", [](const py::dict& d) { return filling_to_dict(phi(filling_from_dict(d))); });
    m.def("phi_tilde",
          [](const py::dict& d) { return filling_to_dict(phi_tilde(filling_from_dict(d))); });

    // verification
    m.def("suite_names", []() { return verify::suite_names(); });
    m.def("run_suite", [](const std::string& name, int max_n) {
        verify::SuiteResult r = verify::run_suite(name, max_n);
        py::dict d;
        d["suite"] = r.name;
        d["passed"] = r.passed;
        d["cases"] = r.cases;
        d["seconds"] = r.seconds;
        d["detail"] = r.detail;
        return d;
    }, py::arg("name"), py::arg("max_n") = -1);
}
