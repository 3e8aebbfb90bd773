// Command-line interface: basis expansions, products, coproducts,
// enumeration, bijections, insertion, transition matrices and the
// verification suites.  Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsymtab/bijections.hpp"
#include "qsymtab/compositions.hpp"
#include "qsymtab/insertion_lr.hpp"
#include "qsymtab/json_io.hpp"
#include "qsymtab/qsym.hpp"
#include "qsymtab/tableaux.hpp"
#include "qsymtab/verify.hpp"

namespace {

using namespace qsymtab;
using nlohmann::json;

bool want_json(const std::string& format) { return format == "json"; }

json read_json_input(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void print_expression(const QSymExpr& e, const std::string& format) {
    if (want_json(format))
        std::cout << dump_json(to_json(e)) << "\n";
    else
        std::cout << e.str() << "\n";
}

int run_expand(const std::string& basis, const std::string& index,
               const std::string& inner, const std::string& to, int vars,
               const std::string& format) {
    QSymExpr expansion(Basis::F);
    int degree = 0;
    if (basis == "skewR") {
        Composition outer = Composition::parse(index);
        Composition in = Composition::parse(inner);
        expansion = skew_R(outer, in, SkewRoute::Combinatorial);
        degree = outer.weight() - in.weight();
    } else if (basis == "schur") {
        Partition lambda = Partition::parse(index);
        for (const Composition& alpha : compositions_with_shape(lambda.conjugate()))
            expansion += expand_in_F(Basis::R, alpha);
        degree = lambda.weight();
    } else {
        Composition alpha = Composition::parse(index);
        expansion = expand_in_F(basis_from_name(basis), alpha);
        degree = alpha.weight();
    }

    if (to == "F") {
        print_expression(expansion, format);
    } else if (to == "M") {
        print_expression(to_M(expansion), format);
    } else if (to == "monomials") {
        int k = vars > 0 ? vars : degree;
        MonomialPoly p = to_monomials(expansion, k);
        if (want_json(format))
            std::cout << dump_json(to_json(p)) << "\n";
        else
            std::cout << p.str() << "\n";
    } else {
        throw CLI::ValidationError("--to", "expected F, M or monomials");
    }
    return 0;
}

int run_multiply(const std::string& r, const std::string& schur, const std::string& format) {
    QSymExpr product = product_and_decompose(
        QSymExpr::term(Basis::R, Composition::parse(r)),
        SymExpr::term(Partition::parse(schur)));
    print_expression(product, format);
    return 0;
}

int run_coproduct(const std::string& r, const std::string& format) {
    TensorExpr delta = coproduct(expand_in_F(Basis::R, Composition::parse(r)));
    if (want_json(format))
        std::cout << dump_json(to_json(delta)) << "\n";
    else
        std::cout << delta.str() << "\n";
    return 0;
}

int run_enumerate(const std::string& kind, const std::string& shape,
                  const std::string& inner, int max_entry, bool standard,
                  const std::string& format) {
    Family family = family_from_name(kind);
    SkewShape sk(Composition::parse(shape), Composition::parse(inner));
    std::vector<Filling> fillings =
        standard ? enumerate_standard({family, true}, sk)
                 : enumerate_fillings({family, false}, sk, max_entry);
    if (want_json(format)) {
        json out = json::array();
        for (const Filling& f : fillings) out.push_back(to_json(f));
        std::cout << dump_json(out) << "\n";
    } else {
        std::cout << fillings.size() << " filling(s)\n";
        for (const Filling& f : fillings) std::cout << "\n" << render(f);
    }
    return 0;
}

int run_biject(const std::string& map_name, const std::string& input, int m,
               const std::string& format) {
    Filling t = filling_from_json(read_json_input(input));
    Filling out;
    if (map_name == "rho")
        out = rho(t);
    else if (map_name == "rho-inverse")
        out = rho_inverse(t);
    else if (map_name == "f")
        out = f_map(t, m > 0 ? m : t.size());
    else if (map_name == "h")
        out = h_map(t);
    else if (map_name == "h-inverse")
        out = h_inverse(t);
    else if (map_name == "phi")
        out = phi(t);
    else if (map_name == "phitilde")
        out = phi_tilde(t);
    else
        throw CLI::ValidationError("--map", "expected rho, rho-inverse, f, h, h-inverse, phi or phitilde");
    if (want_json(format))
        std::cout << dump_json(to_json(out)) << "\n";
    else
        std::cout << render(out);
    return 0;
}

int run_insert(const std::string& input, const std::string& values,
               const std::string& format) {
    Filling t = filling_from_json(read_json_input(input));
    json steps = json::array();
    std::stringstream ss(values);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int x = std::stoi(tok);
        InsertionResult r = insert(t, x);
        if (want_json(format)) {
            json step;
            step["inserted"] = x;
            step["new_cell"] = {r.new_cell.first, r.new_cell.second};
            json path = json::array();
            for (auto [row, col] : r.bump_path) path.push_back({row, col});
            step["bump_path"] = path;
            step["tableau"] = to_json(r.tableau);
            steps.push_back(step);
        } else {
            std::cout << "insert " << x << " -> new cell (" << r.new_cell.first << ","
                      << r.new_cell.second << "), path";
            for (auto [row, col] : r.bump_path) std::cout << " (" << row << "," << col << ")";
            std::cout << "\n" << render(r.tableau) << "\n";
        }
        t = r.tableau;
    }
    if (want_json(format)) std::cout << dump_json(steps) << "\n";
    return 0;
}

int run_matrix(int n, const std::string& format) {
    const TransitionMatrix& t = transition_matrix_R_to_F(n);
    if (want_json(format)) {
        json rows = json::array(), cols = json::array(), entries = json::array();
        for (const Composition& c : t.row_order) rows.push_back(c.parts());
        for (const Composition& c : t.col_order) cols.push_back(c.parts());
        for (const auto& row : t.entries) entries.push_back(row);
        std::cout << dump_json({{"n", n},
                                {"rows", rows},
                                {"cols", cols},
                                {"entries", entries},
                                {"unitriangular", t.upper_unitriangular()}})
                  << "\n";
    } else {
        std::cout << "rows (R basis):";
        for (const Composition& c : t.row_order) std::cout << " " << c.str();
        std::cout << "\ncolumns (F basis):";
        for (const Composition& c : t.col_order) std::cout << " " << c.str();
        std::cout << "\n";
        for (const auto& row : t.entries) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << "\n";
        }
        std::cout << (t.upper_unitriangular() ? "upper uni-triangular\n"
                                              : "NOT upper uni-triangular\n");
    }
    return 0;
}

int run_verify(const std::string& suite, int max_n, const std::string& format) {
    std::vector<verify::SuiteResult> results;
    if (suite == "all")
        results = verify::run_all(max_n);
    else
        results.push_back(verify::run_suite(suite, max_n));

    bool ok = true;
    if (want_json(format)) {
        json out = json::array();
        for (const auto& r : results) {
            ok = ok && r.passed;
            out.push_back({{"suite", r.name},
                           {"passed", r.passed},
                           {"cases", r.cases},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        }
        std::cout << dump_json(out) << "\n";
    } else {
        for (const auto& r : results) {
            ok = ok && r.passed;
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                      << r.cases << " checks, " << r.seconds << "s)\n";
            if (!r.passed) std::cout << r.detail << "\n";
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young row-strict quasisymmetric Schur functions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* expand = app.add_subcommand("expand", "expand a basis element");
    std::string basis = "R", index, inner_str = "()", to = "F";
    int vars = 0;
    expand->add_option("--basis", basis, "R, RS, S, QS, skewR or schur");
    expand->add_option("--index", index, "composition or partition")->required();
    expand->add_option("--inner", inner_str, "inner shape for skewR");
    expand->add_option("--to", to, "F, M or monomials");
    expand->add_option("--vars", vars, "variable count for monomials");

    auto* multiply = app.add_subcommand("multiply", "product with a Schur function");
    std::string mul_r, mul_schur;
    multiply->add_option("--r", mul_r, "composition indexing R")->required();
    multiply->add_option("--schur", mul_schur, "partition indexing s")->required();

    auto* coprod = app.add_subcommand("coproduct", "coproduct of R in F (x) F");
    std::string cop_r;
    coprod->add_option("--r", cop_r, "composition indexing R")->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate fillings");
    std::string en_kind = "SSYRT", en_shape, en_inner = "()";
    int en_max = 0;
    bool en_standard = false;
    enumerate->add_option("--kind", en_kind, "tableau family");
    enumerate->add_option("--shape", en_shape, "outer composition")->required();
    enumerate->add_option("--inner", en_inner, "inner composition");
    enumerate->add_option("--max", en_max, "largest allowed entry");
    enumerate->add_flag("--standard", en_standard, "standard fillings only");

    auto* biject = app.add_subcommand("biject", "apply a structural bijection");
    std::string bj_map, bj_input;
    int bj_m = 0;
    biject->add_option("--map", bj_map, "rho, rho-inverse, f, h, h-inverse, phi or phitilde")
        ->required();
    biject->add_option("--input", bj_input, "tableau JSON file, or - for stdin")->required();
    biject->add_option("--m", bj_m, "entry bound for the reversing map f");

    auto* insert_cmd = app.add_subcommand("insert", "insert values into a tableau");
    std::string in_tableau, in_values;
    insert_cmd->add_option("--tableau", in_tableau, "tableau JSON file, or - for stdin")
        ->required();
    insert_cmd->add_option("--values", in_values, "comma-separated values")->required();

    auto* matrix = app.add_subcommand("matrix", "R-to-F transition matrix");
    int mat_n = 1;
    matrix->add_option("--n", mat_n, "homogeneous degree")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string vf_suite = "all";
    int vf_max_n = -1;
    verify_cmd->add_option("--suite", vf_suite, "suite name, or all");
    verify_cmd->add_option("--max-n", vf_max_n, "override the exhaustive bound");

    try {
        app.parse(argc, argv);
        if (*expand) return run_expand(basis, index, inner_str, to, vars, format);
        if (*multiply) return run_multiply(mul_r, mul_schur, format);
        if (*coprod) return run_coproduct(cop_r, format);
        if (*enumerate) return run_enumerate(en_kind, en_shape, en_inner, en_max, en_standard, format);
        if (*biject) return run_biject(bj_map, bj_input, bj_m, format);
        if (*insert_cmd) return run_insert(in_tableau, in_values, format);
        if (*matrix) return run_matrix(mat_n, format);
        if (*verify_cmd) return run_verify(vf_suite, vf_max_n, format);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
