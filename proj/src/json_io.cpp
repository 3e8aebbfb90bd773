#include "qsymtab/json_io.hpp"

#include <stdexcept>

namespace qsymtab {

using nlohmann::json;

json to_json(const Filling& f) {
    json j;
    j["kind"] = family_name(f.kind().family);
    j["outer"] = f.shape().outer().parts();
    j["inner"] = f.shape().inner().parts();
    j["rows"] = f.rows();
    return j;
}

Filling filling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("outer") || !j.contains("rows"))
        throw std::invalid_argument("tableau object requires kind, outer and rows");
    Family family = family_from_name(j.at("kind").get<std::string>());
    Composition outer(j.at("outer").get<std::vector<int>>());
    WeakComposition inner;
    if (j.contains("inner")) inner = WeakComposition(j.at("inner").get<std::vector<int>>());
    return Filling({family, false}, SkewShape(std::move(outer), std::move(inner)),
                   j.at("rows").get<std::vector<std::vector<int>>>());
}

json to_json(const QSymExpr& e) {
    json terms = json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back({{"index", it->first.parts()}, {"coeff", it->second}});
    return {{"basis", basis_name(e.basis())}, {"terms", terms}};
}

QSymExpr qsym_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw std::invalid_argument("expression object requires basis and terms");
    QSymExpr e(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        e.add(Composition(term.at("index").get<std::vector<int>>()),
              term.at("coeff").get<Coeff>());
    return e;
}

json to_json(const TensorExpr& t) {
    json terms = json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
        terms.push_back({{"left", it->first.first.parts()},
                         {"right", it->first.second.parts()},
                         {"coeff", it->second}});
    return {{"basis", "F(x)F"}, {"terms", terms}};
}

TensorExpr tensor_from_json(const json& j) {
    TensorExpr t;
    for (const auto& term : j.at("terms"))
        t.add(Composition(term.at("left").get<std::vector<int>>()),
              Composition(term.at("right").get<std::vector<int>>()),
              term.at("coeff").get<Coeff>());
    return t;
}

json to_json(const MonomialPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponents", it->first}, {"coeff", it->second}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

std::string dump_json(const json& j) { return j.dump(); }

}  // namespace qsymtab
