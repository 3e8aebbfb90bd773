#pragma once

#include <string>

#include <json.hpp>

#include "qsymtab/qsym.hpp"
#include "qsymtab/tableaux.hpp"

namespace qsymtab {

/// Tableau schema: {"kind": ..., "outer": [...], "inner": [...],
/// "rows": [[...]]} with rows listed from row 1 upward and inner cells
/// omitted from "rows"; "inner" is always zero-padded to the outer length.
nlohmann::json to_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

/// Expression schema: {"basis": ..., "terms": [{"index": [...], "coeff": n}]}.
nlohmann::json to_json(const QSymExpr& e);
QSymExpr qsym_from_json(const nlohmann::json& j);

/// Tensor terms carry "left"/"right" indices, both in the F basis.
nlohmann::json to_json(const TensorExpr& t);
TensorExpr tensor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MonomialPoly& p);

/// Serialization used everywhere JSON leaves the library; stable across
/// parse/serialize round trips.
std::string dump_json(const nlohmann::json& j);

}  // namespace qsymtab
