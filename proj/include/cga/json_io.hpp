#pragma once

#include <json.hpp>

#include "cga/liealg.hpp"
#include "cga/realization.hpp"
#include "cga/solver.hpp"
#include "cga/theorems.hpp"
#include "cga/uea.hpp"

namespace cga {

using Json = nlohmann::json;  // object keys are kept sorted

Json spec_to_json(const AlgebraSpec& spec);
/// Accepts {"d": 1, "ell": "3/2"}; ell may also be a JSON integer.
AlgebraSpec spec_from_json(const Json& j);

Json to_json(const LieAlgebra& alg);

/// {"terms":[{"monomial":{"M":2,"D":1},"coeff":"-6"}, ...]} in display order.
Json to_json(const LieAlgebra& alg, const UEAElement& a);
/// Reads the "terms" array; unknown generator names throw std::invalid_argument.
UEAElement element_from_json(const LieAlgebra& alg, const Json& j);

Json to_json(const VarSet& vars, const DiffOp& op);

Json to_json(const LieAlgebra& alg, const CasimirReport& rep);
Json to_json(const LieAlgebra& alg, const TheoremReport& rep);

/// Elements of a document: a bare element, an element with "spec", or a
/// report (its canonical and casimir_basis lists).
std::vector<UEAElement> elements_from_document(const LieAlgebra& alg, const Json& doc);

/// Stable text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cga
