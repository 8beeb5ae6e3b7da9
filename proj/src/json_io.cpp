#include "cga/json_io.hpp"

#include <stdexcept>

namespace cga {

Json spec_to_json(const AlgebraSpec& spec) { return Json{{"d", spec.d}, {"ell", to_string(spec.ell)}}; }

AlgebraSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("ell")) throw InvalidSpec("spec needs d and ell");
  const auto& e = j.at("ell");
  std::string ell = e.is_string() ? e.get<std::string>() : e.dump();
  return AlgebraSpec::make(j.at("d").get<int>(), ell);
}

namespace {

Json combo_to_json(const LieAlgebra& alg, const LinearCombo& v) {
  Json out = Json::array();
  for (const auto& [pos, c] : v) out.push_back({{"gen", alg.generator(pos).name()}, {"coeff", to_string(c)}});
  return out;
}

}  // namespace

Json to_json(const LieAlgebra& alg) {
  Json j;
  if (alg.spec()) j["spec"] = spec_to_json(*alg.spec());
  Json basis = Json::array();
  for (const auto& g : alg.basis()) basis.push_back(g.name());
  j["basis"] = basis;
  Json br = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = i + 1; k < alg.dim(); ++k) {
      const auto& v = alg.bracket(static_cast<int>(i), static_cast<int>(k));
      if (v.empty()) continue;
      br.push_back({{"x", alg.generator(static_cast<int>(i)).name()},
                    {"y", alg.generator(static_cast<int>(k)).name()},
                    {"value", combo_to_json(alg, v)}});
    }
  j["brackets"] = br;
  return j;
}

Json to_json(const LieAlgebra& alg, const UEAElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json mono = Json::object();
    for (auto p : m.word()) {
      auto name = alg.generator(p).name();
      mono[name] = mono.value(name, 0) + 1;
    }
    terms.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
  }
  return Json{{"terms", terms}};
}

UEAElement element_from_json(const LieAlgebra& alg, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("element JSON needs a \"terms\" array");
  UEAElement out;
  for (const auto& t : j.at("terms")) {
    std::vector<int> ex(alg.dim(), 0);
    for (const auto& [name, e] : t.at("monomial").items()) {
      auto p = alg.find(name);
      if (!p) throw std::invalid_argument("unknown generator '" + name + "'");
      int k = e.get<int>();
      if (k < 0) throw std::invalid_argument("negative exponent");
      ex[static_cast<std::size_t>(*p)] += k;
    }
    out.add_term(Monomial::from_exponents(ex), parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

Json to_json(const VarSet& vars, const DiffOp& op) {
  Json terms = Json::array();
  for (const auto& [k, c] : op.terms()) {
    Json mult = Json::object(), deriv = Json::object();
    for (std::size_t s = 0; s < vars.n_slots(); ++s) {
      if (k.mult[s]) mult[vars.names[s]] = k.mult[s];
      if (k.deriv[s]) deriv[vars.names[s]] = k.deriv[s];
    }
    terms.push_back({{"mult", mult}, {"deriv", deriv}, {"coeff", to_string(c)}});
  }
  return Json{{"terms", terms}, {"text", op.format(vars)}, {"scalar", is_parameter_scalar(op, vars).scalar}};
}

namespace {

Json elements_json(const LieAlgebra& alg, const std::vector<UEAElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(alg, e));
  return out;
}

Json params_json(const ParameterValues& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = to_string(v);
  return out;
}

}  // namespace

Json to_json(const LieAlgebra& alg, const CasimirReport& rep) {
  Json ver = Json::array();
  for (const auto& r : rep.verification)
    ver.push_back({{"gen", alg.generator(r.generator).name()}, {"residual", to_string(r.norm)}});
  return Json{{"spec", spec_to_json(rep.spec)},
              {"grade", rep.grade.components},
              {"max_degree", rep.max_degree},
              {"method", to_string(rep.method)},
              {"provenance", to_string(rep.provenance)},
              {"ansatz_dim", rep.ansatz_dim},
              {"candidate_dim", rep.candidate_dim},
              {"candidate_basis", elements_json(alg, rep.candidate_basis)},
              {"casimir_dim", rep.casimir_basis.size()},
              {"casimir_basis", elements_json(alg, rep.casimir_basis)},
              {"known_products", elements_json(alg, rep.known_products)},
              {"canonical", elements_json(alg, rep.canonical)},
              {"canonical_text", [&] {
                 Json t = Json::array();
                 for (const auto& e : rep.canonical) t.push_back(format(alg, e));
                 return t;
               }()},
              {"parameters", params_json(rep.parameters)},
              {"verification", ver},
              {"verified", rep.verified}};
}

Json to_json(const LieAlgebra& alg, const TheoremReport& rep) {
  auto target = theorem_target(rep.spec, rep.kind);
  Json coeffs = Json::array();
  for (const auto* c : rep.mismatches())
    coeffs.push_back({{"name", c->name},
                      {"stated", to_string(c->stated)},
                      {"fitted", to_string(c->fitted)},
                      {"extrapolated", c->extrapolated}});
  Json failure = nullptr;
  if (rep.failure)
    failure = {{"gen", alg.generator(rep.failure->generator).name()},
               {"residual", to_json(alg, rep.failure->residual)}};
  return Json{{"spec", spec_to_json(rep.spec)},
              {"grade", target.grade.components},
              {"max_degree", target.degree},
              {"provenance", to_string(Provenance::Theorem)},
              {"theorem", rep.theorem},
              {"which", to_string(rep.kind)},
              {"reading", to_string(rep.reading)},
              {"extend_ranges", rep.extend_ranges},
              {"canonical", Json::array({to_json(alg, rep.element)})},
              {"canonical_text", Json::array({format(alg, rep.element)})},
              {"verified", rep.verified()},
              {"in_casimir_span", rep.in_casimir_span},
              {"failure", failure},
              {"discrepancy",
               {{"scale", to_string(rep.scale)},
                {"fit_consistent", rep.fit_consistent},
                {"coefficients_checked", rep.coefficients.size()},
                {"mismatches", coeffs},
                {"unaccounted", to_json(alg, rep.unaccounted)},
                {"stray", to_json(alg, rep.stray)},
                {"corrected", to_json(alg, rep.corrected)},
                {"corrected_text", format(alg, rep.corrected)},
                {"corrected_verified", rep.corrected_verified}}}};
}

std::vector<UEAElement> elements_from_document(const LieAlgebra& alg, const Json& doc) {
  if (doc.contains("terms")) return {element_from_json(alg, doc)};
  std::vector<UEAElement> out;
  for (const char* key : {"canonical", "casimir_basis"})
    if (doc.contains(key))
      for (const auto& e : doc.at(key)) out.push_back(element_from_json(alg, e));
  if (out.empty()) throw std::invalid_argument("document holds no element");
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cga
