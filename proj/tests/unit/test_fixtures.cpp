#include <doctest.h>

#include <filesystem>

#include "cga/json_io.hpp"
#include "fixture_json.hpp"
#include "helpers.hpp"
#include "solver_cases.hpp"

using namespace cga;
using namespace cga::test;

namespace {

// Loads a locked fixture file, not the in-source transcription.
UEAElement load(const LieAlgebra& alg, const std::string& name) {
  auto j = Json::parse(read_file(std::string(CGA_FIXTURE_DIR) + "/" + name + ".json"));
  REQUIRE(spec_from_json(j["spec"]) == *alg.spec());
  return element_from_json(alg, j);
}

// b reduced modulo the known products of the report, compared with the
// canonical representative.
std::optional<Rational> canonical_scale(const SolvedCase& c, const UEAElement& K) {
  auto basis = enumerate_ansatz(c.alg, c.target.grade, c.target.degree);
  auto red = canonical_complement(c.alg, basis, {K}, c.report.known_products);
  if (red.size() != 1) return std::nullopt;
  return proportional(red[0], c.report.canonical[0]);
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("locked files match the transcriptions") {
    for (const auto& t : fixtures::transcriptions()) {
      CAPTURE(t.name);
      auto path = std::string(CGA_FIXTURE_DIR) + "/" + t.name + ".json";
      REQUIRE(std::filesystem::exists(path));
      CHECK(read_file(path) == dump(fixtures::fixture_json(t)));
    }
  }

  TEST_CASE("d=1 quartics equal the canonical form up to scale") {
    const std::pair<const char*, const char*> cases[] = {{"3/2", "d1_l3-2_quartic"}, {"5/2", "d1_l5-2_quartic"}};
    for (auto& [ell, name] : cases) {
      const auto& c = solved(AlgebraSpec::make(1, ell), 0);
      auto K = load(c.alg, name);
      CHECK_FALSE(verify_casimir(c.alg, K).has_value());
      CHECK(proportional(K, c.report.canonical[0]).has_value());
      CHECK(c.report.casimir_basis.size() == 2);
      CHECK(span_contains(c.report.casimir_basis, {parse_element(c.alg, "M^2")}));
    }
    CHECK(proportional(load(solved(AlgebraSpec::make(1, "3/2"), 0).alg, "d1_l3-2_quartic"),
                       solved(AlgebraSpec::make(1, "3/2"), 0).report.canonical[0]) == make_rational(-1, 4));
  }

  TEST_CASE("d=2 quadratics equal the canonical form up to scale") {
    for (auto& [ell, name] : {std::pair{"1", "d2_l1_quadratic"}, std::pair{"2", "d2_l2_quadratic"},
                              std::pair{"3", "d2_l3_quadratic"}}) {
      const auto& c = solved(AlgebraSpec::make(2, ell), 0);
      auto K = load(c.alg, name);
      CHECK_FALSE(verify_casimir(c.alg, K).has_value());
      CHECK(proportional(K, c.report.canonical[0]).has_value());
    }
  }

  TEST_CASE("d=2 quartics") {
    const auto& c1 = solved(AlgebraSpec::make(2, "1"), 1);
    auto exg1 = load(c1.alg, "d2_l1_quartic");
    CHECK_FALSE(verify_casimir(c1.alg, exg1).has_value());
    CHECK(proportional(exg1, c1.report.canonical[0]) == make_rational(-1, 2));

    const auto& c2 = solved(AlgebraSpec::make(2, "2"), 1);
    auto exg2 = load(c2.alg, "d2_l2_quartic");
    CHECK_FALSE(verify_casimir(c2.alg, exg2).has_value());
    CHECK(span_contains(c2.report.casimir_basis, {exg2}));
    CHECK(canonical_scale(c2, exg2).has_value());
  }

  TEST_CASE("the l=2 candidates") {
    const auto& c = solved(AlgebraSpec::make(2, "2"), 1);
    auto Ka = load(c.alg, "d2_l2_candidate_a"), Kb = load(c.alg, "d2_l2_candidate_b");
    CHECK(span_contains(c.report.candidate_basis, {Ka, Kb}));
    CHECK(verify_casimir(c.alg, Ka).has_value());
    CHECK(verify_casimir(c.alg, Kb).has_value());
    CHECK(span_contains(c.report.casimir_basis, {Ka - Kb}));
    CHECK(canonical_scale(c, Ka - Kb).has_value());
    CHECK(span_contains(c.report.casimir_basis, {load(c.alg, "d2_l2_quartic")}));
  }

  TEST_CASE("the l=1 candidates as displayed") {
    const auto& c = solved(AlgebraSpec::make(2, "1"), 1);
    auto Ka = load(c.alg, "d2_l1_candidate_a"), Kb = load(c.alg, "d2_l1_candidate_b");
    CHECK(span_contains(c.report.candidate_basis, {Ka}));
    CHECK(verify_casimir(c.alg, Ka).has_value());
    // the displayed K_b is not a realization scalar, so K_a - K_b is no Casimir
    CHECK_FALSE(span_contains(c.report.candidate_basis, {Kb}));
    CHECK(verify_casimir(c.alg, Ka - Kb).has_value());
  }

  TEST_CASE("l=3 quartic display differs by one monomial") {
    auto s = AlgebraSpec::make(2, "3");
    const auto& c = solved(s, 1);
    auto K = load(c.alg, "d2_l3_quartic");
    auto f = verify_casimir(c.alg, K);
    REQUIRE(f.has_value());
    CHECK(c.alg.generator(f->generator).name() == "P0");
    auto diff = K - c.report.canonical[0] * make_rational(-1, 240);
    CHECK(diff == parse_element(c.alg, "-1/12 Q1 P1 P4 Q5 + 1/12 Q1 P1 P4 Q6"));
    auto basis = enumerate_ansatz(c.alg, c.target.grade, c.target.degree);
    CHECK(basis.index_of(parse_element(c.alg, "Q1 P1 P4 Q6").terms().begin()->first) >= 0);
    CHECK(basis.index_of(parse_element(c.alg, "Q1 P1 P4 Q5").terms().begin()->first) < 0);
  }

  TEST_CASE("central fixtures") {
    auto a = make_cga(AlgebraSpec::make(2, "1"));
    CHECK_FALSE(verify_casimir(a, load(a, "d2_l1_central")).has_value());
    auto b = make_cga(AlgebraSpec::make(1, "3/2"));
    CHECK_FALSE(verify_casimir(b, load(b, "d1_l3-2_central")).has_value());
  }
}
