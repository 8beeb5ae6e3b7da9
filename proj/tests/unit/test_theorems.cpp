#include <doctest.h>

#include <set>

#include "cga/theorems.hpp"
#include "helpers.hpp"
#include "solver_cases.hpp"

using namespace cga;
using namespace cga::test;

namespace {

std::map<std::string, std::pair<Rational, Rational>> mismatch_map(const TheoremReport& r) {
  std::map<std::string, std::pair<Rational, Rational>> out;
  for (auto* c : r.mismatches()) out[c->name] = {c->stated, c->fitted};
  return out;
}

Rational term_value(const TheoremExpansion& e, const std::string& name) {
  for (auto& t : e.terms)
    if (t.name == name) return t.value;
  FAIL("no term " << name);
  return 0;
}

std::pair<Rational, Rational> Q(const char* a, const char* b) { return {parse_rational(a), parse_rational(b)}; }

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("range checks") {
    CHECK_THROWS_AS(build_theorem_casimir(AlgebraSpec::make(1, "3/2"), TheoremKind::Quartic), OutOfTheoremRange);
    CHECK_THROWS_AS(build_theorem_casimir(AlgebraSpec::make(1, "5/2"), TheoremKind::Quadratic), OutOfTheoremRange);
    CHECK_THROWS_AS(build_theorem_casimir(AlgebraSpec::make(2, "2"), TheoremKind::Quartic), OutOfTheoremRange);
    CHECK_NOTHROW(build_theorem_casimir(AlgebraSpec::make(2, "1"), TheoremKind::Quadratic));
    CHECK(parse_theorem_kind("quartic") == TheoremKind::Quartic);
    CHECK(parse_u_reading("literal") == UReading::Literal);
    CHECK_THROWS(parse_theorem_kind("cubic"));
  }

  TEST_CASE("targets") {
    auto t = theorem_target(AlgebraSpec::make(2, "3"), TheoremKind::Quartic);
    CHECK(t.grade == GradeVector{{0, 2, 0}});
    CHECK(t.degree == 4);
    auto u = theorem_target(AlgebraSpec::make(1, "5/2"), TheoremKind::Quartic);
    CHECK(u.grade == GradeVector{{0, 10}});
  }

  TEST_CASE("d=2 quadratic reproduces the displayed forms exactly") {
    const std::pair<const char*, const char*> cases[] = {
        {"1", "d2_l1_quadratic"}, {"2", "d2_l2_quadratic"}, {"3", "d2_l3_quadratic"}};
    for (auto& [ell, fx] : cases) {
      auto s = AlgebraSpec::make(2, ell);
      auto alg = make_cga(s);
      CHECK(build_theorem_casimir(s, TheoremKind::Quadratic) == fixture_element(alg, fx));
      auto rep = check_theorem(s, TheoremKind::Quadratic);
      CHECK(rep.verified());
      CHECK(rep.mismatches().empty());
      CHECK(rep.corrected == rep.element);
      CHECK(rep.corrected_verified);
    }
  }

  TEST_CASE("d=1 quartic leading coefficients") {
    auto e = expand_theorem(AlgebraSpec::make(1, "5/2"), TheoremKind::Quartic);
    CHECK(e.theorem == "d1-quartic");
    CHECK(term_value(e, "alpha") == 132);
    CHECK(term_value(e, "beta") == -12);
    CHECK(term_value(e, "gamma") == 48);
  }

  TEST_CASE("d=1 quartic differs from the solver in one coefficient") {
    const std::tuple<const char*, const char*, const char*, const char*> cases[] = {
        {"5/2", "tau[2,2]", "2/27", "2/3"}, {"7/2", "tau[3,3]", "-25/1536", "-25/96"}};
    for (auto& [ell, name, stated, fitted] : cases) {
      auto s = AlgebraSpec::make(1, ell);
      auto rep = check_theorem(s, TheoremKind::Quartic);
      CAPTURE(ell);
      CHECK(rep.failure.has_value());
      CHECK_FALSE(rep.in_casimir_span);
      CHECK(rep.fit_consistent);
      CHECK(rep.stray.is_zero());
      CHECK(rep.unaccounted.is_zero());
      CHECK(mismatch_map(rep) == std::map<std::string, std::pair<Rational, Rational>>{{name, Q(stated, fitted)}});
      CHECK(rep.corrected_verified);
      CHECK(proportional(rep.corrected, quartic_canonical(s)) == rep.scale);
      // patching the one named coefficient recovers the corrected element
      auto e = expand_theorem(s, TheoremKind::Quartic);
      UEAElement patched;
      for (auto& t : e.terms) {
        if (t.extrapolated) continue;
        patched += t.family * (t.name == name ? parse_rational(fitted) : t.value);
      }
      CHECK(patched == rep.corrected);
    }
    auto s = AlgebraSpec::make(1, "5/2");
    auto alg = make_cga(s);
    CHECK(check_theorem(s, TheoremKind::Quartic).corrected == fixture_element(alg, "d1_l5-2_quartic"));
  }

  TEST_CASE("d=2 quartic discrepancies are named") {
    auto s = AlgebraSpec::make(2, "3");
    auto rep = check_theorem(s, TheoremKind::Quartic);
    CHECK_FALSE(rep.verified());
    CHECK(rep.fit_consistent);
    CHECK(rep.scale == make_rational(-1, 240));
    CHECK(rep.stray.is_zero());
    CHECK(rep.unaccounted.is_zero());
    std::map<std::string, std::pair<Rational, Rational>> want{
        {"varphi'[0]", Q("8", "-8")},      {"varphi'[1]", Q("-24", "24")},  {"eta[0]", Q("-3/10", "-1/120")},
        {"eta[1]", Q("-10/3", "-2/15")},    {"eta[2]", Q("-10/3", "-5/24")}, {"epsilon[0,0]", Q("-1/6", "1/6")},
        {"tau[1,2]", Q("0", "-7/12")}};
    CHECK(mismatch_map(rep) == want);
    for (auto* c : rep.mismatches()) CHECK(c->extrapolated == (c->name == "tau[1,2]"));
    CHECK(rep.corrected_verified);
    CHECK(rep.corrected == quartic_canonical(s) * rep.scale);
    CHECK_FALSE(verify_casimir(make_cga(s), rep.corrected).has_value());
  }

  TEST_CASE("extended ranges supply the missing family") {
    auto s = AlgebraSpec::make(2, "3");
    TheoremOptions opts;
    opts.extend_ranges = true;
    auto rep = check_theorem(s, TheoremKind::Quartic, opts);
    auto m = mismatch_map(rep);
    CHECK(m.count("tau[1,2]") == 0);
    CHECK(m.size() == 6);
    bool seen = false;
    for (auto& c : rep.coefficients)
      if (c.name == "tau[1,2]") {
        seen = true;
        CHECK(c.stated == make_rational(-7, 12));
        CHECK(c.matches);
      }
    CHECK(seen);
  }

  TEST_CASE("d=2 quartic at l=4") {
    auto s = AlgebraSpec::make(2, "4");
    auto rep = check_theorem(s, TheoremKind::Quartic);
    auto m = mismatch_map(rep);
    std::set<std::string> names;
    for (auto& [k, v] : m) names.insert(k);
    CHECK(names == std::set<std::string>{"varphi'[0]", "varphi'[1]", "varphi'[2]", "eta[0]", "eta[1]", "eta[2]",
                                         "eta[3]", "tau[2,3]"});
    for (int i = 0; i < 3; ++i) {
      auto& [stated, fitted] = m["varphi'[" + std::to_string(i) + "]"];
      CHECK(stated == -fitted);
    }
    CHECK(rep.corrected_verified);
  }

  TEST_CASE("literal U reading cannot be fitted") {
    auto s = AlgebraSpec::make(2, "3");
    TheoremOptions opts;
    opts.reading = UReading::Literal;
    auto rep = check_theorem(s, TheoremKind::Quartic, opts);
    CHECK_FALSE(rep.fit_consistent);
    CHECK(rep.stray.size() == 15);
    for (auto& [mono, c] : rep.stray.terms()) CHECK(mono.degree() > 4);
    CHECK(rep.corrected_verified);
    CHECK_FALSE(rep.verified());
  }

  TEST_CASE("families are omega-symmetric and graded") {
    for (auto [d, ell, kind] : {std::tuple{1, "5/2", TheoremKind::Quartic}, std::tuple{2, "3", TheoremKind::Quartic},
                                std::tuple{2, "2", TheoremKind::Quadratic}}) {
      auto s = AlgebraSpec::make(d, ell);
      auto alg = make_cga(s);
      auto e = expand_theorem(s, kind);
      auto tg = theorem_target(s, kind);
      std::set<std::string> seen;
      for (auto& t : e.terms) {
        CHECK(seen.insert(t.name).second);
        CHECK_FALSE(t.family.is_zero());
        CHECK(omega(alg, t.family) == t.family);
        for (auto& [m, c] : t.family.terms()) CHECK(grade_of(alg, m) == tg.grade);
      }
    }
  }
}
