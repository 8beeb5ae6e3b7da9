#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cga/json_io.hpp"
#include "cga/solver.hpp"
#include "transcriptions.hpp"

using namespace cga;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CGA_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(CGA_FIXTURE_DIR) + "/" + name + ".json"; }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cga_cli_" + name)).string();
}

UEAElement fixture_element(const LieAlgebra& alg, const std::string& name) {
  for (auto& t : fixtures::transcriptions())
    if (t.name == name) return parse_element(alg, t.text);
  FAIL("missing " << name);
  return {};
}

}  // namespace

TEST_CASE("algebra") {
  auto r = run("algebra --d 1 --ell 3/2");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["basis"] == Json::parse(R"(["M","P0","H","P1","D","P2","C","P3"])"));
  r = run("algebra --d 2 --ell 1");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["basis"].size() == 11);
  CHECK(run("algebra --d 1 --ell 2").code == 2);
  CHECK(run("algebra --d 2 --ell 1/3").code == 2);
}

TEST_CASE("rank") {
  CHECK(run("rank --d 1 --ell 5/2").out == "2\n");
  CHECK(run("rank --d 2 --ell 3").out == "3\n");
  CHECK(run("rank --d 1 --ell 3/2 --seed 7").out == "2\n");
  CHECK(run("rank --d 1 --ell 3/2 --seed 8 --trials 2").out == "2\n");
}

TEST_CASE("solve reproduces the displayed quadratic") {
  auto r = run("solve --d 2 --ell 1 --degree 2");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["verified"] == true);
  auto alg = make_cga(AlgebraSpec::make(2, "1"));
  auto K = element_from_json(alg, j["canonical"][0]);
  CHECK(proportional(K, fixture_element(alg, "d2_l1_quadratic")).has_value());
  auto a = run("solve --d 2 --ell 1 --degree 2 --method algebraic");
  CHECK(a.code == 0);
  CHECK(Json::parse(a.out)["canonical"] == j["canonical"]);
}

TEST_CASE("solve reproduces the displayed d=1 quartic") {
  auto r = run("solve --d 1 --ell 3/2 --degree 4");
  REQUIRE(r.code == 0);
  auto alg = make_cga(AlgebraSpec::make(1, "3/2"));
  auto K = element_from_json(alg, Json::parse(r.out)["canonical"][0]);
  CHECK(proportional(K, fixture_element(alg, "d1_l3-2_quartic")).has_value());
}

TEST_CASE("explicit grade and parameters") {
  auto r = run("solve --d 2 --ell 2 --grade 0,2,0 --degree 4 --symbolic-params");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["candidate_dim"] == 4);
  auto s = run("solve --d 2 --ell 2 --grade 0,2,0 --degree 4 --param r=0");
  CHECK(Json::parse(s.out)["candidate_dim"] == 10);
  CHECK(Json::parse(s.out)["canonical"] == j["canonical"]);
  CHECK(run("solve --d 2 --ell 2 --grade 0,2 --degree 4").code == 2);
  CHECK(run("solve --d 2 --ell 2 --param q=1").code == 2);
  CHECK(run("solve --d 2 --ell 2 --method fast").code == 2);
}

TEST_CASE("determinism") {
  for (const char* args : {"solve --d 2 --ell 2", "solve --d 1 --ell 5/2 --degree 4", "rank --d 2 --ell 2"}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  CHECK(run("solve --d 2 --ell 2").out == run("solve --d 2 --ell 2 --serial").out);
}

TEST_CASE("solve then verify") {
  auto path = tmp("solve.json");
  auto r = run("solve --d 2 --ell 2 --degree 4 --out " + path);
  REQUIRE(r.code == 0);
  CHECK(std::filesystem::exists(path));
  auto v = run("verify --in " + path);
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["verified"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("verify fixtures") {
  CHECK(run("verify --in " + fixture("d1_l5-2_quartic")).code == 0);
  CHECK(run("verify --in " + fixture("d2_l1_central")).code == 0);
  auto r = run("verify --in " + fixture("d2_l2_candidate_a"));
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["verified"] == false);
  CHECK(j["results"][0].contains("failing_generator"));
  CHECK(run("verify --in " + fixture("d2_l2_candidate_a") + " --d 1 --ell 3/2").code == 2);
  CHECK(run("verify --in /nonexistent/file.json").code == 2);
}

TEST_CASE("theorem") {
  auto r = run("theorem --d 2 --ell 3 --which quadratic");
  CHECK(r.code == 0);
  auto alg = make_cga(AlgebraSpec::make(2, "3"));
  CHECK(element_from_json(alg, Json::parse(r.out)["canonical"][0]) == fixture_element(alg, "d2_l3_quadratic"));

  auto q = run("theorem --d 1 --ell 5/2 --which quartic");
  CHECK(q.code == 1);
  auto j = Json::parse(q.out);
  auto a1 = make_cga(AlgebraSpec::make(1, "5/2"));
  auto K = element_from_json(a1, j["canonical"][0]);
  CHECK(K.coeff(parse_element(a1, "M^2 D").terms().begin()->first) == 132);
  CHECK(K.coeff(parse_element(a1, "M^2 D^2").terms().begin()->first) == -12);
  CHECK(K.coeff(parse_element(a1, "M^2 H C").terms().begin()->first) == 48);
  CHECK(j["discrepancy"]["mismatches"].size() == 1);
  CHECK(j["discrepancy"]["corrected_verified"] == true);
  CHECK(element_from_json(a1, j["discrepancy"]["corrected"]) == fixture_element(a1, "d1_l5-2_quartic"));

  CHECK(run("theorem --d 1 --ell 3/2 --which quartic").code == 2);
  CHECK(run("theorem --d 2 --ell 3 --which cubic").code == 2);
}

TEST_CASE("realize") {
  auto h = run("realize --d 1 --ell 3/2 --gen H --format text");
  CHECK(h.code == 0);
  CHECK(h.out.find("-∂_t") != std::string::npos);
  auto d = run("realize --d 1 --ell 3/2 --gen D --format text");
  CHECK(d.out.find("delta") != std::string::npos);
  auto f = run("realize --in " + fixture("d2_l1_quadratic"));
  CHECK(f.code == 0);
  auto j = Json::parse(f.out);
  CHECK(j["images"][0]["scalar"] == true);
  CHECK(j["images"][0]["text"].get<std::string>().find("∂") == std::string::npos);
  CHECK(run("realize --d 2 --ell 1 --gen X9").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("solve --d 1").code == 2);
  CHECK(run("bogus").code == 2);
}
