#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cga/json_io.hpp"
#include "cga/solver.hpp"
#include "cga/theorems.hpp"

using namespace cga;

namespace {

struct Config {
  int d = 0;
  std::string ell;
  int degree = -1;
  std::string grade = "auto";
  std::string method = "pipeline";
  int trials = 5;
  std::uint64_t seed = 0;
  std::string in, out, gen;
  std::string format = "json";
  std::string which;
  std::string reading = "split";
  bool extend_ranges = false;
  std::vector<std::string> params;
  bool symbolic_params = false;
  bool serial = false;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Exec exec_of(const Config& c) { return c.serial ? Exec::Serial : Exec::Parallel; }

AlgebraSpec spec_of(const Config& c) {
  if (c.d == 0 || c.ell.empty()) throw InvalidSpec("--d and --ell are required");
  return AlgebraSpec::make(c.d, c.ell);
}

// JSON goes to --out when given (with the text summary on stdout), otherwise
// to stdout in the requested format.
void emit(const Config& c, const Json& j, const std::string& text) {
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << dump(j);
    std::cout << text;
    return;
  }
  if (c.format == "text")
    std::cout << text;
  else
    std::cout << dump(j);
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

GradeVector parse_grade(const AlgebraSpec& spec, const std::string& s) {
  GradeVector g;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grade component '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad grade component '" + part + "'");
    g.components.push_back(v);
  }
  if (g.components.size() != zero_grade(spec).components.size())
    throw std::invalid_argument("grade has the wrong number of components");
  return g;
}

TargetGrade target_of(const Config& c, const AlgebraSpec& spec) {
  if (c.grade != "auto") {
    if (c.degree < 0) throw std::invalid_argument("--degree is required with an explicit --grade");
    return {parse_grade(spec, c.grade), c.degree};
  }
  auto targets = default_target_grades(spec);
  const TargetGrade* pick = nullptr;
  for (const auto& t : targets)
    if (c.degree < 0 || t.degree <= c.degree)
      if (!pick || t.degree > pick->degree) pick = &t;
  if (!pick) throw std::invalid_argument("no default grade at this degree");
  return {pick->grade, c.degree < 0 ? pick->degree : c.degree};
}

SolveOptions solve_options(const Config& c) {
  SolveOptions o;
  o.exec = exec_of(c);
  if (c.symbolic_params) o.parameters = ParameterValues{};
  if (!c.params.empty()) {
    ParameterValues p = o.parameters.value_or(ParameterValues{});
    for (const auto& kv : c.params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--param expects NAME=VALUE");
      p[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    o.parameters = p;
  }
  return o;
}

int cmd_algebra(const Config& c) {
  auto alg = make_cga(spec_of(c));
  std::ostringstream t;
  t << "dim " << alg.dim() << "\nbasis";
  for (const auto& g : alg.basis()) t << ' ' << g.name();
  t << '\n';
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = i + 1; k < alg.dim(); ++k) {
      const auto& v = alg.bracket(static_cast<int>(i), static_cast<int>(k));
      if (v.empty()) continue;
      t << '[' << alg.generator(static_cast<int>(i)).name() << ',' << alg.generator(static_cast<int>(k)).name() << "] =";
      for (const auto& [p, q] : v) t << ' ' << (sgn(q) < 0 ? "" : "+") << to_string(q) << ' ' << alg.generator(p).name();
      t << '\n';
    }
  emit(c, to_json(alg), t.str());
  return 0;
}

int cmd_rank(const Config& c) {
  auto alg = make_cga(spec_of(c));
  if (c.trials < 1) throw std::invalid_argument("--trials must be positive");
  long r = bb_count(alg, c.trials, c.seed, exec_of(c));
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    f << dump(Json{{"spec", spec_to_json(*alg.spec())}, {"bb_count", r}, {"trials", c.trials}, {"seed", c.seed}});
  }
  std::cout << r << '\n';
  return 0;
}

int cmd_solve(const Config& c) {
  auto spec = spec_of(c);
  auto alg = make_cga(spec);
  auto target = target_of(c, spec);
  auto rep = solve_casimirs(alg, target.grade, target.degree, parse_method(c.method), solve_options(c));
  std::ostringstream t;
  t << "grade " << rep.grade.str() << " degree <= " << rep.max_degree << " method " << to_string(rep.method)
    << "\nansatz " << rep.ansatz_dim << " candidates " << rep.candidate_dim << " casimirs "
    << rep.casimir_basis.size() << " canonical " << rep.canonical.size() << '\n';
  for (const auto& K : rep.canonical) t << "K = " << format(alg, K) << '\n';
  t << (rep.verified ? "verified" : "NOT verified") << '\n';
  emit(c, to_json(alg, rep), t.str());
  return rep.verified ? 0 : 1;
}

LieAlgebra algebra_for_document(const Config& c, const Json& doc) {
  if (doc.contains("spec")) {
    auto s = spec_from_json(doc.at("spec"));
    if (c.d != 0 && !c.ell.empty() && !(spec_of(c) == s)) throw InvalidSpec("--d/--ell disagree with the file");
    return make_cga(s);
  }
  return make_cga(spec_of(c));
}

int cmd_verify(const Config& c) {
  if (c.in.empty()) throw std::invalid_argument("--in is required");
  auto doc = read_json(c.in);
  auto alg = algebra_for_document(c, doc);
  auto elems = elements_from_document(alg, doc);
  Json results = Json::array();
  std::ostringstream t;
  bool all = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto f = verify_casimir(alg, elems[i]);
    Json r{{"index", i}, {"casimir", !f}};
    if (f) {
      all = false;
      r["failing_generator"] = alg.generator(f->generator).name();
      r["residual"] = to_json(alg, f->residual);
      t << "element " << i << ": fails at " << alg.generator(f->generator).name() << ", residual "
        << format(alg, f->residual) << '\n';
    } else {
      t << "element " << i << ": commutes with every generator\n";
    }
    results.push_back(r);
  }
  emit(c, Json{{"spec", spec_to_json(*alg.spec())}, {"results", results}, {"verified", all}}, t.str());
  return all ? 0 : 1;
}

int cmd_theorem(const Config& c) {
  auto spec = spec_of(c);
  auto kind = parse_theorem_kind(c.which);
  TheoremOptions o{parse_u_reading(c.reading), c.extend_ranges};
  auto rep = check_theorem(spec, kind, o, solve_options(c));
  auto alg = make_cga(spec);
  std::ostringstream t;
  t << rep.theorem << ' ' << to_string(kind) << " (" << to_string(rep.reading) << " reading)\n"
    << "K = " << format(alg, rep.element) << '\n';
  if (rep.verified()) {
    t << "verified\n";
  } else {
    if (rep.failure) t << "fails at " << alg.generator(rep.failure->generator).name() << '\n';
    t << "scale against solver: " << to_string(rep.scale) << '\n';
    for (const auto* m : rep.mismatches())
      t << "  " << m->name << ": stated " << to_string(m->stated) << ", solver " << to_string(m->fitted)
        << (m->extrapolated ? " (outside the stated ranges)" : "") << '\n';
    if (!rep.unaccounted.is_zero()) t << "  not covered by any family: " << format(alg, rep.unaccounted) << '\n';
    if (!rep.fit_consistent) t << "  families cannot reproduce the solver element\n";
    t << "corrected K = " << format(alg, rep.corrected) << '\n'
      << (rep.corrected_verified ? "corrected element verified" : "corrected element NOT verified") << '\n';
  }
  emit(c, to_json(alg, rep), t.str());
  return rep.verified() ? 0 : 1;
}

int cmd_realize(const Config& c) {
  std::optional<LieAlgebra> alg;
  std::vector<UEAElement> elems;
  if (!c.gen.empty()) {
    alg = make_cga(spec_of(c));
    auto p = alg->find(c.gen);
    if (!p) throw std::invalid_argument("unknown generator '" + c.gen + "'");
    elems.push_back(UEAElement::generator(*p));
  } else if (!c.in.empty()) {
    auto doc = read_json(c.in);
    alg = algebra_for_document(c, doc);
    elems = elements_from_document(*alg, doc);
  } else {
    throw std::invalid_argument("--in or --gen is required");
  }
  Realization rho(*alg);
  for (const auto& kv : solve_options(c).parameters.value_or(ParameterValues{})) rho.specialize(kv.first, kv.second);
  Json out = Json::array();
  std::ostringstream t;
  for (const auto& e : elems) {
    auto op = rho.realize(e);
    out.push_back(to_json(rho.vars(), op));
    t << op.format(rho.vars()) << (is_parameter_scalar(op, rho.vars()).scalar ? "  [parameter scalar]" : "") << '\n';
  }
  emit(c, Json{{"spec", spec_to_json(*alg->spec())}, {"images", out}}, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir operators of centrally extended conformal Galilei algebras"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--d", c.d, "spatial dimension (1 or 2)");
    s->add_option("--ell", c.ell, "ell as p/q");
    s->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", c.out, "write the JSON artifact here");
    s->add_flag("--serial", c.serial, "run kernels on one thread");
  };
  auto params = [&](CLI::App* s) {
    s->add_option("--param", c.params, "fix a realization parameter, NAME=VALUE");
    s->add_flag("--symbolic-params", c.symbolic_params, "keep every realization parameter symbolic");
  };

  auto* algebra = app.add_subcommand("algebra", "print basis and brackets");
  common(algebra);
  auto* rank = app.add_subcommand("rank", "number of Casimir invariants from the commutator table");
  common(rank);
  rank->add_option("--trials", c.trials);
  rank->add_option("--seed", c.seed);
  auto* solve = app.add_subcommand("solve", "search for Casimir operators");
  common(solve);
  params(solve);
  solve->add_option("--degree", c.degree);
  solve->add_option("--grade", c.grade, "auto or comma-separated components");
  solve->add_option("--method", c.method)->check(CLI::IsMember({"algebraic", "pipeline"}));
  auto* verify = app.add_subcommand("verify", "check [K, x] = 0 for every generator");
  common(verify);
  verify->add_option("--in", c.in)->required();
  auto* theorem = app.add_subcommand("theorem", "build and check a closed-form Casimir");
  common(theorem);
  theorem->add_option("--which", c.which)->required()->check(CLI::IsMember({"quadratic", "quartic"}));
  theorem->add_option("--reading", c.reading)->check(CLI::IsMember({"split", "literal"}));
  theorem->add_flag("--extend-ranges", c.extend_ranges);
  auto* realize = app.add_subcommand("realize", "differential-operator image");
  common(realize);
  params(realize);
  realize->add_option("--in", c.in);
  realize->add_option("--gen", c.gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*algebra) return cmd_algebra(c);
    if (*rank) return cmd_rank(c);
    if (*solve) return cmd_solve(c);
    if (*verify) return cmd_verify(c);
    if (*theorem) return cmd_theorem(c);
    if (*realize) return cmd_realize(c);
  } catch (const std::invalid_argument& e) {  // InvalidSpec and OutOfTheoremRange included
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
