#include "cga/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cga/kernels.hpp"

namespace cga {

std::vector<DenseVector> nullspace(const LinearSystem& sys) { return nullspace(sys.matrix); }

UEAElement element_from_vector(const AnsatzBasis& basis, const DenseVector& v) {
  UEAElement out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.add_term(basis.monomials.at(i), v[i]);
  return out;
}

DenseVector vector_from_element(const AnsatzBasis& basis, const UEAElement& a) {
  DenseVector v(basis.size());
  for (const auto& [m, c] : a.terms()) {
    long i = basis.index_of(m);
    if (i < 0) throw std::invalid_argument("element leaves the ansatz");
    v[static_cast<std::size_t>(i)] = c;
  }
  return v;
}

std::vector<int> lemma_generators(const LieAlgebra& alg) {
  const auto& spec = *alg.spec();
  int top = spec.two_ell();
  std::vector<int> g{alg.position(GenKind::H)};
  if (spec.d == 2) g.push_back(alg.position(GenKind::J));
  g.push_back(alg.position(GenKind::P, top));
  if (spec.d == 2) g.push_back(alg.position(GenKind::Q, top));
  return g;
}

namespace {

// Turns per-column images into rows keyed by output monomial; columns are
// visited in increasing order so each row stays sorted.
template <class Key>
void append_rows(std::map<Key, SparseRow>& rows, std::size_t col, const std::map<Key, Rational>& terms) {
  for (const auto& [k, c] : terms) rows[k].emplace_back(col, c);
}

}  // namespace

LinearSystem lemma_system(const LieAlgebra& alg, const AnsatzBasis& ansatz, Exec exec) {
  LinearSystem sys;
  sys.columns = ansatz;
  sys.matrix.cols = ansatz.size();

  auto defects = kernels::omega_defects(alg, ansatz.monomials, exec);
  std::map<Monomial, SparseRow> om;
  for (std::size_t i = 0; i < defects.size(); ++i) append_rows(om, i, defects[i].terms());
  for (auto& [m, row] : om) {
    sys.row_tags.push_back("omega:" + format(alg, m));
    sys.matrix.add_row(std::move(row));
  }

  auto gens = lemma_generators(alg);
  auto images = kernels::commutator_images(alg, ansatz.monomials, gens, exec);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::map<Monomial, SparseRow> rows;
    for (std::size_t i = 0; i < images[g].size(); ++i) append_rows(rows, i, images[g][i].terms());
    std::string tag = "[K," + alg.generator(gens[g]).name() + "]:";
    for (auto& [m, row] : rows) {
      sys.row_tags.push_back(tag + format(alg, m));
      sys.matrix.add_row(std::move(row));
    }
  }
  return sys;
}

LinearSystem realization_system(const Realization& rho, const AnsatzBasis& ansatz, Exec exec) {
  LinearSystem sys;
  sys.columns = ansatz;
  sys.matrix.cols = ansatz.size();
  auto images = kernels::realization_images(rho, ansatz.monomials, exec);
  std::map<DiffOp::Key, SparseRow> rows;
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto chk = is_parameter_scalar(images[i], rho.vars());
    append_rows(rows, i, chk.residual.terms());
  }
  for (auto& [k, row] : rows) {
    DiffOp probe;
    probe.add_term(k, 1);
    sys.row_tags.push_back("rho:" + probe.format(rho.vars()));
    sys.matrix.add_row(std::move(row));
  }
  return sys;
}

namespace {

std::vector<DenseVector> echelon_basis(std::size_t cols, const std::vector<DenseVector>& vs) {
  SparseMatrix m;
  m.cols = cols;
  for (const auto& v : vs) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
    m.add_row(std::move(r));
  }
  std::vector<DenseVector> out;
  for (const auto& r : rref(m)) {
    DenseVector v(cols);
    for (const auto& [c, x] : r) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<UEAElement> to_elements(const AnsatzBasis& basis, const std::vector<DenseVector>& vs) {
  std::vector<UEAElement> out;
  for (const auto& v : vs) out.push_back(element_from_vector(basis, v));
  return out;
}

const ParameterValues& effective_parameters(const AlgebraSpec& spec, const SolveOptions& opts,
                                            ParameterValues& storage) {
  if (opts.parameters) return *opts.parameters;
  storage = default_candidate_parameters(spec);
  return storage;
}

std::vector<DenseVector> realization_candidates(const LieAlgebra& alg, const AnsatzBasis& ansatz,
                                                const ParameterValues& params, Exec exec) {
  Realization rho(alg);
  for (const auto& [name, v] : params) rho.specialize(name, v);
  return echelon_basis(ansatz.size(), nullspace(realization_system(rho, ansatz, exec)));
}

}  // namespace

ParameterValues default_candidate_parameters(const AlgebraSpec& spec) {
  if (spec.d == 2) return {{"r", Rational(0)}};
  return {};
}

std::vector<UEAElement> candidates_via_realization(const LieAlgebra& alg, const GradeVector& grade,
                                                   int max_degree, const SolveOptions& opts) {
  if (!alg.spec()) throw std::invalid_argument("candidate search needs a conformal Galilei algebra");
  auto ansatz = enumerate_ansatz(alg, grade, max_degree);
  ParameterValues tmp;
  const auto& params = effective_parameters(*alg.spec(), opts, tmp);
  return to_elements(ansatz, realization_candidates(alg, ansatz, params, opts.exec));
}

std::optional<VerifyFailure> verify_casimir(const LieAlgebra& alg, const UEAElement& K) {
  for (int x = 0; x < static_cast<int>(alg.dim()); ++x) {
    auto r = commutator(alg, K, x);
    if (!r.is_zero()) return VerifyFailure{x, std::move(r)};
  }
  return std::nullopt;
}

std::string to_string(Method m) { return m == Method::Algebraic ? "algebraic" : "pipeline"; }

Method parse_method(const std::string& s) {
  if (s == "algebraic") return Method::Algebraic;
  if (s == "pipeline") return Method::Pipeline;
  throw std::invalid_argument("unknown method '" + s + "'");
}

std::string to_string(Provenance p) { return p == Provenance::Theorem ? "theorem" : "pipeline"; }

CasimirReport solve_casimirs(const LieAlgebra& alg, const GradeVector& grade, int max_degree, Method method,
                             const SolveOptions& opts) {
  if (!alg.spec()) throw std::invalid_argument("solver needs a conformal Galilei algebra");
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  CasimirReport rep;
  rep.spec = *alg.spec();
  rep.grade = grade;
  rep.max_degree = max_degree;
  rep.method = method;
  auto ansatz = enumerate_ansatz(alg, grade, max_degree);
  rep.ansatz_dim = ansatz.size();

  auto lemma = lemma_system(alg, ansatz, opts.exec);
  std::vector<DenseVector> sol;
  if (method == Method::Algebraic) {
    rep.candidate_dim = ansatz.size();
    sol = nullspace(lemma);
  } else {
    ParameterValues tmp;
    rep.parameters = effective_parameters(rep.spec, opts, tmp);
    auto cand = realization_candidates(alg, ansatz, rep.parameters, opts.exec);
    rep.candidate_basis = to_elements(ansatz, cand);
    rep.candidate_dim = cand.size();
    // Restrict the reduced conditions to span(cand): row r becomes r . cand_j.
    SparseMatrix m;
    m.cols = cand.size();
    for (const auto& row : lemma.matrix.rows) {
      SparseRow out;
      for (std::size_t j = 0; j < cand.size(); ++j) {
        Rational s = 0;
        for (const auto& [c, x] : row) s += x * cand[j][c];
        if (sgn(s) != 0) out.emplace_back(j, s);
      }
      m.add_row(std::move(out));
    }
    for (const auto& a : nullspace(m)) {
      DenseVector v(ansatz.size());
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (sgn(a[j]) != 0)
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += a[j] * cand[j][i];
      sol.push_back(std::move(v));
    }
  }
  rep.casimir_basis = to_elements(ansatz, echelon_basis(ansatz.size(), sol));

  for (const auto& K : rep.casimir_basis) {
    if (auto f = verify_casimir(alg, K)) {
      std::ostringstream os;
      os << "element satisfying the reduced conditions fails [K," << alg.generator(f->generator).name()
         << "] = 0\nK = " << format(alg, K) << "\nresidual = " << format(alg, f->residual);
      throw LemmaViolation(os.str());
    }
  }

  rep.known_products = lower_casimir_products(alg, grade, max_degree, method, opts);
  rep.canonical = canonical_complement(alg, ansatz, rep.casimir_basis, rep.known_products);

  rep.verified = true;
  for (int x = 0; x < static_cast<int>(alg.dim()); ++x) {
    Rational worst = 0;
    for (const auto* set : {&rep.casimir_basis, &rep.canonical})
      for (const auto& K : *set) worst = std::max(worst, commutator(alg, K, x).l1_norm());
    if (sgn(worst) != 0) rep.verified = false;
    rep.verification.push_back({x, worst});
  }
  return rep;
}

std::vector<UEAElement> lower_casimir_products(const LieAlgebra& alg, const GradeVector& grade, int max_degree,
                                               Method method, const SolveOptions& opts) {
  const auto& spec = *alg.spec();
  long N = central_multiple(spec, grade);
  if (N == 0) return {};
  int z = alg.central_positions().at(0);

  struct Factor {
    UEAElement e;
    long k;
    int degree;
  };
  std::vector<Factor> factors{{UEAElement::generator(z), 1, 1}};
  GradeVector c = central_grade(spec);
  for (long k = 1; k < N; ++k) {
    int bound = max_degree - static_cast<int>(N - k);
    if (bound < 1) continue;
    auto sub = solve_casimirs(alg, k * c, bound, method, opts);
    for (auto& K : sub.canonical) factors.push_back({K, k, K.degree()});
  }

  std::vector<UEAElement> out;
  std::vector<std::size_t> pick;
  // Multisets of factors as non-decreasing index sequences.
  auto rec = [&](auto&& self, std::size_t from, long k_left, int deg_left) -> void {
    if (k_left == 0) {
      bool lone_central = pick.size() == 1 && pick[0] == 0;
      if (pick.size() >= 2 || lone_central) {
        UEAElement p = UEAElement::one();
        for (auto i : pick) p = multiply(alg, p, factors[i].e);
        out.push_back(std::move(p));
      }
      return;
    }
    for (std::size_t i = from; i < factors.size(); ++i) {
      if (factors[i].k > k_left || factors[i].degree > deg_left) continue;
      pick.push_back(i);
      self(self, i, k_left - factors[i].k, deg_left - factors[i].degree);
      pick.pop_back();
    }
  };
  rec(rec, 0, N, max_degree);
  return out;
}

std::vector<UEAElement> canonical_complement(const LieAlgebra& alg, const AnsatzBasis& ansatz,
                                             const std::vector<UEAElement>& space,
                                             const std::vector<UEAElement>& known) {
  const auto& spec = alg.spec();
  int z = spec ? alg.central_positions().at(0) : -1;
  std::size_t n = ansatz.size();
  // perm[p] = ansatz column placed at priority p.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto zexp = [&](std::size_t i) { return z < 0 ? 0 : ansatz.monomials[i].exponent(z); };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return zexp(a) > zexp(b); });
  std::vector<std::size_t> where(n);
  for (std::size_t p = 0; p < n; ++p) where[perm[p]] = p;

  auto permuted = [&](const UEAElement& e) {
    SparseRow r;
    for (const auto& [m, c] : e.terms()) {
      long i = ansatz.index_of(m);
      if (i < 0) throw std::invalid_argument("element leaves the ansatz");
      r.emplace_back(where[static_cast<std::size_t>(i)], c);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };

  SparseMatrix km;
  km.cols = n;
  for (const auto& e : known) km.add_row(permuted(e));
  auto kr = rref(km);

  SparseMatrix rest;
  rest.cols = n;
  for (const auto& e : space) {
    DenseVector v(n);
    for (const auto& [c, x] : permuted(e)) v[c] = x;
    for (const auto& row : kr) {
      Rational f = v[row.front().first];
      if (sgn(f) == 0) continue;
      for (const auto& [c, x] : row) v[c] -= f * x;
    }
    SparseRow r;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
    rest.add_row(std::move(r));
  }

  std::vector<UEAElement> out;
  for (const auto& row : rref(rest)) {
    DenseVector v(n);
    for (const auto& [c, x] : row) v[perm[c]] = x;
    out.push_back(element_from_vector(ansatz, primitive(std::move(v))));
  }
  return out;
}

namespace {

// Column index over the union of monomials of all elements involved.
struct Coords {
  std::map<Monomial, std::size_t> index;
  explicit Coords(std::initializer_list<const std::vector<UEAElement>*> sets) {
    for (auto* s : sets)
      for (const auto& e : *s)
        for (const auto& [m, c] : e.terms()) index.emplace(m, 0);
    std::size_t i = 0;
    for (auto& [m, k] : index) k = i++;
  }
  SparseRow row(const UEAElement& e) const {
    SparseRow r;
    for (const auto& [m, c] : e.terms()) r.emplace_back(index.at(m), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }
};

}  // namespace

bool span_contains(const std::vector<UEAElement>& b, const std::vector<UEAElement>& a) {
  Coords co{&a, &b};
  SparseMatrix m;
  m.cols = co.index.size();
  for (const auto& e : b) m.add_row(co.row(e));
  std::size_t r0 = rank(m);
  for (const auto& e : a) m.add_row(co.row(e));
  return rank(m) == r0;
}

bool same_span(const std::vector<UEAElement>& a, const std::vector<UEAElement>& b) {
  return span_contains(a, b) && span_contains(b, a);
}

std::optional<Rational> proportional(const UEAElement& a, const UEAElement& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  if (!(ia->first == ib->first)) return std::nullopt;
  Rational lambda = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != lambda * ib->second) return std::nullopt;
  }
  return lambda;
}

}  // namespace cga
