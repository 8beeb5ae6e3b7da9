#include "cga/theorems.hpp"

#include <algorithm>
#include <map>

namespace cga {

std::string to_string(TheoremKind k) { return k == TheoremKind::Quadratic ? "quadratic" : "quartic"; }

TheoremKind parse_theorem_kind(const std::string& s) {
  if (s == "quadratic") return TheoremKind::Quadratic;
  if (s == "quartic") return TheoremKind::Quartic;
  throw std::invalid_argument("unknown theorem kind '" + s + "'");
}

std::string to_string(UReading r) { return r == UReading::Split ? "split" : "literal"; }

UReading parse_u_reading(const std::string& s) {
  if (s == "split") return UReading::Split;
  if (s == "literal") return UReading::Literal;
  throw std::invalid_argument("unknown U reading '" + s + "'");
}

UEAElement TheoremExpansion::element(bool include_extrapolated) const {
  UEAElement out;
  for (const auto& t : terms)
    if (include_extrapolated || !t.extrapolated) out += t.family * t.value;
  return out;
}

namespace {

Rational fac(long n) { return Rational(factorial(n)); }
Rational sgn1(long e) { return Rational(sign_pow(e)); }
std::string idx(long i) { return "[" + std::to_string(i) + "]"; }
std::string idx(long i, long j) { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

// Products of named generators, normal-ordered; families are sums of these.
class Builder {
 public:
  Builder(const LieAlgebra& alg, TheoremExpansion& out) : alg_(alg), out_(out) {}

  int P(long n) const { return alg_.position(GenKind::P, static_cast<int>(n)); }
  int Q(long n) const { return alg_.position(GenKind::Q, static_cast<int>(n)); }
  int g(GenKind k) const { return alg_.position(k); }

  UEAElement prod(std::initializer_list<int> w) const {
    std::vector<int> v(w);
    return normal_order(alg_, v);
  }

  void add(std::string name, Rational value, UEAElement family, bool extrapolated = false) {
    out_.terms.push_back({std::move(name), std::move(value), std::move(family), extrapolated});
  }

 private:
  const LieAlgebra& alg_;
  TheoremExpansion& out_;
};

// d=1 quartic, l = h + 1/2 with h >= 2.
void expand_d1_quartic(Builder& b, long h) {
  const long L2 = 2 * h + 1;  // 2l
  const Rational ell = make_rational(L2, 2);
  const Rational F = fac(2 * h);  // (2l-1)!
  const int M = b.g(GenKind::M), H = b.g(GenKind::H), D = b.g(GenKind::D), C = b.g(GenKind::C);
  auto P = [&](long n) { return b.P(n); };

  b.add("alpha", sgn1(h) * F * (Rational(h + 1) * (h + 1) / 2 + 1), b.prod({M, M, D}));
  b.add("beta", sgn1(h + 1) * F / 2, b.prod({M, M, D, D}));
  b.add("gamma", -2 * sgn1(h + 1) * F, b.prod({M, M, H, C}));

  auto psi = [&](long i) -> Rational { return 2 * sgn1(i + 1) * F / (fac(i) * fac(L2 - i - 1)); };
  b.add("psi" + idx(h - 1), psi(h - 1), b.prod({M, H, P(h), P(h + 2)}) + b.prod({M, P(h - 1), P(h + 1), C}));
  b.add("psi" + idx(h), -sgn1(h) * F / (fac(h) * fac(h)),
        b.prod({M, H, P(h + 1), P(h + 1)}) + b.prod({M, P(h), P(h), C}));

  for (long i = 0; i <= h; ++i) {
    Rational v;
    if (i == h - 1) {
      v = -7 * sgn1(h + 1) * Rational(h) * F / (2 * fac(h - 1) * fac(h + 1));
    } else if (i == h) {
      v = sgn1(h + 1) * Rational(h + 1) * (5 + 4 * ell * (ell + 1)) * F / (8 * fac(h + 1) * fac(h + 1));
    } else {
      v = sgn1(i) * (Rational(i) * (L2 + 1) * (L2 + 1) + ell * (7 - 4 * ell * (ell - 1))) * F /
          (4 * fac(i) * fac(L2 - i));
    }
    b.add("varphi" + idx(i), v, b.prod({M, P(i), P(L2 - i)}));
  }
  for (long i = 0; i <= h - 2; ++i)
    b.add("psi" + idx(i), psi(i), b.prod({M, P(i + 1), H, P(L2 - i)}) + b.prod({M, P(i), C, P(L2 - i - 1)}));
  for (long i = 0; i <= h; ++i)
    b.add("theta" + idx(i), sgn1(i) * Rational(L2 - 2 * i) * F / (fac(i) * fac(L2 - i)),
          b.prod({M, P(i), D, P(L2 - i)}));

  auto X = [&](long i, long j) { return b.prod({P(i), P(j), P(L2 - j), P(L2 - i)}); };
  for (long i = 0; i <= h; ++i) {
    for (long j = i; j <= h; ++j) {
      Rational v;
      Rational ii(i), jj(j);
      if (i == h && j == h) {
        v = -sgn1(h + 1) * Rational(h + 2) * F / (2 * Rational(h + 1) * fac(h - 1) * fac(h + 1) * fac(h + 1) * fac(h + 1));
      } else if (j == i + 1) {
        v = 4 * sgn1(h) * (-ii * (ii - 1 - L2) / 2 + (ii - ell) * (ii - ell)) * F /
            ((ii + 1) * fac(L2 - i) * fac(L2 - i - 1) * fac(i) * fac(i));
      } else if (j == i) {
        v = -2 * sgn1(h) * (ii - ell) * (ii - ell) * F / (fac(i) * fac(i) * fac(L2 - i) * fac(L2 - i));
      } else {
        v = 4 * sgn1(h + i - j + 3) * (ii - ell) * (jj - ell) * F / (fac(i) * fac(j) * fac(L2 - i) * fac(L2 - j));
      }
      b.add("tau" + idx(i, j), v, X(i, j));
    }
  }
  for (long i = 0; i <= h - 1; ++i) {
    for (long j = i; j <= h - 1; ++j) {
      Rational v = j == h - 1 ? Rational(sgn1(i) * F / (fac(i) * fac(L2 - i - 1) * fac(h) * fac(h)))
                              : Rational(2 * sgn1(h + i + j + 1) * F / (fac(i) * fac(j + 1) * fac(L2 - i - 1) * fac(L2 - j - 2)));
      b.add("lambda" + idx(i, j), v,
            b.prod({P(i + 1), P(j + 1), P(L2 - j - 2), P(L2 - i)}) + b.prod({P(i), P(j + 2), P(L2 - j - 1), P(L2 - i - 1)}));
    }
  }
}

void expand_d2_quadratic(Builder& b, long l) {
  const int Th = b.g(GenKind::Theta), J = b.g(GenKind::J);
  b.add("ThetaJ", Rational(-1), b.prod({Th, J}));
  for (long m = 0; m < l; ++m)
    b.add("c" + idx(m), sgn1(m + 1) / (fac(m) * fac(2 * l - m)),
          b.prod({b.Q(m), b.P(2 * l - m)}) + b.prod({b.P(m), b.Q(2 * l - m)}));
  b.add("c" + idx(l), sgn1(l + 1) / (fac(l) * fac(l)), b.prod({b.Q(l), b.P(l)}));
}

// d=2 quartic, l >= 3. The statement names the Z_ij coefficient zeta but
// tabulates it under a different letter; both are the same family here.
void expand_d2_quartic(Builder& b, long l, UReading reading, bool extend) {
  const long L2 = 2 * l;
  const Rational F = fac(L2 - 1);
  const int Th = b.g(GenKind::Theta), H = b.g(GenKind::H), D = b.g(GenKind::D), C = b.g(GenKind::C);
  auto P = [&](long n) { return b.P(n); };
  auto Q = [&](long n) { return b.Q(n); };

  b.add("alpha", -(Rational(l) * (l + 1) + 1) * F, b.prod({Th, Th, D}));
  b.add("beta", F / 2, b.prod({Th, Th, D, D}));
  b.add("gamma", -2 * F, b.prod({Th, Th, H, C}));

  auto psi = [&](long i) -> Rational { return 2 * sgn1(i) * F / (fac(i) * fac(L2 - i - 1)); };
  b.add("psi" + idx(l - 1), psi(l - 1), b.prod({Th, H, P(l), Q(l + 1)}) + b.prod({Th, P(l - 1), Q(l), C}));
  b.add("psi'" + idx(l - 1), -psi(l - 1), b.prod({Th, H, Q(l), P(l + 1)}) + b.prod({Th, Q(l - 1), P(l), C}));
  b.add("delta" + idx(l - 1), -2 * F / (fac(l) * fac(l - 1) * fac(l) * fac(l - 1)),
        b.prod({Q(l - 1), Q(l), P(l), P(l + 1)}) + b.prod({P(l - 1), Q(l), P(l), Q(l + 1)}));

  for (long i = 0; i <= l - 1; ++i) {
    Rational v, vp;
    if (i == l - 1) {
      v = -2 * sgn1(l) * F / (fac(l - 1) * fac(l - 1));
      vp = 4 * sgn1(l) * F / (fac(l - 1) * fac(l - 1));
    } else {
      Rational den = fac(i) * fac(L2 - i);
      v = -sgn1(i) * (1 + Rational(i - l)) * (l + 1) * fac(L2) / den;
      vp = sgn1(i) * (-1 + Rational(l - i)) * (l + 1) * fac(L2) / den;
    }
    b.add("varphi" + idx(i), v, b.prod({Th, P(i), Q(L2 - i)}));
    b.add("varphi'" + idx(i), vp, b.prod({Th, Q(i), P(L2 - i)}));
  }
  for (long i = 0; i <= l - 2; ++i) {
    b.add("psi" + idx(i), psi(i), b.prod({Th, P(i + 1), H, Q(L2 - i)}) + b.prod({Th, P(i), C, Q(L2 - i - 1)}));
    b.add("psi'" + idx(i), -psi(i), b.prod({Th, Q(i + 1), H, P(L2 - i)}) + b.prod({Th, Q(i), C, P(L2 - i - 1)}));
  }
  for (long i = 0; i <= l - 1; ++i) {
    Rational v = -sgn1(i) * Rational(L2 - 2 * i) * F / (fac(i) * fac(L2 - i));
    b.add("phi" + idx(i), v, b.prod({Th, P(i), D, Q(L2 - i)}));
    b.add("phi'" + idx(i), -v, b.prod({Th, Q(i), D, P(L2 - i)}));
  }
  for (long i = 0; i <= l - 1; ++i) {
    Rational sq = fac(i) * fac(L2 - i - 1);
    sq *= sq;
    b.add("rho" + idx(i), 2 * F / sq,
          b.prod({P(i), Q(i + 1), Q(L2 - i - 1), P(L2 - i)}) + b.prod({Q(i), P(i + 1), P(L2 - i - 1), Q(L2 - i)}));
  }
  for (long i = 0; i <= l - 1; ++i) {
    Rational sq = fac(i) * fac(L2 - i - 1);
    sq *= sq;
    Rational d(i - l);
    b.add("eta" + idx(i), -4 * ((1 + d) - 1) * d * F / sq, b.prod({Q(i), P(i), Q(L2 - i), P(L2 - i)}));
  }
  for (long i = 0; i <= l - 2; ++i)
    b.add("mu" + idx(i), -2 * F / (fac(i) * fac(i + 1) * fac(L2 - i - 1) * fac(L2 - i - 2)),
          b.prod({P(i), Q(i + 2), Q(L2 - i - 1), P(L2 - i - 1)}) + b.prod({Q(i + 1), P(i + 1), P(L2 - i - 2), Q(L2 - i)}));

  auto X = [&](long i, long j) {
    return b.prod({P(i), P(j), Q(L2 - j), Q(L2 - i)}) + b.prod({Q(i), Q(j), P(L2 - j), P(L2 - i)});
  };
  auto tau_next = [&](long i) -> Rational {  // tau[i,i+1]
    Rational ii(i);
    Rational sq = fac(i + 1) * fac(L2 - i);
    sq *= sq;
    return 2 * (ii + ii * ii - 2 * ii * l + 2 * Rational(l) * l) * (ii + 1) * (ii - L2) * F / sq;
  };
  for (long i = 0; i <= l - 1; ++i) {
    for (long j = i; j <= l - 1; ++j) {
      Rational v;
      if (i == 0 && j == 0) {
        v = 1 / (2 * F);
      } else if (i == l - 1 && j == l - 1) {
        Rational num = Rational(l + 2) * fac(l - 1) * fac(l) - Rational(l) * fac(l - 2) * fac(l + 1);
        Rational den = fac(l - 1) * fac(l + 1);
        v = -F * num / (fac(l - 2) * fac(l) * den * den);
      } else if (i == j) {
        Rational sq = fac(i) * fac(L2 - i);  // tau[i'+1,i'+1] with i = i'+1
        sq *= sq;
        v = 2 * Rational(i - l) * (i - l) * F / sq;
      } else if (j == i + 1) {
        if (i > l - 3) continue;  // outside the stated range; see extend below
        v = tau_next(i);
      } else {
        long jj = j - 2;
        if (i > l - 3 || jj > l - 3) continue;
        v = 4 * sgn1(i + jj + 1) * Rational(l - i) * (j - l) * F / (fac(i) * fac(j) * fac(L2 - i) * fac(L2 - j));
      }
      b.add("tau" + idx(i, j), v, X(i, j));
    }
  }
  for (long i = 0; i <= l - 2; ++i) {
    for (long j = i; j <= l - 2; ++j) {
      Rational lam = 2 * sgn1(i + j + 1) * F / (fac(i) * fac(j + 1) * fac(L2 - i - 1) * fac(L2 - j - 2));
      b.add("lambda" + idx(i, j), lam,
            b.prod({Q(i), P(j + 2), Q(L2 - j - 1), P(L2 - i - 1)}) + b.prod({Q(i + 1), P(j + 1), Q(L2 - j - 2), P(L2 - i)}));
      b.add("zeta" + idx(i, j),
            -4 * sgn1(i + j + 1) * Rational(l - i) * (l - j - 1) * F / (fac(i) * fac(j + 1) * fac(L2 - i) * fac(L2 - j - 1)),
            b.prod({P(i), Q(j + 1), P(L2 - j - 1), Q(L2 - i)}) + b.prod({Q(i), P(j + 1), Q(L2 - j - 1), P(L2 - i)}));
      UEAElement U = b.prod({Q(i), Q(j + 2), P(L2 - j - 1), P(L2 - i - 1)}) +
                     b.prod({Q(i + 1), Q(j + 1), P(L2 - j - 2), P(L2 - i)});
      if (reading == UReading::Split) {
        U += b.prod({P(i), P(j + 2), Q(L2 - j - 1), Q(L2 - i - 1)});
        U += b.prod({P(i + 1), P(j + 1), Q(L2 - j - 2), Q(L2 - i)});
      } else {
        U += b.prod({P(i), P(j + 2), Q(L2 - j - 1), Q(L2 - i - 1), P(i + 1), P(j + 1), Q(L2 - j - 2), Q(L2 - i)});
      }
      b.add("omega" + idx(i, j), -lam, std::move(U));
    }
  }
  for (long i = 0; i <= l - 3; ++i)
    for (long j = i; j <= l - 3; ++j)
      b.add("epsilon" + idx(i, j), 2 * sgn1(l - i - j - 2) * F / (fac(i) * fac(j + 2) * fac(L2 - i - 1) * fac(L2 - j - 3)),
            b.prod({P(i), Q(j + 3), P(L2 - j - 2), Q(L2 - i - 1)}) + b.prod({P(i + 1), Q(j + 2), P(L2 - j - 3), Q(L2 - i)}));

  if (extend) b.add("tau" + idx(l - 2, l - 1), tau_next(l - 2), X(l - 2, l - 1), true);
}

}  // namespace

TheoremExpansion expand_theorem(const AlgebraSpec& spec, TheoremKind kind, UReading reading) {
  spec.validate();
  TheoremExpansion out;
  out.spec = spec;
  out.kind = kind;
  auto alg = make_cga(spec);
  Builder b(alg, out);
  const long L2 = spec.two_ell();
  if (spec.d == 1) {
    if (kind == TheoremKind::Quadratic) throw OutOfTheoremRange("no quadratic closed form for d=1");
    if (L2 < 5) throw OutOfTheoremRange("the d=1 quartic closed form needs ell >= 5/2");
    out.theorem = "d1-quartic";
    expand_d1_quartic(b, (L2 - 1) / 2);
  } else if (kind == TheoremKind::Quadratic) {
    out.theorem = "d2-quadratic";
    expand_d2_quadratic(b, L2 / 2);
  } else {
    if (L2 < 6) throw OutOfTheoremRange("the d=2 quartic closed form needs ell >= 3");
    out.theorem = "d2-quartic";
    expand_d2_quartic(b, L2 / 2, reading, true);
  }
  std::stable_partition(out.terms.begin(), out.terms.end(), [](const TheoremTerm& t) { return !t.extrapolated; });
  return out;
}

UEAElement build_theorem_casimir(const AlgebraSpec& spec, TheoremKind kind, const TheoremOptions& opts) {
  return expand_theorem(spec, kind, opts.reading).element(opts.extend_ranges);
}

TargetGrade theorem_target(const AlgebraSpec& spec, TheoremKind kind) {
  GradeVector c = central_grade(spec);
  if (kind == TheoremKind::Quadratic) return {c, 2};
  return {2 * c, 4};
}

std::vector<const CoefficientCheck*> TheoremReport::mismatches() const {
  std::vector<const CoefficientCheck*> out;
  for (const auto& c : coefficients)
    if (!c.matches) out.push_back(&c);
  return out;
}

TheoremReport check_theorem(const AlgebraSpec& spec, TheoremKind kind, const TheoremOptions& opts,
                            const SolveOptions& solve) {
  auto ex = expand_theorem(spec, kind, opts.reading);
  auto alg = make_cga(spec);
  TheoremReport rep;
  rep.theorem = ex.theorem;
  rep.spec = spec;
  rep.kind = kind;
  rep.reading = opts.reading;
  rep.extend_ranges = opts.extend_ranges;
  rep.element = ex.element(opts.extend_ranges);
  rep.failure = verify_casimir(alg, rep.element);

  auto target = theorem_target(spec, kind);
  auto sol = solve_casimirs(alg, target.grade, target.degree, Method::Algebraic, solve);
  if (sol.canonical.size() != 1) throw std::logic_error("expected a single canonical Casimir at the theorem grade");
  const UEAElement& K = sol.canonical.front();
  rep.in_casimir_span = span_contains(sol.casimir_basis, {rep.element});
  auto ansatz = enumerate_ansatz(alg, target.grade, target.degree);
  for (const auto& [m, c] : rep.element.terms())
    if (ansatz.index_of(m) < 0) rep.stray.add_term(m, c);

  // Fit K = sum_k c_k F_k over the monomials the families cover.
  std::map<Monomial, std::size_t> row_of;
  for (const auto& t : ex.terms)
    for (const auto& [m, c] : t.family.terms()) row_of.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, i] : row_of) i = r++;
  const std::size_t n = ex.terms.size();
  std::vector<SparseRow> rows(row_of.size());
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [m, c] : ex.terms[k].family.terms()) rows[row_of.at(m)].emplace_back(k, c);
  UEAElement uncovered;
  for (const auto& [m, c] : K.terms()) {
    auto it = row_of.find(m);
    if (it == row_of.end())
      uncovered.add_term(m, c);
    else
      rows[it->second].emplace_back(n, c);
  }
  SparseMatrix aug;
  aug.cols = n + 1;
  for (auto& row : rows) aug.add_row(std::move(row));
  auto red = rref(aug);
  std::vector<Rational> fitted(n);
  for (const auto& row : red) {
    if (row.front().first == n) {
      rep.fit_consistent = false;
      continue;
    }
    if (row.back().first == n) fitted[row.front().first] = row.back().second;
  }
  if (red.size() < n && rep.fit_consistent) {
    // Free families: any choice reproduces K, so they are reported at 0.
    std::size_t pivots = 0;
    for (const auto& row : red) pivots += row.front().first < n;
    if (pivots < n) rep.fit_consistent = false;
  }

  std::map<Rational, int, std::less<>> votes;
  std::vector<Rational> first_seen;
  for (std::size_t k = 0; k < n; ++k) {
    if (ex.terms[k].extrapolated || sgn(fitted[k]) == 0 || sgn(ex.terms[k].value) == 0) continue;
    Rational q = ex.terms[k].value / fitted[k];
    if (votes[q]++ == 0) first_seen.push_back(q);
  }
  rep.scale = 1;
  int best = 0;
  for (const auto& q : first_seen)
    if (votes[q] > best) best = votes[q], rep.scale = q;

  for (std::size_t k = 0; k < n; ++k) {
    const auto& t = ex.terms[k];
    CoefficientCheck c;
    c.name = t.name;
    c.extrapolated = t.extrapolated;
    c.stated = t.extrapolated && !opts.extend_ranges ? Rational(0) : t.value;
    c.fitted = rep.scale * fitted[k];
    c.matches = c.stated == c.fitted;
    rep.coefficients.push_back(std::move(c));
  }
  rep.unaccounted = uncovered * rep.scale;
  rep.corrected = K * rep.scale;
  rep.corrected_verified = !verify_casimir(alg, rep.corrected);
  return rep;
}

}  // namespace cga
