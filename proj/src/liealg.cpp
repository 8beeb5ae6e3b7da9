#include "cga/liealg.hpp"

#include <algorithm>
#include <random>

#include "cga/kernels.hpp"

namespace cga {

int AlgebraSpec::two_ell() const {
  Rational twice = ell * 2;
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p())
    throw InvalidSpec("ell must be a positive integer or half-integer");
  return static_cast<int>(twice.get_num().get_si());
}

void AlgebraSpec::validate() const {
  if (ell <= 0) throw InvalidSpec("ell must be positive");
  int l2 = two_ell();
  if (d == 1) {
    if (l2 % 2 == 0)
      throw InvalidSpec("d=1 requires half-odd ell: no central extension for integer ell");
  } else if (d == 2) {
    if (l2 % 2 != 0)
      throw InvalidSpec("d=2 requires integer ell: the exotic extension needs integer ell");
  } else {
    throw InvalidSpec("only d=1 and d=2 are supported");
  }
}

AlgebraSpec AlgebraSpec::make(int d, std::string_view ell) {
  AlgebraSpec s;
  s.d = d;
  try {
    s.ell = parse_rational(ell);
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(e.what());
  }
  s.validate();
  return s;
}

std::string GeneratorId::name() const {
  switch (kind) {
    case GenKind::M: return "M";
    case GenKind::P: return "P" + std::to_string(index);
    case GenKind::Q: return "Q" + std::to_string(index);
    case GenKind::H: return "H";
    case GenKind::D: return "D";
    case GenKind::C: return "C";
    case GenKind::J: return "J";
    case GenKind::Theta: return "Theta";
  }
  return "?";
}

LinearCombo scale(const LinearCombo& v, const Rational& c) {
  LinearCombo out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [pos, coeff] : v) out.emplace_back(pos, coeff * c);
  return out;
}

void axpy(LinearCombo& y, const Rational& a, const LinearCombo& x) {
  if (a == 0 || x.empty()) return;
  LinearCombo out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational s = iy->second + a * ix->second;
      if (s != 0) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

LieAlgebra::LieAlgebra(std::optional<AlgebraSpec> spec, std::vector<GeneratorId> basis)
    : spec_(std::move(spec)), basis_(std::move(basis)), upper_(basis_.size() * basis_.size()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) basis_[i].position = static_cast<int>(i);
}

int LieAlgebra::position(GenKind kind, int index) const {
  for (const auto& g : basis_) {
    if (g.kind == kind && (index < 0 || g.index == index)) return g.position;
  }
  throw std::out_of_range("generator not in algebra");
}

std::optional<int> LieAlgebra::find(std::string_view name) const {
  for (const auto& g : basis_) {
    if (g.name() == name) return g.position;
  }
  return std::nullopt;
}

void LieAlgebra::set_bracket(int i, int j, LinearCombo v) {
  if (i == j) throw std::invalid_argument("diagonal brackets are zero");
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(v, [](const auto& t) { return t.second == 0; });
  if (i > j) {
    std::swap(i, j);
    v = scale(v, -1);
  }
  upper_[static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j)] = std::move(v);
}

const LinearCombo& LieAlgebra::upper_bracket(int i, int j) const {
  return upper_.at(static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j));
}

LinearCombo LieAlgebra::bracket(int i, int j) const {
  if (i == j) return {};
  if (i < j) return upper_bracket(i, j);
  return scale(upper_bracket(j, i), -1);
}

bool LieAlgebra::is_central(int pos) const {
  for (int j = 0; j < static_cast<int>(dim()); ++j) {
    if (!bracket(pos, j).empty()) return false;
  }
  return true;
}

std::vector<int> LieAlgebra::central_positions() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(dim()); ++i) {
    if (is_central(i)) out.push_back(i);
  }
  return out;
}

Integer central_coefficient(const AlgebraSpec& spec, int m) {
  const int l2 = spec.two_ell();
  Integer mag = factorial(l2 - m) * factorial(m);
  // d=1: (-1)^(m + ell + 1/2); d=2: (-1)^m.
  long e = spec.d == 1 ? m + (l2 + 1) / 2 : m;
  return sign_pow(e) * mag;
}

namespace {

GeneratorId gen(GenKind k, int index = -1) { return GeneratorId{k, index, -1}; }

std::vector<GeneratorId> ordered_basis(const AlgebraSpec& spec) {
  const int l2 = spec.two_ell();
  std::vector<GeneratorId> b;
  if (spec.d == 1) {
    const int h = (l2 - 1) / 2;  // ell - 1/2
    b.push_back(gen(GenKind::M));
    for (int n = 0; n < h; ++n) b.push_back(gen(GenKind::P, n));
    b.push_back(gen(GenKind::H));
    b.push_back(gen(GenKind::P, h));
    b.push_back(gen(GenKind::D));
    b.push_back(gen(GenKind::P, h + 1));
    b.push_back(gen(GenKind::C));
    for (int n = h + 2; n <= l2; ++n) b.push_back(gen(GenKind::P, n));
  } else {
    const int l = l2 / 2;
    b.push_back(gen(GenKind::Theta));
    for (int n = 0; n < l; ++n) {
      b.push_back(gen(GenKind::Q, n));
      b.push_back(gen(GenKind::P, n));
    }
    b.push_back(gen(GenKind::H));
    b.push_back(gen(GenKind::D));
    b.push_back(gen(GenKind::J));
    b.push_back(gen(GenKind::Q, l));
    b.push_back(gen(GenKind::P, l));
    b.push_back(gen(GenKind::C));
    for (int n = l + 1; n <= l2; ++n) {
      b.push_back(gen(GenKind::Q, n));
      b.push_back(gen(GenKind::P, n));
    }
  }
  return b;
}

LinearCombo single(int pos, const Rational& c) {
  if (c == 0) return {};
  return {{pos, c}};
}

}  // namespace

LieAlgebra make_cga(const AlgebraSpec& spec) {
  spec.validate();
  LieAlgebra alg(spec, ordered_basis(spec));
  const int l2 = spec.two_ell();
  const int H = alg.position(GenKind::H);
  const int D = alg.position(GenKind::D);
  const int C = alg.position(GenKind::C);

  alg.set_bracket(D, H, single(H, 2));
  alg.set_bracket(D, C, single(C, -2));
  alg.set_bracket(C, H, single(D, 1));

  std::vector<GenKind> families{GenKind::P};
  if (spec.d == 2) families.insert(families.begin(), GenKind::Q);

  for (GenKind fam : families) {
    for (int n = 0; n <= l2; ++n) {
      const int pn = alg.position(fam, n);
      if (n > 0) alg.set_bracket(H, pn, single(alg.position(fam, n - 1), -n));
      alg.set_bracket(D, pn, single(pn, l2 - 2 * n));
      if (n < l2) alg.set_bracket(C, pn, single(alg.position(fam, n + 1), l2 - n));
    }
  }

  if (spec.d == 1) {
    const int M = alg.position(GenKind::M);
    for (int m = 0; 2 * m < l2; ++m) {
      alg.set_bracket(alg.position(GenKind::P, m), alg.position(GenKind::P, l2 - m),
                      single(M, Rational(central_coefficient(spec, m))));
    }
  } else {
    const int theta = alg.position(GenKind::Theta);
    const int J = alg.position(GenKind::J);
    for (int n = 0; n <= l2; ++n) {
      alg.set_bracket(J, alg.position(GenKind::Q, n), single(alg.position(GenKind::Q, n), 1));
      alg.set_bracket(J, alg.position(GenKind::P, n), single(alg.position(GenKind::P, n), -1));
    }
    for (int m = 0; m <= l2; ++m) {
      alg.set_bracket(alg.position(GenKind::Q, m), alg.position(GenKind::P, l2 - m),
                      single(theta, Rational(central_coefficient(spec, m))));
    }
  }
  return alg;
}

LinearCombo bracket(const LieAlgebra& alg, const GeneratorId& x, const GeneratorId& y) {
  return alg.bracket(x.position, y.position);
}

LinearCombo bracket(const LieAlgebra& alg, int x, const LinearCombo& v) {
  LinearCombo out;
  for (const auto& [pos, c] : v) axpy(out, c, alg.bracket(x, pos));
  return out;
}

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& alg) {
  const int n = static_cast<int>(alg.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        LinearCombo r = bracket(alg, i, alg.bracket(j, k));
        axpy(r, 1, bracket(alg, j, alg.bracket(k, i)));
        axpy(r, 1, bracket(alg, k, alg.bracket(i, j)));
        if (!r.empty()) return JacobiFailure{i, j, k, std::move(r)};
      }
    }
  }
  return std::nullopt;
}

long bb_count(const LieAlgebra& alg, int trials, std::uint64_t seed, Exec exec) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-10000, 10000);
  std::vector<std::vector<long>> points(static_cast<std::size_t>(trials));
  for (auto& p : points) {
    p.resize(alg.dim());
    for (auto& x : p) x = dist(rng);
  }
  std::vector<long> ranks = kernels::commutator_table_ranks(alg, points, exec);
  long best = *std::max_element(ranks.begin(), ranks.end());
  return static_cast<long>(alg.dim()) - best;
}

LieAlgebra abelian_algebra(std::size_t dim) {
  std::vector<GeneratorId> b;
  for (std::size_t i = 0; i < dim; ++i) b.push_back(GeneratorId{GenKind::P, static_cast<int>(i), -1});
  return LieAlgebra(std::nullopt, std::move(b));
}

}  // namespace cga
