#include "cga/grading.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cga {

GradeVector& GradeVector::operator+=(const GradeVector& o) {
  if (components.size() != o.components.size()) throw std::invalid_argument("grade length mismatch");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += o.components[i];
  return *this;
}

bool GradeVector::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](long c) { return c == 0; });
}

std::string GradeVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(components[i]);
  }
  return s + ")";
}

GradeVector zero_grade(const AlgebraSpec& spec) {
  return GradeVector{std::vector<long>(spec.d == 1 ? 2 : 3, 0)};
}

GradeVector generator_grade(const LieAlgebra& alg, int pos) {
  if (!alg.spec()) throw std::invalid_argument("grading requires a conformal Galilei algebra");
  const AlgebraSpec& spec = *alg.spec();
  const long l2 = spec.two_ell();
  const GeneratorId& g = alg.generator(pos);
  const long n = g.index;
  if (spec.d == 1) {
    switch (g.kind) {
      case GenKind::P: return {{l2 - 2 * n, n}};
      case GenKind::H: return {{2, -1}};
      case GenKind::C: return {{-2, 1}};
      case GenKind::M: return {{0, l2}};
      case GenKind::D: return {{0, 0}};
      default: break;
    }
  } else {
    switch (g.kind) {
      case GenKind::P: return {{1, 0, -n}};
      case GenKind::Q: return {{-1, 1, l2 - n}};
      case GenKind::H: return {{0, 0, 1}};
      case GenKind::C: return {{0, 0, -1}};
      case GenKind::Theta: return {{0, 1, 0}};
      case GenKind::D:
      case GenKind::J: return {{0, 0, 0}};
      default: break;
    }
  }
  throw std::logic_error("generator without a grade");
}

GradeVector grade_of(const LieAlgebra& alg, const Monomial& m) {
  GradeVector g = zero_grade(*alg.spec());
  for (auto p : m.word()) g += generator_grade(alg, p);
  return g;
}

long AnsatzBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  if (it == monomials.end() || !(*it == m)) return -1;
  return it - monomials.begin();
}

namespace {

struct Enumerator {
  std::vector<GradeVector> grades;
  std::vector<std::vector<long>> suffix_bound;  // max |component| over positions >= p
  GradeVector target;
  int max_degree;
  std::vector<Monomial> out;
  Word word;

  bool reachable(const GradeVector& partial, std::size_t pos, int remaining) const {
    for (std::size_t c = 0; c < target.components.size(); ++c) {
      long gap = std::labs(target.components[c] - partial.components[c]);
      if (gap > static_cast<long>(remaining) * suffix_bound[pos][c]) return false;
    }
    return true;
  }

  void run(std::size_t pos, GradeVector partial) {
    const int remaining = max_degree - static_cast<int>(word.size());
    if (partial == target) out.emplace_back(word);
    if (pos >= grades.size() || remaining == 0) return;
    if (!reachable(partial, pos, remaining)) return;
    for (std::size_t p = pos; p < grades.size(); ++p) {
      word.push_back(static_cast<std::uint8_t>(p));
      run(p, partial + grades[p]);
      word.pop_back();
    }
  }
};

}  // namespace

AnsatzBasis enumerate_ansatz(const LieAlgebra& alg, const GradeVector& grade, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  Enumerator e;
  e.target = grade;
  e.max_degree = max_degree;
  const std::size_t n = alg.dim();
  for (std::size_t p = 0; p < n; ++p) e.grades.push_back(generator_grade(alg, static_cast<int>(p)));
  const std::size_t len = grade.components.size();
  e.suffix_bound.assign(n + 1, std::vector<long>(len, 0));
  for (std::size_t p = n; p-- > 0;) {
    for (std::size_t c = 0; c < len; ++c)
      e.suffix_bound[p][c] = std::max(e.suffix_bound[p + 1][c], std::labs(e.grades[p].components[c]));
  }
  e.run(0, zero_grade(*alg.spec()));
  std::sort(e.out.begin(), e.out.end());
  return AnsatzBasis{std::move(e.out), grade, max_degree};
}

GradeVector central_grade(const AlgebraSpec& spec) {
  if (spec.d == 1) return {{0, spec.two_ell()}};
  return {{0, 1, 0}};
}

std::vector<TargetGrade> default_target_grades(const AlgebraSpec& spec) {
  if (spec.d == 1) return {{2 * central_grade(spec), 4}};
  return {{central_grade(spec), 2}, {2 * central_grade(spec), 4}};
}

long central_multiple(const AlgebraSpec& spec, const GradeVector& grade) {
  GradeVector c = central_grade(spec);
  if (grade.components.size() != c.components.size()) return 0;
  long k = 0;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (c.components[i] == 0) {
      if (grade.components[i] != 0) return 0;
    } else {
      if (grade.components[i] % c.components[i] != 0) return 0;
      long ki = grade.components[i] / c.components[i];
      if (k != 0 && ki != k) return 0;
      k = ki;
    }
  }
  return k > 0 ? k : 0;
}

}  // namespace cga
