#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cga/liealg.hpp"
#include "cga/uea.hpp"

namespace cga {

/// Artificial relative dimension of a monomial as an integer exponent tuple.
/// d=1 uses (alpha, beta) exponents scaled by 2*ell; d=2 uses the raw
/// (alpha, beta, gamma) exponents.
struct GradeVector {
  std::vector<long> components;

  GradeVector& operator+=(const GradeVector& o);
  friend GradeVector operator+(GradeVector a, const GradeVector& b) { return a += b; }
  friend GradeVector operator*(long k, GradeVector a) {
    for (auto& c : a.components) c *= k;
    return a;
  }
  friend bool operator==(const GradeVector&, const GradeVector&) = default;
  friend auto operator<=>(const GradeVector&, const GradeVector&) = default;

  bool is_zero() const;
  std::string str() const;
};

GradeVector zero_grade(const AlgebraSpec& spec);
GradeVector generator_grade(const LieAlgebra& alg, int pos);
GradeVector grade_of(const LieAlgebra& alg, const Monomial& m);

/// Every PBW monomial with exactly `grade` and degree <= max_degree, sorted by
/// display order.
struct AnsatzBasis {
  std::vector<Monomial> monomials;
  GradeVector grade;
  int max_degree = 0;

  std::size_t size() const { return monomials.size(); }
  /// Index of m in `monomials`, or -1.
  long index_of(const Monomial& m) const;
};

AnsatzBasis enumerate_ansatz(const LieAlgebra& alg, const GradeVector& grade, int max_degree);

struct TargetGrade {
  GradeVector grade;
  int degree;
};

/// d=1: (0, 4l scaled) at degree 4. d=2: (0,1,0) at degree 2, (0,2,0) at degree 4.
std::vector<TargetGrade> default_target_grades(const AlgebraSpec& spec);

/// Grade of the central generator (M or Theta).
GradeVector central_grade(const AlgebraSpec& spec);

/// k with grade == k * central_grade(spec), if such a positive k exists.
long central_multiple(const AlgebraSpec& spec, const GradeVector& grade);

}  // namespace cga
