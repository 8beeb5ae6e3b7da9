#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cga/exec.hpp"
#include "cga/rational.hpp"

namespace cga {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spatial dimension d and the spin-like parameter ell of a centrally
/// extended conformal Galilei algebra.
struct AlgebraSpec {
  int d = 1;
  Rational ell = make_rational(3, 2);

  /// 2*ell as an exact integer; every index computation goes through this.
  int two_ell() const;
  /// Throws InvalidSpec when (d, ell) has no supported central extension.
  void validate() const;
  static AlgebraSpec make(int d, std::string_view ell);

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.d == b.d && a.ell == b.ell;
  }
};

enum class GenKind : std::uint8_t { M, P, Q, H, D, C, J, Theta };

struct GeneratorId {
  GenKind kind = GenKind::H;
  int index = -1;     // only for P and Q
  int position = -1;  // index into the PBW total order

  std::string name() const;
};

/// Sparse linear combination of basis elements, sorted by position, no zeros.
using LinearCombo = std::vector<std::pair<int, Rational>>;

LinearCombo scale(const LinearCombo& v, const Rational& c);
void axpy(LinearCombo& y, const Rational& a, const LinearCombo& x);

class LieAlgebra {
 public:
  LieAlgebra(std::optional<AlgebraSpec> spec, std::vector<GeneratorId> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<GeneratorId>& basis() const { return basis_; }
  const GeneratorId& generator(int pos) const { return basis_.at(static_cast<std::size_t>(pos)); }
  const std::optional<AlgebraSpec>& spec() const { return spec_; }

  /// Position of a generator; throws std::out_of_range if absent.
  int position(GenKind kind, int index = -1) const;
  std::optional<int> find(std::string_view name) const;

  /// Records [b_i, b_j] = v. Only the i < j half is stored.
  void set_bracket(int i, int j, LinearCombo v);
  /// [b_i, b_j], with antisymmetry synthesized on lookup.
  LinearCombo bracket(int i, int j) const;
  const LinearCombo& upper_bracket(int i, int j) const;

  bool is_central(int pos) const;
  std::vector<int> central_positions() const;

 private:
  std::optional<AlgebraSpec> spec_;
  std::vector<GeneratorId> basis_;
  std::vector<LinearCombo> upper_;  // row-major, only i < j populated
};

/// The structure constant I_m of the central [P, P] (d=1) or [Q, P] (d=2)
/// brackets.
Integer central_coefficient(const AlgebraSpec& spec, int m);

LieAlgebra make_cga(const AlgebraSpec& spec);

LinearCombo bracket(const LieAlgebra& alg, const GeneratorId& x, const GeneratorId& y);
/// [x, v] for a generator x and a linear combination v.
LinearCombo bracket(const LieAlgebra& alg, int x, const LinearCombo& v);

struct JacobiFailure {
  int i, j, k;
  LinearCombo residual;
};
std::optional<JacobiFailure> jacobi_check(const LieAlgebra& alg);

/// dim(g) - generic rank of the commutator table, where the generic rank is
/// the maximum exact rank over `trials` integer evaluation points drawn
/// uniformly from [-10^4, 10^4] with `seed`. A sampled rank never exceeds the
/// generic rank, so the result can only err upwards, and only if every trial
/// lands on a degenerate point.
long bb_count(const LieAlgebra& alg, int trials = 5, std::uint64_t seed = 0,
              Exec exec = Exec::Parallel);

/// n generators with all brackets zero (test fixture).
LieAlgebra abelian_algebra(std::size_t dim);

}  // namespace cga
