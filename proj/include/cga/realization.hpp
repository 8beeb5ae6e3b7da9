#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cga/liealg.hpp"
#include "cga/uea.hpp"

namespace cga {

/// Slots shared by variables (t, x_j, y_j) and the commuting parameters
/// (delta plus m, or r and theta).
inline constexpr std::size_t kMaxSlots = 24;
using Exponents = std::array<std::uint8_t, kMaxSlots>;

struct VarSet {
  std::vector<std::string> names;  // variables first, then parameters
  std::size_t n_vars = 0;
  int t = -1;
  std::vector<int> x, y;
  int delta = -1, m = -1, r = -1, theta = -1;

  std::size_t n_slots() const { return names.size(); }
  bool is_variable(std::size_t slot) const { return slot < n_vars; }

  /// Throws InvalidSpec if (d, ell) needs more than kMaxSlots slots.
  static VarSet for_spec(const AlgebraSpec& spec);
};

/// Polynomial in variables and parameters with exact rational coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly slot(int s, const Rational& c = 1, int power = 1);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// True when no variable slot appears.
  bool is_parameter_only(const VarSet& vars) const;
  std::string format(const VarSet& vars) const;

 private:
  std::map<Exponents, Rational> terms_;
};

/// Weyl-algebra element in normal form: sum of c * x^a * d^alpha, with every
/// multiplication operator to the left of every derivative.
class DiffOp {
 public:
  struct Key {
    Exponents mult{};
    Exponents deriv{};
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, Rational>;

  DiffOp() = default;
  static DiffOp identity();
  static DiffOp multiplication(const Poly& p);
  /// c * x^mult * d_{slot}
  static DiffOp derivative(int slot, const Poly& coeff = Poly::constant(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Rational& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rational& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& c) { return a *= c; }
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string format(const VarSet& vars) const;

 private:
  Terms terms_;
};

/// Operator product in normal form (Leibniz rule).
DiffOp compose(const DiffOp& a, const DiffOp& b);

struct ScalarCheck {
  bool scalar = false;
  DiffOp residual;  // the derivative-carrying or variable-carrying part
};
ScalarCheck is_parameter_scalar(const DiffOp& op, const VarSet& vars);

/// The differential-operator images of generators together with the PBW
/// monomial evaluation built on top of them.
class Realization {
 public:
  explicit Realization(const LieAlgebra& alg);

  const LieAlgebra& algebra() const { return alg_; }
  const VarSet& vars() const { return vars_; }
  const DiffOp& image(int pos) const { return images_.at(static_cast<std::size_t>(pos)); }
  /// Replaces a generator image (fault injection in tests).
  void set_image(int pos, DiffOp op) { images_.at(static_cast<std::size_t>(pos)) = std::move(op); }

  /// Replaces parameter `name` by the constant `value` in every image.
  /// Throws std::invalid_argument for an unknown or non-parameter name.
  void specialize(const std::string& name, const Rational& value);

  DiffOp realize_word(const Word& w) const;
  DiffOp realize(const UEAElement& a) const;

 private:
  LieAlgebra alg_;
  VarSet vars_;
  std::vector<DiffOp> images_;
};

/// Evaluates slot `slot` at `value` in every coefficient of op.
DiffOp substitute(const DiffOp& op, int slot, const Rational& value);

DiffOp realize_generator(const AlgebraSpec& spec, const VarSet& vars, const GeneratorId& g);

struct RealizationFailure {
  int x, y;
  DiffOp residual;  // [rho(x), rho(y)] - rho([x, y])
};
/// Exhaustive check of [rho(x), rho(y)] = rho([x, y]) over all pairs.
std::vector<RealizationFailure> verify_realization(const Realization& rho, Exec exec = Exec::Parallel);

}  // namespace cga
