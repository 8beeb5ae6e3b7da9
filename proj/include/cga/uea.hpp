#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cga/liealg.hpp"
#include "cga/rational.hpp"

namespace cga {

/// A product of generators, stored as generator positions.
using Word = boost::container::small_vector<std::uint8_t, 8>;

/// PBW monomial b_0^{e_0} b_1^{e_1} ... with factors in increasing position
/// order. Stored as its sorted word; exponents() gives the vector view.
class Monomial {
 public:
  Monomial() = default;
  /// `sorted` must be non-decreasing.
  explicit Monomial(Word sorted);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial generator(int pos);

  const Word& word() const { return word_; }
  int degree() const { return static_cast<int>(word_.size()); }
  int exponent(int pos) const;
  std::vector<int> exponents(std::size_t dim) const;
  bool is_one() const { return word_.empty(); }

  /// Product of exponent vectors (the top-degree part of the UEA product).
  Monomial operator*(const Monomial& other) const;

  /// Display order: degree first, then word-lexicographic. Earlier generators
  /// with higher powers sort first within a degree (M^2 D before M P0 P3).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }

 private:
  Word word_;
};

/// Element of the universal enveloping algebra in PBW normal form.
class UEAElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  UEAElement() = default;
  static UEAElement one();
  static UEAElement generator(int pos);
  static UEAElement monomial(const Monomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest monomial degree; kZeroDegree for the zero element.
  int degree() const;
  static constexpr int kZeroDegree = -1000000;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& c);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& c) { return a *= c; }
  friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

  /// Sum of absolute coefficient values; the residual norm of verification.
  Rational l1_norm() const;

 private:
  Terms terms_;
};

/// Adds c * (normal-ordered product of `word`, read left to right) into out.
void accumulate_word(const LieAlgebra& alg, std::span<const std::uint8_t> word, const Rational& c,
                     UEAElement& out);
inline void accumulate_word(const LieAlgebra& alg, const Word& word, const Rational& c,
                            UEAElement& out) {
  accumulate_word(alg, std::span<const std::uint8_t>(word.data(), word.size()), c, out);
}

UEAElement normal_order(const LieAlgebra& alg, std::span<const int> word);
UEAElement multiply(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b);
/// [a, b_x] = a b_x - b_x a, computed through the derivation rule.
UEAElement commutator(const LieAlgebra& alg, const UEAElement& a, int x);
UEAElement commutator(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b);

/// Image of each generator position under the involutive anti-automorphism
/// H<->C, D, J, M, Theta fixed, P_n -> P_{2l-n} (d=1) or P_n <-> Q_{2l-n} (d=2).
std::vector<int> omega_map(const LieAlgebra& alg);
UEAElement omega(const LieAlgebra& alg, const UEAElement& a);

/// Human-readable form, e.g. "-6 M^2 D + M^2 D^2 - 7/2 M P0 P3".
std::string format(const LieAlgebra& alg, const UEAElement& a);
std::string format(const LieAlgebra& alg, const Monomial& m);

/// Parses the format() syntax. Each term is an optional rational coefficient
/// followed by generator names (with optional ^k), separated by spaces or '*'.
/// Products are taken as written and normal-ordered. Throws
/// std::invalid_argument on unknown names or malformed input.
UEAElement parse_element(const LieAlgebra& alg, std::string_view text);

}  // namespace cga
