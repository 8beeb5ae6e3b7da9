#include "cga/uea.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace cga {

Monomial::Monomial(Word sorted) : word_(std::move(sorted)) {}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Word w;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    for (int k = 0; k < exponents[i]; ++k) w.push_back(static_cast<std::uint8_t>(i));
  }
  return Monomial(std::move(w));
}

Monomial Monomial::generator(int pos) {
  Word w;
  w.push_back(static_cast<std::uint8_t>(pos));
  return Monomial(std::move(w));
}

int Monomial::exponent(int pos) const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), static_cast<std::uint8_t>(pos)));
}

std::vector<int> Monomial::exponents(std::size_t dim) const {
  std::vector<int> e(dim, 0);
  for (auto p : word_) ++e.at(p);
  return e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Word w;
  w.reserve(word_.size() + other.word_.size());
  std::merge(word_.begin(), word_.end(), other.word_.begin(), other.word_.end(),
             std::back_inserter(w));
  return Monomial(std::move(w));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
  return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                                b.word_.end());
}

UEAElement UEAElement::one() { return monomial(Monomial{}); }

UEAElement UEAElement::generator(int pos) { return monomial(Monomial::generator(pos)); }

UEAElement UEAElement::monomial(const Monomial& m, const Rational& c) {
  UEAElement e;
  e.add_term(m, c);
  return e;
}

int UEAElement::degree() const {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational UEAElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Rational UEAElement::l1_norm() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += abs(c);
  return s;
}

namespace {

// Pending words are processed longest first, then by decreasing inversion
// count, so every word is finished only after all words that rewrite into it.
struct PendingKey {
  int length;
  int inversions;
  Word word;

  friend bool operator<(const PendingKey& a, const PendingKey& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.inversions != b.inversions) return a.inversions > b.inversions;
    return a.word < b.word;
  }
};

int count_inversions(const Word& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

void push_pending(std::map<PendingKey, Rational>& pending, Word w, const Rational& c) {
  PendingKey key{static_cast<int>(w.size()), count_inversions(w), std::move(w)};
  auto [it, inserted] = pending.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) pending.erase(it);
  }
}

}  // namespace

void accumulate_word(const LieAlgebra& alg, std::span<const std::uint8_t> word, const Rational& c,
                     UEAElement& out) {
  if (c == 0) return;
  if (std::is_sorted(word.begin(), word.end())) {
    out.add_term(Monomial(Word(word.begin(), word.end())), c);
    return;
  }
  std::map<PendingKey, Rational> pending;
  push_pending(pending, Word(word.begin(), word.end()), c);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word& w = node.key().word;
    const Rational& coeff = node.mapped();
    // Leftmost inversion: x y -> y x + [x, y].
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out.add_term(Monomial(std::move(w)), coeff);
      continue;
    }
    const LinearCombo& br = alg.upper_bracket(w[i + 1], w[i]);  // [w_i, w_{i+1}] = -[w_{i+1}, w_i]
    for (const auto& [pos, v] : br) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(static_cast<std::uint8_t>(pos));
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      push_pending(pending, std::move(shorter), -v * coeff);
    }
    std::swap(w[i], w[i + 1]);
    push_pending(pending, std::move(w), coeff);
  }
}

UEAElement normal_order(const LieAlgebra& alg, std::span<const int> word) {
  Word w;
  for (int p : word) {
    if (p < 0 || p >= static_cast<int>(alg.dim())) throw std::out_of_range("generator position");
    w.push_back(static_cast<std::uint8_t>(p));
  }
  UEAElement out;
  accumulate_word(alg, w, 1, out);
  return out;
}

UEAElement multiply(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  Word w;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      w.assign(ma.word().begin(), ma.word().end());
      w.insert(w.end(), mb.word().begin(), mb.word().end());
      accumulate_word(alg, w, ca * cb, out);
    }
  }
  return out;
}

UEAElement commutator(const LieAlgebra& alg, const UEAElement& a, int x) {
  // [b_1 ... b_k, x] = sum_i b_1 ... [b_i, x] ... b_k
  UEAElement out;
  Word w;
  for (const auto& [m, c] : a.terms()) {
    const Word& src = m.word();
    for (std::size_t k = 0; k < src.size(); ++k) {
      for (const auto& [pos, v] : alg.bracket(src[k], x)) {
        w.assign(src.begin(), src.end());
        w[k] = static_cast<std::uint8_t>(pos);
        accumulate_word(alg, w, c * v, out);
      }
    }
  }
  return out;
}

UEAElement commutator(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b) {
  return multiply(alg, a, b) - multiply(alg, b, a);
}

std::vector<int> omega_map(const LieAlgebra& alg) {
  if (!alg.spec()) throw std::invalid_argument("omega requires a conformal Galilei algebra");
  const int l2 = alg.spec()->two_ell();
  std::vector<int> map(alg.dim());
  for (const auto& g : alg.basis()) {
    int image = g.position;
    switch (g.kind) {
      case GenKind::H: image = alg.position(GenKind::C); break;
      case GenKind::C: image = alg.position(GenKind::H); break;
      case GenKind::P:
        image = alg.spec()->d == 1 ? alg.position(GenKind::P, l2 - g.index)
                                   : alg.position(GenKind::Q, l2 - g.index);
        break;
      case GenKind::Q: image = alg.position(GenKind::P, l2 - g.index); break;
      default: break;
    }
    map[static_cast<std::size_t>(g.position)] = image;
  }
  return map;
}

UEAElement omega(const LieAlgebra& alg, const UEAElement& a) {
  std::vector<int> map = omega_map(alg);
  UEAElement out;
  Word w;
  for (const auto& [m, c] : a.terms()) {
    w.clear();
    for (auto it = m.word().rbegin(); it != m.word().rend(); ++it)
      w.push_back(static_cast<std::uint8_t>(map[*it]));
    accumulate_word(alg, w, c, out);
  }
  return out;
}

std::string format(const LieAlgebra& alg, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  const Word& w = m.word();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += ' ';
    s += alg.generator(w[i]).name();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string format(const LieAlgebra& alg, const UEAElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1 && !m.is_one();
    if (!unit) s += to_string(mag);
    if (!m.is_one()) {
      if (!unit) s += ' ';
      s += format(alg, m);
    }
  }
  return s;
}

UEAElement parse_element(const LieAlgebra& alg, std::string_view text) {
  UEAElement out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("parse_element: " + why + " at offset " + std::to_string(i));
  };
  skip_ws();
  if (i < text.size() && text.substr(i) == "0") return out;
  bool any = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      fail("expected '+' or '-'");
    }
    Rational coeff = sign;
    bool have_content = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
        ++j;
      coeff *= parse_rational(text.substr(i, j - i));
      i = j;
      have_content = true;
    }
    std::vector<int> word;
    while (true) {
      skip_ws();
      if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) break;
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      std::string name(text.substr(i, j - i));
      auto pos = alg.find(name);
      if (!pos) fail("unknown generator '" + name + "'");
      i = j;
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t k = ++i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == i) fail("missing exponent");
        power = std::stoi(std::string(text.substr(i, k - i)));
        i = k;
      }
      for (int p = 0; p < power; ++p) word.push_back(*pos);
      have_content = true;
    }
    if (!have_content) fail("empty term");
    UEAElement term = normal_order(alg, word);
    term *= coeff;
    out += term;
    any = true;
  }
  if (!any) fail("empty expression");
  return out;
}

}  // namespace cga
