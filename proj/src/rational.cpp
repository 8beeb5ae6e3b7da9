#include "cga/rational.hpp"

#include <stdexcept>

namespace cga {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) throw std::invalid_argument("bad integer: " + std::string(text));
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("bad integer: " + std::string(text));
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cga
