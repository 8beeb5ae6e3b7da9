#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cga/json_io.hpp"
#include "cga/liealg.hpp"
#include "cga/uea.hpp"
#include "transcriptions.hpp"

namespace cga::test {

inline const std::vector<AlgebraSpec>& d1_specs() {
  static const std::vector<AlgebraSpec> v{AlgebraSpec::make(1, "3/2"), AlgebraSpec::make(1, "5/2"),
                                          AlgebraSpec::make(1, "7/2")};
  return v;
}
inline const std::vector<AlgebraSpec>& d2_specs() {
  static const std::vector<AlgebraSpec> v{AlgebraSpec::make(2, "1"), AlgebraSpec::make(2, "2"),
                                          AlgebraSpec::make(2, "3")};
  return v;
}
inline std::vector<AlgebraSpec> all_specs() {
  auto v = d1_specs();
  v.insert(v.end(), d2_specs().begin(), d2_specs().end());
  return v;
}

inline std::string label(const AlgebraSpec& s) { return "d=" + std::to_string(s.d) + " l=" + to_string(s.ell); }

inline const fixtures::Transcription& transcription(const std::string& name) {
  for (const auto& t : fixtures::transcriptions())
    if (t.name == name) return t;
  throw std::out_of_range(name);
}

inline UEAElement fixture_element(const LieAlgebra& alg, const std::string& name) {
  return parse_element(alg, transcription(name).text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 5), den(1, 3), sign(0, 1);
  return make_rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

/// Sum of up to `terms` random words of length <= max_len, each word
/// normal-ordered as a product.
inline UEAElement random_element(const LieAlgebra& alg, std::mt19937_64& rng, int max_len = 3, int terms = 3) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, static_cast<int>(alg.dim()) - 1), nterms(1, terms);
  UEAElement out;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(static_cast<std::uint8_t>(gen(rng)));
    accumulate_word(alg, w, random_rational(rng), out);
  }
  return out;
}

/// Rank of a dense rational matrix by plain Gaussian elimination; kept apart
/// from the library's sparse elimination so it can serve as an oracle.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cga::test
