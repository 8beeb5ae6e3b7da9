#include "cga/kernels.hpp"

#include <map>

#include "cga/linalg.hpp"

namespace cga::kernels {

namespace {

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

long table_rank(const LieAlgebra& alg, const std::vector<long>& x) {
  const std::size_t n = alg.dim();
  SparseMatrix m;
  m.cols = n;
  for (std::size_t i = 0; i < n; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = 0;
      for (const auto& [k, c] : alg.bracket(static_cast<int>(i), static_cast<int>(j)))
        v += c * x[static_cast<std::size_t>(k)];
      if (v != 0) row.emplace_back(j, std::move(v));
    }
    m.rows.push_back(std::move(row));
  }
  return static_cast<long>(rank(m));
}

}  // namespace

std::vector<long> commutator_table_ranks(const LieAlgebra& alg,
                                         const std::vector<std::vector<long>>& points, Exec exec) {
  std::vector<long> out(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = table_rank(alg, points[i]); });
  return out;
}

std::vector<std::vector<UEAElement>> commutator_images(const LieAlgebra& alg,
                                                       const std::vector<Monomial>& monomials,
                                                       const std::vector<int>& gens, Exec exec) {
  std::vector<std::vector<UEAElement>> out(gens.size(), std::vector<UEAElement>(monomials.size()));
  const std::size_t n = monomials.size();
  for_each_index(gens.size() * n, exec, [&](std::size_t idx) {
    const std::size_t g = idx / n;
    const std::size_t i = idx % n;
    out[g][i] = commutator(alg, UEAElement::monomial(monomials[i]), gens[g]);
  });
  return out;
}

std::vector<UEAElement> omega_defects(const LieAlgebra& alg, const std::vector<Monomial>& monomials,
                                      Exec exec) {
  std::vector<UEAElement> out(monomials.size());
  for_each_index(monomials.size(), exec, [&](std::size_t i) {
    UEAElement m = UEAElement::monomial(monomials[i]);
    out[i] = omega(alg, m) - m;
  });
  return out;
}

std::vector<DiffOp> realization_images(const Realization& rho, const std::vector<Monomial>& monomials,
                                       Exec exec) {
  int max_len = 0;
  for (const auto& m : monomials) max_len = std::max(max_len, m.degree());
  // levels[L] maps each distinct prefix of length L to its slot.
  std::vector<std::map<Word, std::size_t>> index(static_cast<std::size_t>(max_len) + 1);
  for (const auto& m : monomials) {
    const Word& w = m.word();
    for (std::size_t len = 0; len <= w.size(); ++len) {
      Word prefix(w.begin(), w.begin() + static_cast<long>(len));
      index[len].try_emplace(std::move(prefix), 0);
    }
  }
  std::vector<std::vector<DiffOp>> values(index.size());
  std::vector<std::vector<const Word*>> words(index.size());
  for (std::size_t len = 0; len < index.size(); ++len) {
    std::size_t slot = 0;
    for (auto& [w, s] : index[len]) {
      s = slot++;
      words[len].push_back(&w);
    }
    values[len].resize(slot);
  }
  if (!values[0].empty()) values[0][0] = DiffOp::identity();
  for (std::size_t len = 1; len < index.size(); ++len) {
    for_each_index(words[len].size(), exec, [&](std::size_t k) {
      const Word& w = *words[len][k];
      Word prefix(w.begin(), w.end() - 1);
      const DiffOp& head = values[len - 1][index[len - 1].at(prefix)];
      values[len][k] = compose(head, rho.image(w.back()));
    });
  }
  std::vector<DiffOp> out(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Word& w = monomials[i].word();
    out[i] = values[w.size()][index[w.size()].at(w)];
  }
  return out;
}

std::vector<RealizationFailure> realization_bracket_failures(const Realization& rho, Exec exec) {
  const LieAlgebra& alg = rho.algebra();
  const std::size_t n = alg.dim();
  std::vector<DiffOp> residual(n * n);
  for_each_index(n * n, exec, [&](std::size_t idx) {
    const int x = static_cast<int>(idx / n);
    const int y = static_cast<int>(idx % n);
    if (x >= y) return;
    DiffOp lhs = compose(rho.image(x), rho.image(y)) - compose(rho.image(y), rho.image(x));
    for (const auto& [pos, c] : alg.bracket(x, y)) lhs -= rho.image(pos) * c;
    residual[idx] = std::move(lhs);
  });
  std::vector<RealizationFailure> out;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    if (!residual[idx].is_zero())
      out.push_back({static_cast<int>(idx / n), static_cast<int>(idx % n), std::move(residual[idx])});
  }
  return out;
}

}  // namespace cga::kernels
