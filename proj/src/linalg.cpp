#include "cga/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cga {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow to_primitive_integers(const SparseRow& r) {
  IntRow out;
  if (r.empty()) return out;
  Integer lcm = 1;
  for (const auto& e : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den_mpz_t());
  out.reserve(r.size());
  Integer g = 0;
  for (const auto& [c, v] : r) {
    Integer n = v.get_num() * (lcm / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.emplace_back(c, std::move(n));
  }
  if (g != 1)
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntRow& r) {
  Integer g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// r <- a*r - b*p
IntRow combine(const IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
  IntRow out;
  out.reserve(r.size() + p.size());
  auto ir = r.begin();
  auto ip = p.begin();
  while (ir != r.end() || ip != p.end()) {
    if (ip == p.end() || (ir != r.end() && ir->first < ip->first)) {
      out.emplace_back(ir->first, a * ir->second);
      ++ir;
    } else if (ir == r.end() || ip->first < ir->first) {
      out.emplace_back(ip->first, -b * ip->second);
      ++ip;
    } else {
      Integer v = a * ir->second - b * ip->second;
      if (v != 0) out.emplace_back(ir->first, std::move(v));
      ++ir;
      ++ip;
    }
  }
  return out;
}

// Eliminates the entry of `r` at p's leading column using pivot row p.
void eliminate(IntRow& r, const IntRow& p, const Integer& r_entry) {
  const Integer& lead = p.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), r_entry.get_mpz_t());
  Integer a = lead / g;
  Integer b = r_entry / g;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  r = combine(r, a, p, b);
  make_primitive(r);
}

const Integer* entry_at(const IntRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

std::map<std::size_t, IntRow> echelon(const SparseMatrix& m) {
  std::map<std::size_t, IntRow> pivots;
  for (const auto& row : m.rows) {
    IntRow r = to_primitive_integers(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        if (r.front().second < 0)
          for (auto& e : r) e.second = -e.second;
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      Integer entry = r.front().second;
      eliminate(r, it->second, entry);
    }
  }
  return pivots;
}

}  // namespace

void SparseMatrix::add_row(SparseRow r) {
  for (const auto& e : r)
    if (e.first >= cols) throw std::out_of_range("column index beyond matrix width");
  rows.push_back(std::move(r));
}

std::vector<SparseRow> rref(const SparseMatrix& m) {
  std::map<std::size_t, IntRow> piv = echelon(m);
  // Back-substitution from the rightmost pivot leftwards.
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const std::size_t col = it->first;
    for (auto jt = piv.begin(); jt != piv.end() && jt->first < col; ++jt) {
      const Integer* e = entry_at(jt->second, col);
      if (e) {
        Integer entry = *e;
        eliminate(jt->second, it->second, entry);
      }
    }
  }
  std::vector<SparseRow> out;
  out.reserve(piv.size());
  for (auto& [col, r] : piv) {
    SparseRow s;
    s.reserve(r.size());
    const Integer lead = r.front().second;
    for (auto& [c, v] : r) {
      Rational q(v, lead);
      q.canonicalize();
      s.emplace_back(c, std::move(q));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return echelon(m).size(); }

std::vector<DenseVector> nullspace(const SparseMatrix& m) {
  std::vector<SparseRow> r = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (const auto& row : r) is_pivot[row.front().first] = 1;
  std::vector<DenseVector> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    DenseVector v(m.cols);
    v[f] = 1;
    for (const auto& row : r) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != row.end() && it->first == f) v[row.front().first] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseVector primitive(DenseVector v) {
  Integer lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= lcm;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  int sign = 1;
  for (const auto& x : v) {
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  }
  Rational scale(sign, 1);
  scale /= g;
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace cga
