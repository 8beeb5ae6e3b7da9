#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cga/rational.hpp"

namespace cga {

/// Sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using DenseVector = std::vector<Rational>;

struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r);
};

/// Reduced row echelon form. Elimination is fraction-free on integer rows
/// (each row scaled to primitive integers), rows are consumed in order and
/// each claims its leftmost unclaimed column; the final back-substitution
/// normalizes pivots to 1. The result is the unique RREF of the row space.
std::vector<SparseRow> rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of {v : m v = 0}: one vector per free column f, with v[f] = 1 and
/// zeros on the other free columns.
std::vector<DenseVector> nullspace(const SparseMatrix& m);

/// Scales v to coprime integers whose first nonzero entry is positive.
DenseVector primitive(DenseVector v);

}  // namespace cga
