#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column
using DenseVector = std::vector<Rational>;

// Rational matrix with sparse row storage and no stored zeros.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    Rational get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add(std::size_t r, std::size_t c, const Rational& v);
    const SparseRow& row(std::size_t r) const { return rows_.at(r); }

    std::vector<DenseVector> to_dense() const;

  private:
    std::size_t cols_;
    std::vector<SparseRow> rows_;
};

struct NullspaceResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;  // ascending
    std::vector<DenseVector> basis;          // one vector per free column, ascending
};

// Reduced row echelon form by sparse elimination. Columns are processed in
// ascending order; among the rows with a nonzero entry in the current column
// the pivot is the one with the smallest support, then the smallest index.
// Basis vector for free column f has a 1 at f, zeros at the other free
// columns and -R[p][f] at pivot column p. The RREF is unique, so this basis
// depends only on the matrix.
NullspaceResult sparse_nullspace(const ExactMatrix& mat);

std::vector<DenseVector> nullspace(const ExactMatrix& mat);

}  // namespace darboux
