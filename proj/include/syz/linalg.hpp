#pragma once

#include "syz/algebra.hpp"

#include <cstddef>
#include <vector>

namespace syz {

/// Row-major dense matrix over Z/p.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Coeff> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Coeff& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static DenseMatrix identity(std::size_t n);
};

/// Rank by row reduction.
std::size_t block_rank(const DenseMatrix& m, const PrimeField& field);

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Coeff>> kernel_basis(const DenseMatrix& m, const PrimeField& field);

/// Incremental row echelon form: rows are added one at a time and reduced
/// against the pivots seen so far.
class Echelon {
public:
  Echelon(std::size_t cols, const PrimeField& field) : cols_(cols), field_(field) {}

  /// Reduces `row` in place; returns true (and keeps it) if it was
  /// independent of the rows already present.
  bool insert(std::vector<Coeff>& row);
  /// Like insert, without keeping the row.
  bool independent(std::vector<Coeff> row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

private:
  void reduce(std::vector<Coeff>& row) const;

  std::size_t cols_;
  PrimeField field_;
  std::vector<std::size_t> pivots_;          // pivot column of each stored row
  std::vector<std::vector<Coeff>> rows_;     // monic at pivot
  std::vector<std::ptrdiff_t> pivot_row_;    // column -> stored row index or -1
};

} // namespace syz
