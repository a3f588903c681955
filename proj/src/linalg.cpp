#include "syz/linalg.hpp"

#include <utility>

namespace syz {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

namespace {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0)
      ++piv;
    if (piv == m.rows)
      continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols; ++k)
        std::swap(m(piv, k), m(r, k));
    const Coeff inv = field.inv(m(r, c));
    for (std::size_t k = c; k < m.cols; ++k)
      m(r, k) = field.mul(m(r, k), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      const Coeff f = m(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        if (m(r, k) != 0)
          m(i, k) = field.sub(m(i, k), field.mul(f, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t block_rank(const DenseMatrix& m, const PrimeField& field) {
  DenseMatrix work = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < work.cols && r < work.rows; ++c) {
    std::size_t piv = r;
    while (piv < work.rows && work(piv, c) == 0)
      ++piv;
    if (piv == work.rows)
      continue;
    if (piv != r)
      for (std::size_t k = c; k < work.cols; ++k)
        std::swap(work(piv, k), work(r, k));
    const Coeff inv = field.inv(work(r, c));
    for (std::size_t i = r + 1; i < work.rows; ++i) {
      if (work(i, c) == 0)
        continue;
      const Coeff f = field.mul(work(i, c), inv);
      for (std::size_t k = c; k < work.cols; ++k)
        if (work(r, k) != 0)
          work(i, k) = field.sub(work(i, k), field.mul(f, work(r, k)));
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Coeff>> kernel_basis(const DenseMatrix& m, const PrimeField& field) {
  DenseMatrix work = m;
  auto pivots = rref(work, field);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Coeff> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field.neg(work(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

void Echelon::reduce(std::vector<Coeff>& row) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0 || pivot_row_.empty() || pivot_row_[c] < 0)
      continue;
    const auto& pr = rows_[static_cast<std::size_t>(pivot_row_[c])];
    const Coeff f = row[c];
    for (std::size_t k = c; k < cols_; ++k)
      if (pr[k] != 0)
        row[k] = field_.sub(row[k], field_.mul(f, pr[k]));
  }
}

bool Echelon::insert(std::vector<Coeff>& row) {
  if (pivot_row_.empty())
    pivot_row_.assign(cols_, -1);
  reduce(row);
  std::size_t c = 0;
  while (c < cols_ && row[c] == 0)
    ++c;
  if (c == cols_)
    return false;
  const Coeff inv = field_.inv(row[c]);
  for (std::size_t k = c; k < cols_; ++k)
    row[k] = field_.mul(row[k], inv);
  pivot_row_[c] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(row);
  return true;
}

bool Echelon::independent(std::vector<Coeff> row) const {
  reduce(row);
  for (Coeff v : row)
    if (v != 0)
      return true;
  return false;
}

} // namespace syz
