#include "taftinv/linalg.hpp"

#include <stdexcept>

namespace taftinv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += x * b(k, j);
      }
    }
  return r;
}

Matrix operator*(const CycNum& s, Matrix m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

Matrix operator-(Matrix a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
  return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power: not square");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const CycNum inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycNum f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c).is_zero()) continue;
        m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> nullspace(Matrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = CycNum(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix from_columns(const std::vector<Vec>& cols, std::size_t length) {
  Matrix m(length, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != length) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t r = 0; r < length; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool in_span(const std::vector<Vec>& spanning, const Vec& target) {
  SpanBuilder sb(target.size());
  for (const auto& v : spanning) sb.insert(v);
  return sb.contains(target);
}

void SpanBuilder::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const CycNum& f = v[pivots_[i]];
    if (f.is_zero()) continue;
    const CycNum fc = f;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!rows_[i][c].is_zero()) v[c] -= fc * rows_[i][c];
  }
}

bool SpanBuilder::insert(Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const CycNum inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  // Keep existing rows reduced at the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const CycNum f = row[p];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace taftinv
