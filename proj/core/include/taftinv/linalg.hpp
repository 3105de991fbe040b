#pragma once

// Dense exact linear algebra over Q(zeta_N).

#include <cstddef>
#include <vector>

#include "taftinv/cyclo.hpp"

namespace taftinv {

using Vec = std::vector<CycNum>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycNum& s, Matrix m);
  friend Matrix operator-(Matrix a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(unsigned e) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, one vector per free column, read off the RREF.
std::vector<Vec> nullspace(Matrix m);

/// Builds a matrix whose columns are the given vectors (all of equal length).
Matrix from_columns(const std::vector<Vec>& cols, std::size_t length);

/// True iff target lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& spanning, const Vec& target);

/// Incrementally maintained row-reduced basis of a subspace of K^dim.
/// insert() returns true when the vector enlarged the span.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(Vec& v) const;

  std::size_t dim_;
  std::vector<Vec> rows_;            // each row has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace taftinv
