#pragma once

#include <cstddef>
#include <vector>

#include "qwa/rational.hpp"

namespace qwa {

/// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Solves A X = B exactly for square non-singular A, where B holds one
/// right-hand side per column. Returns X with the same shape as B.
/// Throws std::runtime_error if A is singular.
Matrix solve(Matrix a, Matrix b);

/// Single right-hand-side convenience wrapper.
std::vector<Rational> solve(Matrix a, const std::vector<Rational>& b);

} // namespace qwa
