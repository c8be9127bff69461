#include "qwa/linear.hpp"

#include <stdexcept>
#include <utility>

namespace qwa {

Matrix solve(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t m = b.cols();

  auto swap_rows = [](Matrix& x, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(r1, c), x(r2, c));
  };

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("solve: singular system");
    if (pivot != col) {
      swap_rows(a, pivot, col);
      swap_rows(b, pivot, col);
    }
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < m; ++c) b(col, c) *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < n; ++c)
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < m; ++c)
        if (!b(col, c).is_zero()) b(r, c) -= f * b(col, c);
    }
  }
  return b;
}

std::vector<Rational> solve(Matrix a, const std::vector<Rational>& b) {
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  Matrix x = solve(std::move(a), std::move(rhs));
  std::vector<Rational> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
  return out;
}

} // namespace qwa
