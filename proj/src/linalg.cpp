#include "newton_mu/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace newton_mu {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& v : row) data_.push_back(v);
  }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// Reduces m to row echelon form in place; returns pivot columns and the
// sign of the accumulated row permutation.
std::pair<std::vector<std::size_t>, int> echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  int perm_sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      m.swap_rows(p, row);
      perm_sign = -perm_sign;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots, perm_sign};
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const auto [pivots, perm_sign] = echelon(m);
  if (pivots.size() < m.rows()) return 0;
  Rational det = perm_sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t rank(Matrix m) { return echelon(m).first.size(); }

std::vector<std::size_t> pivot_columns(Matrix m) { return echelon(m).first; }

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto [pivots, perm_sign] = echelon(aug);
  (void)perm_sign;
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) s -= aug(i, j) * x[j];
    x[i] = s / aug(i, i);
  }
  return x;
}

std::vector<Rational> hyperplane_normal(const std::vector<std::vector<Rational>>& points) {
  const std::size_t k = points.empty() ? 0 : points.front().size();
  if (points.size() != k) throw std::invalid_argument("hyperplane_normal needs k points in R^k");
  std::vector<Rational> normal(k);
  for (std::size_t skip = 0; skip < k; ++skip) {
    Matrix minor(k - 1, k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == skip) continue;
        minor(r - 1, cc++) = points[r][c] - points[0][c];
      }
    }
    const Rational d = determinant(std::move(minor));
    normal[skip] = (skip % 2 == 0) ? d : Rational(-d);
  }
  return normal;
}

}  // namespace newton_mu
