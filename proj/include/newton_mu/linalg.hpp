#pragma once

#include "newton_mu/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace newton_mu {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by rational Gaussian elimination. Throws std::invalid_argument
/// for non-square input. The 0x0 determinant is 1.
Rational determinant(Matrix m);

std::size_t rank(Matrix m);

/// Indices of the pivot columns of the reduced row echelon form, in increasing order.
std::vector<std::size_t> pivot_columns(Matrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// Normal of the hyperplane through k points in R^k, as the vector of signed
/// cofactors of the (k-1) x k matrix of differences to the first point.
/// All-zero when the points are affinely dependent.
std::vector<Rational> hyperplane_normal(const std::vector<std::vector<Rational>>& points);

}  // namespace newton_mu
