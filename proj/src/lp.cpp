#include "newton_mu/lp.hpp"

#include <stdexcept>

namespace newton_mu {

namespace {

class Tableau {
 public:
  Tableau(const Matrix& a, const std::vector<Rational>& b)
      : m_(a.rows()), n_(a.cols()), t_(a.rows() + 1, a.cols() + a.rows() + 1), basis_(a.rows()) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs()) = flip ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  std::size_t rhs() const { return n_ + m_; }

  // Objective row for maximizing sum_j cost[j] x_j over all tableau columns.
  void set_objective(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= rhs(); ++j) {
      Rational z = (j == rhs()) ? Rational(0) : Rational(-cost[j]);
      for (std::size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * t_(i, j);
      t_(m_, j) = z;
    }
  }

  // Runs Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, rhs()) / t_(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_(row, col);
    for (std::size_t j = 0; j <= rhs(); ++j) t_(row, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Rational f = t_(i, col);
      for (std::size_t j = 0; j <= rhs(); ++j) t_(i, j) -= f * t_(row, j);
    }
    basis_[row] = col;
  }

  // Pivots remaining artificial variables out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational objective_value() const { return t_(m_, rhs()); }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_(i, rhs());
    return x;
  }

  std::size_t vars() const { return n_; }
  std::size_t cons() const { return m_; }

 private:
  std::size_t m_;
  std::size_t n_;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  if (b.size() != a.rows() || c.size() != a.cols()) throw std::invalid_argument("maximize: shape mismatch");
  Tableau t(a, b);
  const std::size_t n = a.cols(), m = a.rows();

  std::vector<Rational> phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.set_objective(phase1);
  t.optimize(n + m);
  if (t.objective_value() != 0) return {LpResult::Status::Infeasible, 0, {}};
  t.expel_artificials();

  std::vector<Rational> phase2(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.set_objective(phase2);
  if (!t.optimize(n)) return {LpResult::Status::Unbounded, 0, {}};
  return {LpResult::Status::Optimal, t.objective_value(), t.solution()};
}

bool feasible(const Matrix& a, const std::vector<Rational>& b) {
  return maximize(a, b, std::vector<Rational>(a.cols(), 0)).status != LpResult::Status::Infeasible;
}

}  // namespace newton_mu
