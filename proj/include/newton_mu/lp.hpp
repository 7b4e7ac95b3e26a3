#pragma once

#include "newton_mu/linalg.hpp"

#include <vector>

namespace newton_mu {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase tableau simplex with Bland's rule; intended for the small
/// membership and overlap problems of this library.
LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

/// True when {x >= 0 : A x = b} is nonempty.
bool feasible(const Matrix& a, const std::vector<Rational>& b);

}  // namespace newton_mu
