#pragma once

#include "newton_mu/newton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace newton_mu {

/// Degrees d_1..d_r, each at least 1.
class DegreeTuple {
 public:
  /// Throws UsageError on an empty tuple or a degree below 1.
  explicit DegreeTuple(std::vector<std::int64_t> d);
  static DegreeTuple ones(std::size_t r) { return DegreeTuple(std::vector<std::int64_t>(r, 1)); }

  std::size_t r() const noexcept { return d_.size(); }
  const std::vector<std::int64_t>& values() const noexcept { return d_; }
  /// d_1..d_k.
  DegreeTuple prefix(std::size_t k) const;

 private:
  std::vector<std::int64_t> d_;
};

struct RNewtonTerm {
  CoordinateSubset subset;
  Rational factorial_volume;
  Integer weight;  // F^|I|_r(d)
  int sign = 1;
  Rational value;  // sign * weight * factorial_volume
};

struct RNewtonReport {
  std::size_t n = 0;
  std::vector<std::int64_t> d;
  std::vector<RNewtonTerm> terms;  // subsets with |I| >= r
  int epsilon = 0;
  Rational epsilon_term;
  Rational total;
};

/// Throws UsageError when r > n.
RNewtonReport r_newton_number(const NewtonRegion& x, const DegreeTuple& dt);

struct BranchValue {
  std::string label;  // e.g. "r<=|I|, r<=m"
  Rational value;
  bool matches = false;
};

struct RFactored {
  CoordinateSubset minimal;
  std::size_t m = 0;
  Rational direct;
  Rational restricted_sum;  // sum over J containing the minimal subset
  std::vector<BranchValue> branches;
  bool consistent = false;
};

/// Evaluates the factorization identities of the r-th Newton number for a
/// piece whose simplices share the minimal full-supporting subspace and its
/// face. Every applicable branch is evaluated (both when r = m) and compared
/// with the direct value. Requires 1 < r < n; DomainError(Hypothesis) otherwise.
RFactored r_newton_factored(const std::vector<Simplex>& piece, const DegreeTuple& dt);

/// sum_{s=r}^n (-1)^(n-s) F^s_r(d) sigma_s(a) + (-1)^(n-r+1).
Rational r_closed_form(const std::vector<Rational>& a, const DegreeTuple& dt);

/// nu^r(x) >= closed form >= 0 for Y_a inside x.
BoundCertificate r_bound(const NewtonRegion& x, const DegreeTuple& dt, const std::vector<Rational>& a);

/// mu >= nu^r(Gamma_-(g)) >= closed form >= 0, the first step cited.
BoundCertificate sciv_milnor_bound(const SupportSet& s, const DegreeTuple& dt, const std::vector<Rational>& a);

inline constexpr const char* kOkaStatus = "cited:[O2]-Thm.7.2";

}  // namespace newton_mu
