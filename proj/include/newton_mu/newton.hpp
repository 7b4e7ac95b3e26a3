#pragma once

#include "newton_mu/region.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace newton_mu {

struct NewtonTerm {
  CoordinateSubset subset;
  Rational factorial_volume;  // |I|! V_|I|(X^I)
  int sign = 1;               // (-1)^(n-|I|)
};

struct NewtonReport {
  std::size_t n = 0;
  std::vector<NewtonTerm> terms;  // every subset, ordered by size then mask
  Rational total;
};

/// Alternating sum of normalized coordinate-subspace volumes. Explicit regions
/// are validated first (DomainError(InvalidRegion) on overlap).
NewtonReport newton_number(const NewtonRegion& x);

/// All I with exactly |I|+1 vertices of s in R^I. s must be an n-simplex in R^n
/// avoiding O, otherwise DomainError(Hypothesis).
std::vector<CoordinateSubset> full_supporting_subsets(const Simplex& s);

/// Intersection of all full-supporting subsets.
CoordinateSubset minimal_full_supporting(const Simplex& s);

struct FactoredNewton {
  Rational value;
  CoordinateSubset minimal;
  Rational base_volume;   // |I|! V_|I|(Z^I)
  Rational projected_nu;  // nu of pi_I(Z) inside R^(n-|I|)
  bool fallback = false;  // projection degenerated; value is the direct one
};

/// Factored Newton number of a union of n-simplices that share the minimal
/// full-supporting subspace and the face inside it. DomainError(Hypothesis)
/// when they do not.
FactoredNewton newton_number_factored(const std::vector<Simplex>& piece);
FactoredNewton newton_number_factored(const Simplex& s);

struct DecompositionPiece {
  std::size_t id = 0;
  std::vector<Simplex> simplices;
  CoordinateSubset minimal;   // empty subset for simplices through O
  std::vector<Point> base;    // vertices of the common face in R^minimal
  Rational nu;
};

/// Pieces of closure(x \ y) grouped by minimal full-supporting subspace and
/// common face. Support-backed regions (or explicit regions equal to a
/// gamma_minus triangulation) are handled by a beneath-beyond sweep from the
/// boundary of x; other explicit regions need y's simplices to be a subset of
/// x's. DomainError(Containment) when y is not inside x.
std::vector<DecompositionPiece> decompose_difference(const NewtonRegion& x, const NewtonRegion& y);

struct VanishingVerdict {
  Rational nu;
  std::vector<std::size_t> unit_vertices;  // 0-based j with E_j a vertex
  bool quasi_convenient = false;
  bool zero_implies_unit = true;            // nu = 0 => some E_j is a vertex
  std::optional<std::size_t> isolated_unit;  // j with E_j a vertex and every other vertex in x_j = 0
  std::optional<bool> complement_convex;
  std::optional<bool> iff_holds;             // nu = 0 <=> some E_j, when the complement is convex
};

/// Complement convexity is automatic for support-backed regions; otherwise
/// the caller's flag is used (unknown when absent).
VanishingVerdict vanishing_check(const NewtonRegion& x, std::optional<bool> complement_convex = std::nullopt);

struct ChainStep {
  std::string lhs;
  std::string rel;
  std::string rhs;
  std::string status;         // "computed", "cited:..." or "verified:..."
  std::optional<bool> holds;  // unset for cited steps
};

struct BoundCertificate {
  std::vector<Rational> a;
  std::vector<std::int64_t> d;  // empty for hypersurface bounds
  Rational bound;               // prod(a_i - 1), or the closed form for r-th bounds
  Rational nu_value;
  std::optional<std::int64_t> modification_m;
  std::optional<Integer> mu_oracle;
  std::vector<ChainStep> chain;
  bool verdict = false;
};

/// Sets verdict from the computed chain steps.
void settle(BoundCertificate& c);

/// Y_a = |O, a_1 e_1, ..., a_n e_n|.
NewtonRegion simplex_region(const std::vector<Rational>& a);

/// True when Y_a lies inside x (facet test for support-backed regions,
/// intersection volume otherwise).
bool contains_simplex(const NewtonRegion& x, const std::vector<Rational>& a);

/// nu(x) >= prod(a_i - 1) >= 0 for Y_a inside x.
BoundCertificate bound_simplex(const NewtonRegion& x, const std::vector<Rational>& a);

struct Stabilized {
  SupportSet support;
  std::int64_t m = 0;
  Rational value;
};

/// Standard modification with m doubled from 1 + max coordinate sum until
/// `value` repeats; m is the smaller exponent of the stable pair.
/// DomainError(NotStabilized) beyond 2^10 times the start.
Stabilized stabilized_modification(const SupportSet& s, const std::function<Rational(const SupportSet&)>& value);

/// mu(f) >= nu(g) >= prod(a_i - 1), with g the (stabilized) standard
/// modification when f is not convenient.
BoundCertificate milnor_lower_bound(const SupportSet& s, const std::vector<Rational>& a);

inline constexpr const char* kKouchnirenkoStatus = "cited:[K]-Thm.I";

}  // namespace newton_mu
