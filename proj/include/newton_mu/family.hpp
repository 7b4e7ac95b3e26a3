#pragma once

#include "newton_mu/errors.hpp"
#include "newton_mu/newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newton_mu {

/// Removal of one vertex monomial A from a convenient support in four variables.
class FamilyStep {
 public:
  /// Throws UsageError unless n = 4, and DomainError unless A is a vertex of
  /// the Newton boundary of f1 and both supports are convenient.
  FamilyStep(SupportSet f1, Exponent removed);

  const SupportSet& f1() const noexcept { return f1_; }
  const SupportSet& f0() const noexcept { return f0_; }
  const Exponent& removed() const noexcept { return removed_; }

 private:
  SupportSet f1_;
  SupportSet f0_;
  Exponent removed_;
};

/// Raised when closure(Gamma_-(f0) \ Gamma_-(f1)) is not a single 4-simplex.
class FamilyShapeError : public DomainError {
 public:
  explicit FamilyShapeError(std::vector<DecompositionPiece> pieces);
  const std::vector<DecompositionPiece>& pieces() const noexcept { return pieces_; }

 private:
  std::vector<DecompositionPiece> pieces_;
};

struct FamilyDifference {
  Simplex delta;
  Point apex;  // the removed vertex A
};

FamilyDifference family_difference(const FamilyStep& fs);

struct TruncationVerdict {
  std::string zero_case;                     // "i", "ii", "iii" or "none"
  std::optional<std::string> pattern;        // "E", "D" or "C"
  std::optional<Point> witness;
  std::vector<std::size_t> permutation;      // 1-based; position k holds original coordinate
  bool predicted_equal = false;
  Rational nu_f0;
  Rational nu_f1;
  Rational nu_delta;
  bool equal = false;
  std::vector<Point> delta;  // vertices of the difference simplex
};

/// Zero-pattern classification of A and the unit-vertex patterns under all
/// coordinate permutations, cross-checked against the direct Newton numbers.
/// A disagreement raises DomainError(Inconsistent).
TruncationVerdict negligible_truncation_check(const FamilyStep& fs);

}  // namespace newton_mu
