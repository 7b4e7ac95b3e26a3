#pragma once

#include "newton_mu/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newton_mu {

using Exponent = std::vector<std::int64_t>;

/// Finite set of exponent vectors together with variable names. Points are
/// kept sorted and free of duplicates.
class SupportSet {
 public:
  /// Throws UsageError on an empty set, a length mismatch, a negative
  /// exponent or a wrong number of variable names.
  SupportSet(std::vector<std::string> variables, std::vector<Exponent> points);
  /// Uses default_variable_names(n).
  static SupportSet with_default_names(std::size_t n, std::vector<Exponent> points);

  std::size_t dim() const noexcept { return variables_.size(); }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Exponent>& points() const noexcept { return points_; }
  bool contains(const Exponent& e) const;

  /// Same variables, different points.
  SupportSet with_points(std::vector<Exponent> points) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Exponent> points_;
};

/// x, y, z, w for n <= 4, otherwise z1..zn.
std::vector<std::string> default_variable_names(std::size_t n);

Point to_point(const Exponent& e);

/// Points supported inside R^I, reindexed to |I| coordinates; nullopt when none is.
std::optional<SupportSet> restrict(const SupportSet& s, const CoordinateSubset& i);

/// Largest n accepted by the polyhedral routines (6, or NEWTON_MU_MAX_N).
std::size_t max_dimension();
inline constexpr std::size_t kMaxSupportSize = 64;

/// Throws DomainError(Guardrail) when n or the support size exceed the limits.
void check_guardrails(std::size_t n, std::size_t support_size);

}  // namespace newton_mu
