#include "newton_mu/support.hpp"
#include "newton_mu/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace newton_mu {

SupportSet::SupportSet(std::vector<std::string> variables, std::vector<Exponent> points)
    : variables_(std::move(variables)), points_(std::move(points)) {
  if (variables_.empty()) throw UsageError("support needs at least one variable");
  if (points_.empty()) throw UsageError("support is empty");
  for (const auto& p : points_) {
    if (p.size() != variables_.size())
      throw UsageError("exponent vector of length " + std::to_string(p.size()) + " in a support of dimension " +
                       std::to_string(variables_.size()));
    for (auto c : p)
      if (c < 0) throw UsageError("negative exponent " + std::to_string(c));
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

SupportSet SupportSet::with_default_names(std::size_t n, std::vector<Exponent> points) {
  return SupportSet(default_variable_names(n), std::move(points));
}

bool SupportSet::contains(const Exponent& e) const { return std::binary_search(points_.begin(), points_.end(), e); }

SupportSet SupportSet::with_points(std::vector<Exponent> points) const { return SupportSet(variables_, std::move(points)); }

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* const kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? std::string(kShort[i]) : "z" + std::to_string(i + 1));
  return out;
}

Point to_point(const Exponent& e) { return Point::from_integers(e); }

std::optional<SupportSet> restrict(const SupportSet& s, const CoordinateSubset& i) {
  const auto keep = i.members();
  if (keep.empty()) return std::nullopt;
  std::vector<Exponent> pts;
  for (const auto& p : s.points()) {
    bool inside = true;
    for (std::size_t c = 0; c < p.size(); ++c)
      if (!i.contains(c) && p[c] != 0) inside = false;
    if (!inside) continue;
    Exponent q;
    for (auto c : keep) q.push_back(p[c]);
    pts.push_back(std::move(q));
  }
  if (pts.empty()) return std::nullopt;
  std::vector<std::string> names;
  for (auto c : keep) names.push_back(s.variables()[c]);
  return SupportSet(std::move(names), std::move(pts));
}

std::size_t max_dimension() {
  if (const char* env = std::getenv("NEWTON_MU_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= static_cast<long>(CoordinateSubset::kMaxDim))
      return static_cast<std::size_t>(v);
  }
  return 6;
}

void check_guardrails(std::size_t n, std::size_t support_size) {
  if (n > max_dimension())
    throw DomainError(DomainError::Kind::Guardrail, "dimension " + std::to_string(n) + " exceeds the limit " +
                                                        std::to_string(max_dimension()) + " (set NEWTON_MU_MAX_N)");
  if (support_size > kMaxSupportSize)
    throw DomainError(DomainError::Kind::Guardrail, "support of size " + std::to_string(support_size) +
                                                        " exceeds the limit " + std::to_string(kMaxSupportSize));
}

}  // namespace newton_mu
