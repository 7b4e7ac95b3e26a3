#include "newton_mu/family.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"

#include <algorithm>
#include <numeric>

namespace newton_mu {

namespace {

std::vector<Exponent> without(const SupportSet& s, const Exponent& a) {
  std::vector<Exponent> pts;
  for (const auto& p : s.points())
    if (p != a) pts.push_back(p);
  return pts;
}

std::string exponent_text(const Exponent& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::string pieces_text(const std::vector<DecompositionPiece>& pieces) {
  std::size_t simplices = 0;
  for (const auto& p : pieces) simplices += p.simplices.size();
  return std::to_string(pieces.size()) + " piece(s) with " + std::to_string(simplices) + " simplices";
}

}  // namespace

FamilyStep::FamilyStep(SupportSet f1, Exponent removed)
    : f1_(std::move(f1)), f0_(f1_.with_points(without(f1_, removed))), removed_(std::move(removed)) {
  if (f1_.dim() != 4) throw UsageError("family checks are defined for four variables, got " + std::to_string(f1_.dim()));
  if (removed_.size() != 4) throw UsageError("the removed vertex needs four coordinates");
  const auto verts = diagram_vertices(f1_);
  if (!std::binary_search(verts.begin(), verts.end(), removed_))
    throw DomainError(DomainError::Kind::Hypothesis,
                      exponent_text(removed_) + " is not a vertex of the Newton boundary of f1");
  for (const SupportSet* s : {&f1_, &f0_}) {
    const auto c = is_convenient(*s);
    if (!c.convenient) throw NotConvenientError(c.missing_axes);
  }
}

FamilyShapeError::FamilyShapeError(std::vector<DecompositionPiece> pieces)
    : DomainError(Kind::Hypothesis, "the difference of the regions is not a single 4-simplex: " + pieces_text(pieces)),
      pieces_(std::move(pieces)) {}

FamilyDifference family_difference(const FamilyStep& fs) {
  auto pieces = decompose_difference(gamma_minus(fs.f0()), gamma_minus(fs.f1()));
  if (pieces.size() != 1 || pieces.front().simplices.size() != 1) throw FamilyShapeError(std::move(pieces));
  return {pieces.front().simplices.front(), to_point(fs.removed())};
}

namespace {

// Position k of the pattern holds original coordinate perm[k]. The first z
// positions are the zero coordinates of A; a pattern fixes a 1 at position
// `one` and zeros at the other first z positions.
bool matches(const Point& v, const std::vector<std::size_t>& perm, std::size_t z, std::size_t one) {
  for (std::size_t k = 0; k < z; ++k)
    if (v[perm[k]] != (k == one ? 1 : 0)) return false;
  return true;
}

}  // namespace

TruncationVerdict negligible_truncation_check(const FamilyStep& fs) {
  const auto diff = family_difference(fs);
  TruncationVerdict v;
  v.delta = diff.delta.vertices();
  const auto& a = fs.removed();
  const std::size_t z = static_cast<std::size_t>(std::count(a.begin(), a.end(), 0));
  static const char* const kCase[] = {"none", "i", "ii", "iii"};
  v.zero_case = kCase[z];

  std::vector<Point> others;
  for (const auto& p : v.delta)
    if (!(p == diff.apex)) others.push_back(p);

  if (z > 0) {
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    static const char* const kPattern[] = {"E", "D", "C"};
    do {
      bool zeros_first = true;
      for (std::size_t k = 0; k < 4; ++k)
        if ((a[perm[k]] == 0) != (k < z)) zeros_first = false;
      if (!zeros_first) continue;
      for (std::size_t one = 0; one < z && !v.witness; ++one)
        for (const auto& p : others)
          if (matches(p, perm, z, one)) {
            v.pattern = kPattern[one];
            v.witness = p;
            break;
          }
      if (v.witness) {
        for (auto c : perm) v.permutation.push_back(c + 1);
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  v.predicted_equal = v.witness.has_value();

  v.nu_f0 = newton_number(gamma_minus(fs.f0())).total;
  v.nu_f1 = newton_number(gamma_minus(fs.f1())).total;
  v.nu_delta = newton_number(NewtonRegion::from_simplices(4, {diff.delta})).total;
  v.equal = v.nu_f0 == v.nu_f1;
  if (v.equal != v.predicted_equal || v.nu_f0 - v.nu_f1 != v.nu_delta)
    throw DomainError(DomainError::Kind::Inconsistent,
                      "pattern prediction " + std::string(v.predicted_equal ? "equal" : "different") +
                          " disagrees with nu(f0) = " + to_string(v.nu_f0) + ", nu(f1) = " + to_string(v.nu_f1) +
                          ", nu(Delta) = " + to_string(v.nu_delta));
  return v;
}

}  // namespace newton_mu
