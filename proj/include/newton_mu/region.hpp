#pragma once

#include "newton_mu/support.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newton_mu {

/// A polyhedron in the closed orthant given as a union of simplices.
///
/// Regions built by gamma_minus come from a face-to-face triangulation and are
/// trusted. Explicit simplex lists may mix dimensions (a lower-dimensional
/// simplex stands for a lower-dimensional piece of the polyhedron) and are
/// checked by validate_region before any volume is taken.
class NewtonRegion {
 public:
  NewtonRegion() = default;

  static NewtonRegion from_simplices(std::size_t n, std::vector<Simplex> simplices);
  /// {O} when has_origin, else the empty set.
  static NewtonRegion point_or_empty(std::size_t n, bool has_origin);
  static NewtonRegion from_support(SupportSet source, std::vector<Simplex> simplices);

  std::size_t dim() const noexcept { return n_; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  bool has_origin() const noexcept { return has_origin_; }
  const std::optional<SupportSet>& source() const noexcept { return source_; }
  bool trusted() const noexcept { return trusted_; }

  /// Union of the simplex vertices (plus O when the region is {O}), lex order.
  std::vector<Point> vertices() const;

 private:
  std::size_t n_ = 0;
  std::vector<Simplex> simplices_;
  bool has_origin_ = false;
  std::optional<SupportSet> source_;
  bool trusted_ = false;
};

/// Cone from O over the lex pulling triangulation of the Newton boundary.
/// Throws NotConvenientError when an axis carries no support point and
/// DomainError(Degenerate) when O itself is in the support.
NewtonRegion gamma_minus(const SupportSet& s);
/// Same, with a custom pulling priority (see boundary_triangulation).
NewtonRegion gamma_minus(const SupportSet& s, const std::vector<Exponent>& priority);

/// Throws DomainError(InvalidRegion) when simplices of the same dimension in
/// the same coordinate subspace share interior points, or when a simplex
/// leaves the ambient space. Trusted regions pass without checks.
void validate_region(const NewtonRegion& x);

/// Distinct |J|-dimensional faces of the region lying in R^J (ambient coordinates).
std::vector<Simplex> faces_in(const NewtonRegion& x, const CoordinateSubset& j);

/// |J|! V_|J|(X^J); for J empty this is 1 when O is in X and 0 otherwise.
Rational face_volume(const NewtonRegion& x, const CoordinateSubset& j);

/// X^I as a region in R^|I|. Support-backed regions are rebuilt from the
/// restricted support, explicit ones keep their faces inside R^I.
NewtonRegion restrict(const NewtonRegion& x, const CoordinateSubset& i);

/// Distinct images of the vertices under pi_I (coordinates in I set to zero).
std::vector<Point> project_vertices(const Simplex& s, const CoordinateSubset& i);
/// pi_I(s); throws DomainError(Degenerate) when the images are affinely dependent.
Simplex project(const Simplex& s, const CoordinateSubset& i);
/// Images of every simplex, deduplicated. Projections that collapse onto an
/// affinely dependent set are dropped (they carry no volume in any R^J).
NewtonRegion project(const NewtonRegion& x, const CoordinateSubset& i);

/// Points with the coordinates in I removed, so they live in R^(n-|I|).
Point drop_coordinates(const Point& p, const CoordinateSubset& i);
Simplex drop_coordinates(const Simplex& s, const CoordinateSubset& i);
NewtonRegion drop_coordinates(const NewtonRegion& x, const CoordinateSubset& i);

struct QuasiConvenience {
  bool ok = false;
  std::string reason;
};

/// Exact check of the origin and vertex-coordinate conditions, plus the
/// star-shaped proxy for the disk condition: every X^I is pure |I|-dimensional,
/// connected through shared (|I|-1)-faces and coned from O.
QuasiConvenience is_quasi_convenient(const NewtonRegion& x);

}  // namespace newton_mu
