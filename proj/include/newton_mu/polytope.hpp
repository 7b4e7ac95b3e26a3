#pragma once

#include "newton_mu/geometry.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace newton_mu {

/// Affine dimension of a point set (-1 for the empty set).
int affine_dim(std::span<const Point> points);

/// Facets of conv(points[ids]) inside its own affine hull, each returned as
/// the sorted subset of `ids` lying on it. Brute force over hyperplanes through
/// affinely independent subsets; intended for a few dozen points at most.
std::vector<std::vector<std::size_t>> polytope_facets(const std::vector<Point>& points,
                                                      const std::vector<std::size_t>& ids);

/// Pulling triangulation driven by a global vertex order: a polytope is coned
/// from its lowest-ranked vertex over the triangulations of the facets not
/// containing it. Faces shared between polytopes receive identical
/// triangulations, so triangulating every facet of a complex yields a
/// face-to-face triangulation of the complex.
class PullingTriangulator {
 public:
  /// rank[i] is the priority of points[i]; lower is pulled first.
  PullingTriangulator(std::vector<Point> points, std::vector<std::size_t> rank);

  /// Simplices (as sorted id lists) covering conv(points[ids]); every id must
  /// be a vertex of that polytope.
  std::vector<std::vector<std::size_t>> triangulate(std::vector<std::size_t> ids);

  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> rank_;
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo_;
};

/// Inward facet inequality normal . x >= offset.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;
};

/// Facet inequalities of a full-dimensional simplex.
std::vector<HalfSpace> halfspaces(const Simplex& s);

/// n! times the volume of the intersection of two full-dimensional simplices
/// in the same R^n (0 when the intersection has empty interior).
Rational intersection_normalized_volume(const Simplex& a, const Simplex& b);

/// True when two full-dimensional simplices share an interior point.
bool interiors_overlap(const Simplex& a, const Simplex& b);

}  // namespace newton_mu
