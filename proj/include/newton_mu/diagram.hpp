#pragma once

#include "newton_mu/support.hpp"

#include <vector>

namespace newton_mu {

/// A compact facet of the Newton polyhedron: inner_normal . x >= offset on the
/// whole support, with equality on `vertices`.
struct Facet {
  std::vector<Point> vertices;
  std::vector<Integer> inner_normal;  // primitive, strictly positive
  Integer offset;
};

struct NewtonDiagram {
  std::size_t n = 0;
  std::vector<Facet> facets;   // sorted by inner normal
  std::vector<Point> vertices;  // Vert of the Newton boundary, lex order
};

/// Support points that are vertices of conv(support + orthant).
std::vector<Exponent> diagram_vertices(const SupportSet& s);

NewtonDiagram newton_diagram(const SupportSet& s);

/// An (n-1)-simplex of the triangulated Newton boundary with the hyperplane
/// of the facet containing it.
struct BoundaryCell {
  std::vector<Point> vertices;
  std::vector<Integer> normal;
  Integer offset;
};

/// Pulling triangulation of every compact facet. Vertices listed earlier in
/// `priority` are pulled first; vertices not listed follow in lex order. The
/// default is plain lex order.
std::vector<BoundaryCell> boundary_triangulation(const SupportSet& s, const std::vector<Exponent>& priority = {});

struct Convenience {
  bool convenient = false;
  std::vector<std::size_t> missing_axes;  // 0-based
};

Convenience is_convenient(const SupportSet& s);

/// s together with m e_i for every axis. Throws UsageError unless m exceeds
/// every coordinate appearing in s.
SupportSet standard_modification(const SupportSet& s, std::int64_t m);

/// True when every support point satisfies sum_i p_i / a_i >= 1.
/// Throws UsageError unless every a_i >= 1 and a has length n.
bool simplex_below_diagram(const SupportSet& s, const std::vector<Rational>& a);

}  // namespace newton_mu
