#include "newton_mu/region.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"
#include "newton_mu/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace newton_mu {

NewtonRegion NewtonRegion::from_simplices(std::size_t n, std::vector<Simplex> simplices) {
  NewtonRegion r;
  r.n_ = n;
  for (const auto& s : simplices) {
    if (s.ambient_dim() != n)
      throw DomainError(DomainError::Kind::InvalidRegion, "simplex of ambient dimension " +
                                                              std::to_string(s.ambient_dim()) + " in a region of dimension " +
                                                              std::to_string(n));
    if (s.contains_origin()) r.has_origin_ = true;
  }
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  r.simplices_ = std::move(simplices);
  return r;
}

NewtonRegion NewtonRegion::point_or_empty(std::size_t n, bool has_origin) {
  NewtonRegion r;
  r.n_ = n;
  r.has_origin_ = has_origin;
  r.trusted_ = true;
  return r;
}

NewtonRegion NewtonRegion::from_support(SupportSet source, std::vector<Simplex> simplices) {
  NewtonRegion r = from_simplices(source.dim(), std::move(simplices));
  r.has_origin_ = true;
  r.source_ = std::move(source);
  r.trusted_ = true;
  return r;
}

std::vector<Point> NewtonRegion::vertices() const {
  std::set<Point> v;
  for (const auto& s : simplices_) v.insert(s.vertices().begin(), s.vertices().end());
  if (has_origin_) v.insert(Point::origin(n_));
  return {v.begin(), v.end()};
}

NewtonRegion gamma_minus(const SupportSet& s) { return gamma_minus(s, {}); }

NewtonRegion gamma_minus(const SupportSet& s, const std::vector<Exponent>& priority) {
  check_guardrails(s.dim(), s.size());
  if (s.contains(Exponent(s.dim(), 0)))
    throw DomainError(DomainError::Kind::Degenerate, "the support contains the origin, so there is no singular point at 0");
  const auto conv = is_convenient(s);
  if (!conv.convenient) throw NotConvenientError(conv.missing_axes);
  std::vector<Simplex> simplices;
  for (auto& cell : boundary_triangulation(s, priority)) {
    auto verts = std::move(cell.vertices);
    verts.push_back(Point::origin(s.dim()));
    simplices.emplace_back(std::move(verts));
  }
  return NewtonRegion::from_support(s, std::move(simplices));
}

std::vector<Simplex> faces_in(const NewtonRegion& x, const CoordinateSubset& j) {
  std::set<Simplex> faces;
  const std::size_t k = j.size();
  for (const auto& s : x.simplices()) {
    auto v = s.vertices_in(j);
    if (v.size() == k + 1) faces.insert(Simplex(std::move(v)));
  }
  return {faces.begin(), faces.end()};
}

Rational face_volume(const NewtonRegion& x, const CoordinateSubset& j) {
  if (j.size() == 0) return x.has_origin() ? 1 : 0;
  Rational total = 0;
  for (const auto& f : faces_in(x, j)) total += simplex_volume(f.vertices()).normalized;
  return total;
}

void validate_region(const NewtonRegion& x) {
  if (x.trusted()) return;
  for (const auto& j : all_subsets(x.dim())) {
    if (j.size() == 0) continue;
    std::vector<Simplex> faces;
    for (const auto& f : faces_in(x, j)) faces.push_back(drop_coordinates(f, j.complement()));
    for (std::size_t a = 0; a < faces.size(); ++a)
      for (std::size_t b = a + 1; b < faces.size(); ++b)
        if (interiors_overlap(faces[a], faces[b]))
          throw DomainError(DomainError::Kind::InvalidRegion,
                            "simplices overlap inside R^" + to_string(j) + ": " + to_string(faces[a].vertices().front()) +
                                "... and " + to_string(faces[b].vertices().front()) + "...");
  }
}

NewtonRegion restrict(const NewtonRegion& x, const CoordinateSubset& i) {
  const std::size_t k = i.size();
  if (k == 0) return NewtonRegion::point_or_empty(0, x.has_origin());
  if (x.source()) {
    auto sub = restrict(*x.source(), i);
    if (!sub) return NewtonRegion::point_or_empty(k, true);
    return gamma_minus(*sub);
  }
  std::vector<Simplex> pieces;
  for (const auto& s : x.simplices()) {
    auto v = s.vertices_in(i);
    if (v.empty()) continue;
    pieces.push_back(drop_coordinates(Simplex(std::move(v)), i.complement()));
  }
  auto r = NewtonRegion::from_simplices(k, std::move(pieces));
  if (x.has_origin() && r.simplices().empty()) return NewtonRegion::point_or_empty(k, true);
  return r;
}

std::vector<Point> project_vertices(const Simplex& s, const CoordinateSubset& i) {
  std::set<Point> out;
  for (const auto& v : s.vertices()) out.insert(zero_coordinates(v, i));
  return {out.begin(), out.end()};
}

Simplex project(const Simplex& s, const CoordinateSubset& i) { return Simplex(project_vertices(s, i)); }

NewtonRegion project(const NewtonRegion& x, const CoordinateSubset& i) {
  std::vector<Simplex> out;
  bool origin = x.has_origin();
  for (const auto& s : x.simplices()) {
    auto v = project_vertices(s, i);
    if (std::any_of(v.begin(), v.end(), [](const Point& p) { return p.is_origin(); })) origin = true;
    if (affinely_independent(v)) out.emplace_back(std::move(v));
  }
  if (out.empty()) return NewtonRegion::point_or_empty(x.dim(), origin);
  return NewtonRegion::from_simplices(x.dim(), std::move(out));
}

Point drop_coordinates(const Point& p, const CoordinateSubset& i) { return keep_coordinates(p, i.complement()); }

Simplex drop_coordinates(const Simplex& s, const CoordinateSubset& i) {
  std::vector<Point> v;
  for (const auto& p : s.vertices()) v.push_back(drop_coordinates(p, i));
  return Simplex(std::move(v));
}

NewtonRegion drop_coordinates(const NewtonRegion& x, const CoordinateSubset& i) {
  const std::size_t k = x.dim() - i.size();
  std::vector<Simplex> out;
  bool origin = x.has_origin();
  for (const auto& s : x.simplices()) {
    std::vector<Point> v;
    for (const auto& p : s.vertices()) v.push_back(drop_coordinates(p, i));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (std::any_of(v.begin(), v.end(), [](const Point& p) { return p.is_origin(); })) origin = true;
    if (affinely_independent(v)) out.emplace_back(std::move(v));
  }
  if (out.empty()) return NewtonRegion::point_or_empty(k, origin);
  return NewtonRegion::from_simplices(k, std::move(out));
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

}  // namespace

QuasiConvenience is_quasi_convenient(const NewtonRegion& x) {
  if (!x.has_origin()) return {false, "O is not in X"};
  for (const auto& v : x.vertices())
    for (const auto& c : v.coords())
      if (c != 0 && c < 1) return {false, "vertex " + to_string(v) + " has a nonzero coordinate below 1"};

  for (const auto& i : all_subsets(x.dim())) {
    if (i.size() == 0) continue;
    const auto faces = faces_in(x, i);
    const std::string name = "X^" + to_string(i);
    if (faces.empty()) return {false, name + " is not " + std::to_string(i.size()) + "-dimensional"};
    for (const auto& f : faces)
      if (!f.contains_origin()) return {false, name + " has a simplex not coned from O"};
    for (const auto& s : x.simplices()) {
      const auto v = s.vertices_in(i);
      if (v.empty()) continue;
      const bool covered = std::any_of(faces.begin(), faces.end(), [&](const Simplex& f) {
        return std::includes(f.vertices().begin(), f.vertices().end(), v.begin(), v.end());
      });
      if (!covered) return {false, name + " is not pure " + std::to_string(i.size()) + "-dimensional"};
    }
    std::vector<std::size_t> parent(faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t a = 0; a < faces.size(); ++a) {
      for (std::size_t b = a + 1; b < faces.size(); ++b) {
        std::vector<Point> common;
        std::set_intersection(faces[a].vertices().begin(), faces[a].vertices().end(), faces[b].vertices().begin(),
                              faces[b].vertices().end(), std::back_inserter(common));
        if (common.size() == i.size()) parent[find_root(parent, a)] = find_root(parent, b);
      }
    }
    for (std::size_t a = 1; a < faces.size(); ++a)
      if (find_root(parent, a) != find_root(parent, 0)) return {false, name + " is not connected through facets"};
  }
  return {true, ""};
}

}  // namespace newton_mu
