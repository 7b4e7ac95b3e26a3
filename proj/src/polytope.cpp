#include "newton_mu/polytope.hpp"
#include "newton_mu/linalg.hpp"
#include "newton_mu/lp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace newton_mu {

namespace {

Matrix difference_rows(const std::vector<Point>& pts, const std::vector<std::size_t>& ids) {
  const std::size_t n = pts[ids.front()].dim();
  Matrix m(ids.size() - 1, n);
  for (std::size_t r = 1; r < ids.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = pts[ids[r]][c] - pts[ids[0]][c];
  return m;
}

// Calls f(subset) for every k-combination of [0, n).
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int affine_dim(std::span<const Point> points) {
  if (points.empty()) return -1;
  std::vector<Point> v(points.begin(), points.end());
  std::vector<std::size_t> ids(v.size());
  std::iota(ids.begin(), ids.end(), 0);
  if (ids.size() == 1) return 0;
  return static_cast<int>(rank(difference_rows(v, ids)));
}

std::vector<std::vector<std::size_t>> polytope_facets(const std::vector<Point>& points,
                                                      const std::vector<std::size_t>& ids) {
  if (ids.size() < 2) return {};
  const Matrix diffs = difference_rows(points, ids);
  const auto pivots = pivot_columns(diffs);
  const std::size_t k = pivots.size();
  if (k == 0) return {};

  // Coordinates on the pivot columns give an affine isomorphism of the hull onto R^k.
  std::vector<std::vector<Rational>> proj(ids.size(), std::vector<Rational>(k));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) proj[i][c] = points[ids[i]][pivots[c]];

  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<Rational>> chosen(k);
  for_each_combination(ids.size(), k, [&](const std::vector<std::size_t>& combo) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = proj[combo[i]];
    const auto w = hyperplane_normal(chosen);
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) return;
    int side = 0;
    std::vector<std::size_t> on;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < k; ++c) s += w[c] * (proj[j][c] - chosen[0][c]);
      const int sg = sgn(s);
      if (sg == 0) {
        on.push_back(ids[j]);
      } else if (side == 0) {
        side = sg;
      } else if (sg != side) {
        return;
      }
    }
    std::sort(on.begin(), on.end());
    found.insert(std::move(on));
  });
  return {found.begin(), found.end()};
}

PullingTriangulator::PullingTriangulator(std::vector<Point> points, std::vector<std::size_t> rank)
    : points_(std::move(points)), rank_(std::move(rank)) {
  if (rank_.size() != points_.size()) throw std::invalid_argument("PullingTriangulator: rank size mismatch");
}

std::vector<std::vector<std::size_t>> PullingTriangulator::triangulate(std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (auto it = memo_.find(ids); it != memo_.end()) return it->second;

  std::vector<std::vector<std::size_t>> out;
  const std::size_t k = ids.size() == 1 ? 0 : rank(difference_rows(points_, ids));
  if (ids.size() == k + 1) {
    out.push_back(ids);
  } else {
    const std::size_t apex =
        *std::min_element(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
    for (const auto& facet : polytope_facets(points_, ids)) {
      if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
      for (auto cell : triangulate(facet)) {
        cell.push_back(apex);
        std::sort(cell.begin(), cell.end());
        out.push_back(std::move(cell));
      }
    }
    std::sort(out.begin(), out.end());
  }
  memo_.emplace(ids, out);
  return out;
}

std::vector<HalfSpace> halfspaces(const Simplex& s) {
  const std::size_t n = s.ambient_dim();
  if (s.dim() != n) throw std::invalid_argument("halfspaces: simplex is not full-dimensional");
  const auto& v = s.vertices();
  std::vector<HalfSpace> out;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::vector<Rational>> face;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) face.push_back(v[i].coords());
    auto w = hyperplane_normal(face);
    Rational c = 0;
    for (std::size_t j = 0; j < n; ++j) c += w[j] * face[0][j];
    Rational at_opposite = 0;
    for (std::size_t j = 0; j < n; ++j) at_opposite += w[j] * v[skip][j];
    if (at_opposite < c) {
      for (auto& x : w) x = -x;
      c = -c;
    }
    out.push_back({std::move(w), std::move(c)});
  }
  return out;
}

Rational intersection_normalized_volume(const Simplex& a, const Simplex& b) {
  const std::size_t n = a.ambient_dim();
  auto hs = halfspaces(a);
  for (auto& h : halfspaces(b)) hs.push_back(std::move(h));

  // Vertex enumeration: every n-subset of tight constraints with a unique
  // feasible solution.
  std::set<Point> verts;
  for_each_combination(hs.size(), n, [&](const std::vector<std::size_t>& combo) {
    Matrix m(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = hs[combo[r]].normal[c];
      rhs[r] = hs[combo[r]].offset;
    }
    auto x = solve(std::move(m), std::move(rhs));
    if (!x) return;
    for (const auto& h : hs) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c) s += h.normal[c] * (*x)[c];
      if (s < h.offset) return;
    }
    verts.insert(Point(std::move(*x)));
  });
  if (verts.size() < n + 1) return 0;
  std::vector<Point> pts(verts.begin(), verts.end());
  if (affine_dim(pts) < static_cast<int>(n)) return 0;

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  PullingTriangulator tri(pts, order);
  Rational total = 0;
  for (const auto& cell : tri.triangulate(order)) {
    std::vector<Point> sv;
    for (auto id : cell) sv.push_back(pts[id]);
    total += normalized_volume_full(sv);
  }
  return total;
}

bool interiors_overlap(const Simplex& a, const Simplex& b) {
  const std::size_t n = a.ambient_dim();
  if (b.ambient_dim() != n || a.dim() != n || b.dim() != n)
    throw std::invalid_argument("interiors_overlap: need two full-dimensional simplices in the same space");

  // A facet hyperplane of either simplex that weakly separates settles it.
  auto separated_by_facet = [](const Simplex& s, const Simplex& t) {
    for (const auto& h : halfspaces(s)) {
      bool all_outside = true;
      for (const auto& v : t.vertices()) {
        Rational val = 0;
        for (std::size_t c = 0; c < v.dim(); ++c) val += h.normal[c] * v[c];
        if (val > h.offset) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  if (separated_by_facet(a, b) || separated_by_facet(b, a)) return false;

  // maximize t subject to barycentric weights >= t in both simplices and a
  // common point; variables: lambda (n+1), mu (n+1), t, slacks (2n+2).
  const std::size_t nv = 2 * (n + 1) + 1 + 2 * (n + 1);
  const std::size_t nc = n + 2 + 2 * (n + 1);
  Matrix m(nc, nv);
  std::vector<Rational> rhs(nc, 0);
  const std::size_t t_col = 2 * (n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i <= n; ++i) {
      m(c, i) = a.vertices()[i][c];
      m(c, n + 1 + i) = -b.vertices()[i][c];
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    m(n, i) = 1;
    m(n + 1, n + 1 + i) = 1;
  }
  rhs[n] = 1;
  rhs[n + 1] = 1;
  for (std::size_t i = 0; i < 2 * (n + 1); ++i) {
    const std::size_t row = n + 2 + i;
    m(row, i) = 1;
    m(row, t_col) = -1;
    m(row, t_col + 1 + i) = -1;
  }
  std::vector<Rational> cost(nv, 0);
  cost[t_col] = 1;
  const auto res = maximize(m, rhs, cost);
  return res.status == LpResult::Status::Optimal && res.value > 0;
}

}  // namespace newton_mu
