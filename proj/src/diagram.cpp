#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"
#include "newton_mu/kernels.hpp"
#include "newton_mu/linalg.hpp"
#include "newton_mu/lp.hpp"
#include "newton_mu/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace newton_mu {

namespace {

bool dominates(const Exponent& q, const Exponent& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (q[i] > p[i]) return false;
  return true;
}

// p lies in conv(others) + orthant.
bool redundant(const Exponent& p, const std::vector<Exponent>& others) {
  const std::size_t n = p.size();
  const std::size_t k = others.size();
  Matrix a(n + 1, k + n);
  std::vector<Rational> b(n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < k; ++j) a(c, j) = static_cast<long>(others[j][c]);
    a(c, k + c) = 1;
    b[c] = static_cast<long>(p[c]);
  }
  for (std::size_t j = 0; j < k; ++j) a(n, j) = 1;
  b[n] = 1;
  return feasible(a, b);
}

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

bool fits_int32(const std::vector<Exponent>& pts) {
  for (const auto& p : pts)
    for (auto c : p)
      if (c > std::numeric_limits<std::int32_t>::max()) return false;
  return true;
}

// True when <w, p> >= offset for every point of the support.
class SupportChecker {
 public:
  explicit SupportChecker(const std::vector<Exponent>& pts) : pts_(pts) {
    if (!pts.empty() && fits_int32(pts)) block_.emplace(pts.front().size(), pts);
    out_.resize(pts.size());
  }

  bool supports(const std::vector<Integer>& w, const Integer& offset) {
    if (block_) {
      std::vector<std::int64_t> w64;
      bool small = offset.fits_slong_p();
      for (const auto& x : w) {
        if (!x.fits_slong_p()) small = false;
        w64.push_back(small ? x.get_si() : 0);
      }
      if (small && kernels::fits(*block_, w64)) {
        kernels::dot(*block_, w64, out_);
        const long c = offset.get_si();
        for (std::size_t i = 0; i < pts_.size(); ++i)
          if (out_[i] < c) return false;
        return true;
      }
    }
    for (const auto& p : pts_) {
      Integer s = 0;
      for (std::size_t j = 0; j < p.size(); ++j) s += w[j] * static_cast<long>(p[j]);
      if (s < offset) return false;
    }
    return true;
  }

 private:
  const std::vector<Exponent>& pts_;
  std::optional<kernels::LatticeBlock> block_;
  std::vector<std::int64_t> out_;
};

struct RawFacet {
  std::vector<std::size_t> ids;  // into the vertex list
  std::vector<Integer> normal;
  Integer offset;
};

std::vector<RawFacet> compact_facets(const SupportSet& s, const std::vector<Exponent>& verts) {
  const std::size_t n = s.dim();
  SupportChecker checker(s.points());
  std::map<std::vector<Integer>, RawFacet> found;
  std::vector<std::vector<Rational>> chosen(n);
  for_each_combination(verts.size(), n, [&](const std::vector<std::size_t>& combo) {
    for (std::size_t i = 0; i < n; ++i) {
      chosen[i].assign(n, 0);
      for (std::size_t c = 0; c < n; ++c) chosen[i][c] = static_cast<long>(verts[combo[i]][c]);
    }
    const auto wq = hyperplane_normal(chosen);
    std::vector<Integer> w(n);
    int side = 0;
    for (std::size_t c = 0; c < n; ++c) {
      w[c] = wq[c].get_num();
      const int sg = sgn(w[c]);
      if (sg == 0 || (side != 0 && sg != side)) return;
      side = sg;
    }
    Integer g = 0;
    for (auto& x : w) {
      if (side < 0) x = -x;
      g = gcd(g, x);
    }
    for (auto& x : w) x /= g;
    if (found.count(w)) return;
    Integer offset = 0;
    for (std::size_t c = 0; c < n; ++c) offset += w[c] * static_cast<long>(verts[combo[0]][c]);
    if (!checker.supports(w, offset)) return;
    RawFacet f{{}, w, offset};
    for (std::size_t j = 0; j < verts.size(); ++j) {
      Integer v = 0;
      for (std::size_t c = 0; c < n; ++c) v += w[c] * static_cast<long>(verts[j][c]);
      if (v == offset) f.ids.push_back(j);
    }
    found.emplace(w, std::move(f));
  });
  std::vector<RawFacet> out;
  for (auto& [w, f] : found) out.push_back(std::move(f));
  return out;
}

}  // namespace

std::vector<Exponent> diagram_vertices(const SupportSet& s) {
  check_guardrails(s.dim(), s.size());
  const auto& pts = s.points();
  std::vector<Exponent> minimal;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
      dominated = j != i && dominates(pts[j], pts[i]);
    if (!dominated) minimal.push_back(pts[i]);
  }
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Exponent> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (others.empty() || !redundant(minimal[i], others)) out.push_back(minimal[i]);
  }
  return out;
}

NewtonDiagram newton_diagram(const SupportSet& s) {
  NewtonDiagram d;
  d.n = s.dim();
  const auto verts = diagram_vertices(s);
  for (const auto& v : verts) d.vertices.push_back(to_point(v));
  for (auto& f : compact_facets(s, verts)) {
    Facet out{{}, std::move(f.normal), std::move(f.offset)};
    for (auto id : f.ids) out.vertices.push_back(d.vertices[id]);
    d.facets.push_back(std::move(out));
  }
  return d;
}

std::vector<BoundaryCell> boundary_triangulation(const SupportSet& s, const std::vector<Exponent>& priority) {
  const auto verts = diagram_vertices(s);
  const auto facets = compact_facets(s, verts);

  std::vector<std::size_t> rank(verts.size());
  std::iota(rank.begin(), rank.end(), priority.size());
  for (std::size_t r = 0; r < priority.size(); ++r) {
    auto it = std::lower_bound(verts.begin(), verts.end(), priority[r]);
    if (it != verts.end() && *it == priority[r]) rank[static_cast<std::size_t>(it - verts.begin())] = r;
  }
  std::vector<Point> pts;
  for (const auto& v : verts) pts.push_back(to_point(v));
  PullingTriangulator tri(pts, rank);

  std::vector<BoundaryCell> out;
  for (const auto& f : facets) {
    for (const auto& cell : tri.triangulate(f.ids)) {
      BoundaryCell c{{}, f.normal, f.offset};
      for (auto id : cell) c.vertices.push_back(pts[id]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

Convenience is_convenient(const SupportSet& s) {
  Convenience c;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    bool hit = false;
    for (const auto& p : s.points()) {
      bool on_axis = p[i] > 0;
      for (std::size_t j = 0; j < p.size() && on_axis; ++j)
        if (j != i && p[j] != 0) on_axis = false;
      if (on_axis) {
        hit = true;
        break;
      }
    }
    if (!hit) c.missing_axes.push_back(i);
  }
  c.convenient = c.missing_axes.empty();
  return c;
}

SupportSet standard_modification(const SupportSet& s, std::int64_t m) {
  std::int64_t largest = 0;
  for (const auto& p : s.points())
    for (auto c : p) largest = std::max(largest, c);
  if (m <= largest)
    throw UsageError("modification exponent " + std::to_string(m) + " must exceed every exponent in the support (" +
                     std::to_string(largest) + ")");
  auto pts = s.points();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Exponent e(s.dim(), 0);
    e[i] = m;
    pts.push_back(std::move(e));
  }
  return s.with_points(std::move(pts));
}

bool simplex_below_diagram(const SupportSet& s, const std::vector<Rational>& a) {
  if (a.size() != s.dim())
    throw UsageError("expected " + std::to_string(s.dim()) + " intercepts, got " + std::to_string(a.size()));
  for (const auto& x : a)
    if (x < 1) throw UsageError("intercept " + to_string(x) + " is below 1");
  for (const auto& p : s.points()) {
    Rational t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) t += Rational(static_cast<long>(p[i])) / a[i];
    if (t < 1) return false;
  }
  return true;
}

}  // namespace newton_mu
