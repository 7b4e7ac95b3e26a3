#include "newton_mu/newton.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"
#include "newton_mu/linalg.hpp"
#include "newton_mu/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace newton_mu {

NewtonReport newton_number(const NewtonRegion& x) {
  validate_region(x);
  NewtonReport r;
  r.n = x.dim();
  for (const auto& i : all_subsets(x.dim())) {
    NewtonTerm t{i, face_volume(x, i), ((x.dim() - i.size()) % 2 == 0) ? 1 : -1};
    r.total += t.sign * t.factorial_volume;
    r.terms.push_back(std::move(t));
  }
  return r;
}

namespace {

void require_full_simplex_off_origin(const Simplex& s) {
  if (s.dim() != s.ambient_dim())
    throw DomainError(DomainError::Kind::Hypothesis, "expected an n-simplex, got dimension " + std::to_string(s.dim()));
  if (s.contains_origin()) throw DomainError(DomainError::Kind::Hypothesis, "the simplex contains the origin");
}

std::string describe(const std::vector<Point>& pts) {
  std::string out = "|";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + to_string(pts[i]);
  return out + "|";
}

// Minimal full-supporting subset, with the empty subset for simplices through O.
std::pair<CoordinateSubset, std::vector<Point>> class_key(const Simplex& s) {
  if (s.contains_origin()) return {CoordinateSubset::empty(s.ambient_dim()), {Point::origin(s.ambient_dim())}};
  const auto i = minimal_full_supporting(s);
  return {i, s.vertices_in(i)};
}

}  // namespace

std::vector<CoordinateSubset> full_supporting_subsets(const Simplex& s) {
  require_full_simplex_off_origin(s);
  std::vector<CoordinateSubset> out;
  for (const auto& i : all_subsets(s.ambient_dim()))
    if (s.vertices_in(i).size() == i.size() + 1) out.push_back(i);
  return out;
}

CoordinateSubset minimal_full_supporting(const Simplex& s) {
  const auto all = full_supporting_subsets(s);
  CoordinateSubset m = CoordinateSubset::full(s.ambient_dim());
  for (const auto& i : all) m = m.intersect(i);
  if (std::find(all.begin(), all.end(), m) == all.end())
    throw DomainError(DomainError::Kind::Inconsistent,
                      "intersection " + to_string(m) + " of full-supporting subsets is not full-supporting");
  return m;
}

FactoredNewton newton_number_factored(const Simplex& s) { return newton_number_factored(std::vector<Simplex>{s}); }

FactoredNewton newton_number_factored(const std::vector<Simplex>& piece) {
  if (piece.empty()) throw DomainError(DomainError::Kind::Hypothesis, "empty piece");
  const std::size_t n = piece.front().ambient_dim();
  for (const auto& s : piece) {
    if (s.ambient_dim() != n) throw DomainError(DomainError::Kind::Hypothesis, "simplices of different dimensions");
    require_full_simplex_off_origin(s);
  }
  const auto key = class_key(piece.front());
  for (const auto& s : piece)
    if (class_key(s) != key)
      throw DomainError(DomainError::Kind::Hypothesis,
                        "simplices " + describe(piece.front().vertices()) + " and " + describe(s.vertices()) +
                            " do not share the minimal full-supporting subspace and its face");

  FactoredNewton f;
  f.minimal = key.first;
  f.base_volume = simplex_volume(key.second).normalized;
  const auto dropped = f.minimal;
  std::vector<Simplex> projected;
  for (const auto& s : piece) {
    std::set<Point> img;
    for (const auto& v : s.vertices()) img.insert(drop_coordinates(v, dropped));
    std::vector<Point> pts(img.begin(), img.end());
    if (pts.size() != n - dropped.size() + 1 || !affinely_independent(pts)) {
      f.fallback = true;
      break;
    }
    projected.emplace_back(std::move(pts));
  }
  if (f.fallback) {
    f.value = newton_number(NewtonRegion::from_simplices(n, piece)).total;
    return f;
  }
  f.projected_nu = newton_number(NewtonRegion::from_simplices(n - dropped.size(), std::move(projected))).total;
  f.value = f.base_volume * f.projected_nu;
  return f;
}

namespace {

std::optional<SupportSet> implied_support(const NewtonRegion& x) {
  if (x.source()) return x.source();
  if (!x.has_origin()) return std::nullopt;
  std::vector<Exponent> pts;
  for (const auto& v : x.vertices()) {
    if (v.is_origin()) continue;
    if (!v.is_integral()) return std::nullopt;
    Exponent e;
    for (const auto& c : v.coords()) {
      if (!c.get_num().fits_slong_p()) return std::nullopt;
      e.push_back(c.get_num().get_si());
    }
    pts.push_back(std::move(e));
  }
  if (pts.empty()) return std::nullopt;
  try {
    auto s = SupportSet::with_default_names(x.dim(), std::move(pts));
    if (gamma_minus(s).simplices() == x.simplices()) return s;
  } catch (const Error&) {
  }
  return std::nullopt;
}

struct Cell {
  std::vector<Point> v;
  std::vector<Rational> w;
  Rational c;
};

Rational dot(const std::vector<Rational>& w, const Point& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

std::vector<Simplex> sweep_difference(const SupportSet& sx, const SupportSet& sy) {
  const auto dx = newton_diagram(sx);
  const auto dy = newton_diagram(sy);
  for (const auto& v : dx.vertices)
    for (const auto& f : dy.facets) {
      std::vector<Rational> w(f.inner_normal.begin(), f.inner_normal.end());
      if (dot(w, v) < Rational(f.offset))
        throw DomainError(DomainError::Kind::Containment,
                          "the inner region is not contained in the outer one: vertex " + to_string(v) +
                              " of the outer boundary lies below the inner boundary");
    }

  std::vector<Cell> cells;
  for (auto& b : boundary_triangulation(sx)) {
    Cell c{std::move(b.vertices), {}, Rational(b.offset)};
    for (const auto& x : b.normal) c.w.push_back(Rational(x));
    cells.push_back(std::move(c));
  }

  std::vector<Simplex> pieces;
  for (const auto& a : dy.vertices) {
    const bool below = std::any_of(dx.facets.begin(), dx.facets.end(), [&](const Facet& f) {
      std::vector<Rational> w(f.inner_normal.begin(), f.inner_normal.end());
      return dot(w, a) < Rational(f.offset);
    });
    if (!below) continue;

    std::vector<Cell> kept;
    std::map<std::vector<Point>, int> ridges;
    for (auto& c : cells) {
      if (dot(c.w, a) >= c.c) {
        kept.push_back(std::move(c));
        continue;
      }
      auto verts = c.v;
      verts.push_back(a);
      pieces.emplace_back(std::move(verts));
      for (std::size_t skip = 0; skip < c.v.size(); ++skip) {
        std::vector<Point> r;
        for (std::size_t j = 0; j < c.v.size(); ++j)
          if (j != skip) r.push_back(c.v[j]);
        ++ridges[r];
      }
    }
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      std::vector<Point> pts = r;
      pts.push_back(a);
      std::sort(pts.begin(), pts.end());
      std::vector<std::vector<Rational>> coords;
      for (const auto& p : pts) coords.push_back(p.coords());
      auto w = hyperplane_normal(coords);
      Rational off = dot(w, pts.front());
      if (off == 0) continue;  // lies in a coordinate hyperplane through O
      if (off < 0) {
        for (auto& x : w) x = -x;
        off = -off;
      }
      kept.push_back({std::move(pts), std::move(w), std::move(off)});
    }
    cells = std::move(kept);
  }
  return pieces;
}

}  // namespace

std::vector<DecompositionPiece> decompose_difference(const NewtonRegion& x, const NewtonRegion& y) {
  if (x.dim() != y.dim())
    throw UsageError("regions of dimension " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
  const std::size_t n = x.dim();
  std::vector<Simplex> diff;
  const auto sx = implied_support(x);
  const auto sy = sx ? implied_support(y) : std::nullopt;
  if (sx && sy) {
    diff = sweep_difference(*sx, *sy);
  } else {
    validate_region(x);
    validate_region(y);
    for (const auto& s : y.simplices())
      if (!std::binary_search(x.simplices().begin(), x.simplices().end(), s))
        throw DomainError(DomainError::Kind::Containment,
                          "simplex " + describe(s.vertices()) +
                              " of the inner region is not a simplex of the outer region; supply a common refinement");
    std::set_difference(x.simplices().begin(), x.simplices().end(), y.simplices().begin(), y.simplices().end(),
                        std::back_inserter(diff));
  }

  std::map<std::pair<CoordinateSubset, std::vector<Point>>, std::vector<Simplex>> groups;
  for (auto& s : diff) {
    if (s.dim() != n) continue;
    auto key = class_key(s);
    groups[std::move(key)].push_back(std::move(s));
  }
  std::vector<DecompositionPiece> out;
  for (auto& [key, simplices] : groups) {
    DecompositionPiece p;
    p.id = out.size();
    std::sort(simplices.begin(), simplices.end());
    p.nu = newton_number(NewtonRegion::from_simplices(n, simplices)).total;
    p.simplices = std::move(simplices);
    p.minimal = key.first;
    p.base = key.second;
    out.push_back(std::move(p));
  }
  return out;
}

VanishingVerdict vanishing_check(const NewtonRegion& x, std::optional<bool> complement_convex) {
  VanishingVerdict v;
  v.nu = newton_number(x).total;
  v.quasi_convenient = is_quasi_convenient(x).ok;
  const auto verts = x.vertices();
  const std::size_t n = x.dim();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, 0);
    e[j] = 1;
    const Point ej(e);
    if (!std::binary_search(verts.begin(), verts.end(), ej)) continue;
    v.unit_vertices.push_back(j);
    const bool others_flat =
        std::all_of(verts.begin(), verts.end(), [&](const Point& p) { return p == ej || p[j] == 0; });
    if (others_flat && !v.isolated_unit) v.isolated_unit = j;
  }
  v.zero_implies_unit = v.nu != 0 || !v.unit_vertices.empty();
  v.complement_convex = x.source() ? std::optional<bool>(true) : complement_convex;
  if (v.complement_convex && *v.complement_convex) v.iff_holds = (v.nu == 0) == !v.unit_vertices.empty();
  return v;
}

void settle(BoundCertificate& c) {
  c.verdict = std::all_of(c.chain.begin(), c.chain.end(), [](const ChainStep& s) { return !s.holds || *s.holds; });
}

NewtonRegion simplex_region(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  std::vector<Point> v{Point::origin(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(n, 0);
    c[i] = a[i];
    v.emplace_back(std::move(c));
  }
  return NewtonRegion::from_simplices(n, {Simplex(std::move(v))});
}

namespace {

void check_intercepts(std::size_t n, const std::vector<Rational>& a) {
  if (a.size() != n) throw UsageError("expected " + std::to_string(n) + " intercepts, got " + std::to_string(a.size()));
  for (const auto& x : a)
    if (x < 1) throw UsageError("intercept " + to_string(x) + " is below 1");
}

Rational product_bound(const std::vector<Rational>& a) {
  Rational p = 1;
  for (const auto& x : a) p *= x - 1;
  return p;
}

}  // namespace

bool contains_simplex(const NewtonRegion& x, const std::vector<Rational>& a) {
  check_intercepts(x.dim(), a);
  if (x.source()) return simplex_below_diagram(*x.source(), a);
  validate_region(x);
  const Simplex y = simplex_region(a).simplices().front();
  Rational covered = 0;
  for (const auto& s : x.simplices())
    if (s.dim() == x.dim()) covered += intersection_normalized_volume(y, s);
  Rational full = 1;
  for (const auto& v : a) full *= v;
  return covered == full;
}

BoundCertificate bound_simplex(const NewtonRegion& x, const std::vector<Rational>& a) {
  if (!contains_simplex(x, a))
    throw DomainError(DomainError::Kind::Containment, "the simplex Y_a is not contained in the region");
  BoundCertificate c;
  c.a = a;
  c.bound = product_bound(a);
  c.nu_value = newton_number(x).total;
  c.chain.push_back({"nu(X)", ">=", "prod(a_i-1)", "computed", c.nu_value >= c.bound});
  c.chain.push_back({"prod(a_i-1)", ">=", "0", "computed", c.bound >= 0});
  settle(c);
  return c;
}

Stabilized stabilized_modification(const SupportSet& s, const std::function<Rational(const SupportSet&)>& value) {
  std::int64_t m0 = 0;
  for (const auto& p : s.points()) {
    std::int64_t sum = 0;
    for (auto c : p) sum += c;
    m0 = std::max(m0, sum);
  }
  m0 += 1;
  const std::int64_t cap = m0 << 10;
  std::int64_t m = m0;
  auto g = standard_modification(s, m);
  Rational v = value(g);
  while (2 * m <= cap) {
    auto g2 = standard_modification(s, 2 * m);
    Rational v2 = value(g2);
    if (v2 == v) return {std::move(g), m, std::move(v)};
    m *= 2;
    g = std::move(g2);
    v = std::move(v2);
  }
  throw DomainError(DomainError::Kind::NotStabilized,
                    "the modified value did not stabilize up to m = " + std::to_string(cap) +
                        " (the singularity may not be isolated)");
}

BoundCertificate milnor_lower_bound(const SupportSet& s, const std::vector<Rational>& a) {
  check_intercepts(s.dim(), a);
  if (!simplex_below_diagram(s, a))
    throw DomainError(DomainError::Kind::Containment, "the hyperplane through the intercepts is not below the Newton boundary");
  BoundCertificate c;
  c.a = a;
  c.bound = product_bound(a);
  auto nu_of = [](const SupportSet& g) { return newton_number(gamma_minus(g)).total; };
  if (is_convenient(s).convenient) {
    c.nu_value = nu_of(s);
  } else {
    auto st = stabilized_modification(s, nu_of);
    c.modification_m = st.m;
    c.nu_value = st.value;
  }
  c.chain.push_back({"mu", ">=", "nu(g)", kKouchnirenkoStatus, std::nullopt});
  c.chain.push_back({"nu(g)", ">=", "prod(a_i-1)", "computed", c.nu_value >= c.bound});
  c.chain.push_back({"prod(a_i-1)", ">=", "0", "computed", c.bound >= 0});
  settle(c);
  return c;
}

}  // namespace newton_mu
