#include "support/fixtures.hpp"

#include "newton_mu/diagram.hpp"
#include "newton_mu/polytope.hpp"
#include "newton_mu/region.hpp"

#include <doctest.h>

using namespace newton_mu;
using fixtures::pt;

namespace {

SupportSet supp2(std::vector<Exponent> pts) { return SupportSet::with_default_names(2, std::move(pts)); }

Rational total_normalized_volume(const NewtonRegion& x) {
  Rational v = 0;
  for (const auto& s : x.simplices())
    if (s.dim() == x.dim()) v += normalized_volume_full(s.vertices());
  return v;
}

bool facet_ok(const Facet& f, const Point& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) s += Rational(f.inner_normal[i]) * p[i];
  return s >= Rational(f.offset);
}

}  // namespace

TEST_CASE("support sets validate and normalize") {
  const SupportSet s = supp2({{0, 2}, {3, 0}, {0, 2}});
  CHECK(s.size() == 2);
  CHECK(s.variables() == std::vector<std::string>{"x", "y"});
  CHECK(s.contains({3, 0}));
  CHECK_THROWS_AS(supp2({}), UsageError);
  CHECK_THROWS_AS(supp2({{1, 2, 3}}), UsageError);
  CHECK_THROWS_AS(supp2({{-1, 2}}), UsageError);
  CHECK(default_variable_names(5) == std::vector<std::string>{"z1", "z2", "z3", "z4", "z5"});
}

TEST_CASE("guardrails on dimension and support size") {
  CHECK_THROWS_AS(check_guardrails(max_dimension() + 1, 3), DomainError);
  CHECK_THROWS_AS(check_guardrails(2, kMaxSupportSize + 1), DomainError);
  CHECK_NOTHROW(check_guardrails(max_dimension(), kMaxSupportSize));
}

TEST_CASE("newton diagram of small supports") {
  SUBCASE("two axis points") {
    const auto d = newton_diagram(supp2({{3, 0}, {0, 2}}));
    REQUIRE(d.facets.size() == 1);
    CHECK(d.facets[0].inner_normal == std::vector<Integer>{2, 3});
    CHECK(d.facets[0].offset == 6);
    CHECK(d.facets[0].vertices == std::vector<Point>{pt({0, 2}), pt({3, 0})});
  }
  SUBCASE("an interior point below the segment") {
    const auto d = newton_diagram(supp2({{3, 0}, {1, 1}, {0, 2}}));
    REQUIRE(d.facets.size() == 2);
    CHECK(d.vertices == std::vector<Point>{pt({0, 2}), pt({1, 1}), pt({3, 0})});
  }
  SUBCASE("a point above the boundary is not a vertex") {
    const auto d = newton_diagram(supp2({{2, 0}, {0, 2}, {2, 2}}));
    CHECK(d.facets.size() == 1);
    CHECK(d.vertices.size() == 2);
  }
  SUBCASE("four-variable support where every point is a vertex") {
    const auto s = fixtures::poly_support("x^3+y^3+z^5+x*w^5+y^2*z*w+w^8");
    CHECK(diagram_vertices(s).size() == 6);
  }
  SUBCASE("facet inequalities hold for the whole support") {
    fixtures::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = fixtures::convenient_support(rng, 2 + trial % 3, 6, 3);
      const auto d = newton_diagram(s);
      for (const auto& f : d.facets) {
        for (const auto& e : s.points()) CHECK(facet_ok(f, to_point(e)));
        for (const auto& c : f.inner_normal) CHECK(c > 0);
      }
    }
  }
}

TEST_CASE("convenience and standard modification") {
  CHECK(is_convenient(supp2({{3, 0}, {0, 2}})).convenient);
  const auto c = is_convenient(supp2({{2, 1}, {0, 4}}));
  CHECK_FALSE(c.convenient);
  CHECK(c.missing_axes == std::vector<std::size_t>{0});
  CHECK(is_convenient(fixtures::poly_support("x^3+y^3+z^5+x*w^5+y*w^5+t*z*w^6+w^8")).convenient);

  const auto g = standard_modification(supp2({{2, 1}, {0, 4}}), 10);
  CHECK(g.contains({10, 0}));
  CHECK(g.contains({0, 10}));
  CHECK_THROWS_AS(standard_modification(supp2({{2, 1}, {0, 4}}), 4), UsageError);
}

TEST_CASE("hyperplane below the diagram") {
  CHECK(simplex_below_diagram(supp2({{3, 0}, {0, 2}}), {3, 2}));
  CHECK(simplex_below_diagram(supp2({{2, 1}, {0, 4}}), {Rational(8, 3), 4}));
  CHECK_FALSE(simplex_below_diagram(supp2({{3, 0}, {0, 2}}), {4, 2}));
  CHECK_THROWS_AS(simplex_below_diagram(supp2({{3, 0}, {0, 2}}), {Rational(1, 2), 2}), UsageError);
}

TEST_CASE("gamma_minus builds coned triangulations") {
  SUBCASE("single triangle") {
    const auto x = gamma_minus(supp2({{3, 0}, {0, 2}}));
    REQUIRE(x.simplices().size() == 1);
    CHECK(simplex_volume(x.simplices()[0].vertices()).volume == 3);
    CHECK(x.has_origin());
  }
  SUBCASE("two triangles") {
    const auto x = gamma_minus(supp2({{3, 0}, {1, 1}, {0, 2}}));
    CHECK(x.simplices().size() == 2);
    CHECK(total_normalized_volume(x) / 2 == Rational(5, 2));
  }
  SUBCASE("errors") {
    try {
      gamma_minus(supp2({{2, 1}, {0, 4}}));
      FAIL("expected NotConvenientError");
    } catch (const NotConvenientError& e) {
      CHECK(e.missing_axes() == std::vector<std::size_t>{0});
    }
    CHECK_THROWS_AS(gamma_minus(supp2({{0, 0}, {2, 0}, {0, 2}})), DomainError);
  }
}

TEST_CASE("restriction and projection") {
  SUBCASE("restrict to one axis") {
    const auto x = gamma_minus(supp2({{3, 0}, {0, 2}}));
    const auto r = restrict(x, CoordinateSubset(2, {0}));
    CHECK(r.dim() == 1);
    CHECK(face_volume(x, CoordinateSubset(2, {0})) == 3);
  }
  SUBCASE("restrict an explicit 4-simplex to the last three coordinates") {
    const auto f = fixtures::family_y2zw(8);
    const auto x = NewtonRegion::from_simplices(4, {Simplex(f.delta)});
    const auto faces = faces_in(x, CoordinateSubset(4, {1, 2, 3}));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].vertices() == std::vector<Point>{pt({0, 0, 0, 8}), pt({0, 0, 5, 0}), pt({0, 2, 1, 1}), pt({0, 3, 0, 0})});
  }
  SUBCASE("empty subset") {
    const auto x = gamma_minus(supp2({{3, 0}, {0, 2}}));
    CHECK(face_volume(x, CoordinateSubset::empty(2)) == 1);
    const auto y = NewtonRegion::from_simplices(2, {Simplex({pt({1, 0}), pt({0, 1}), pt({1, 1})})});
    CHECK(face_volume(y, CoordinateSubset::empty(2)) == 0);
  }
  SUBCASE("projections") {
    const auto f = fixtures::family_y2zw(8);
    CHECK(project_vertices(Simplex(f.delta), CoordinateSubset(4, {1, 2, 3})) == std::vector<Point>{pt({0, 0, 0, 0}), pt({1, 0, 0, 0})});
    const auto g = fixtures::family_w8(9);
    const Simplex p = project(Simplex(g.delta), CoordinateSubset(4, {3}));
    CHECK(p.vertices() == std::vector<Point>{pt({0, 0, 0, 0}), pt({0, 0, 2, 0}), pt({0, 1, 0, 0}), pt({2, 0, 0, 0})});
    const auto x = gamma_minus(supp2({{3, 0}, {0, 2}}));
    CHECK(project(x, CoordinateSubset::empty(2)).simplices() == x.simplices());
  }
}

TEST_CASE("quasi-convenience") {
  CHECK(is_quasi_convenient(fixtures::simplex_y(3, 2)).ok);
  CHECK(is_quasi_convenient(gamma_minus(supp2({{3, 0}, {1, 1}, {0, 2}}))).ok);
  const auto bad = NewtonRegion::from_simplices(2, {Simplex({pt({0, 0}), pt({1, 1})})});
  const auto q = is_quasi_convenient(bad);
  CHECK_FALSE(q.ok);
  CHECK_FALSE(q.reason.empty());
}

TEST_CASE("explicit regions with overlapping simplices are rejected") {
  const auto x = NewtonRegion::from_simplices(
      2, {Simplex({pt({0, 0}), pt({2, 0}), pt({0, 2})}), Simplex({pt({0, 0}), pt({1, 0}), pt({1, 1})})});
  CHECK_THROWS_AS(validate_region(x), DomainError);
}

TEST_CASE("polytope helpers") {
  const std::vector<Point> square{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  CHECK(affine_dim(square) == 2);
  CHECK(polytope_facets(square, {0, 1, 2, 3}).size() == 4);
  PullingTriangulator tri(square, {0, 1, 2, 3});
  CHECK(tri.triangulate({0, 1, 2, 3}).size() == 2);
  const Simplex a({pt({0, 0}), pt({2, 0}), pt({0, 2})});
  const Simplex b({pt({1, 0}), pt({3, 0}), pt({1, 2})});
  const Simplex c({pt({2, 0}), pt({4, 0}), pt({2, 2})});
  CHECK(intersection_normalized_volume(a, b) == 1);
  CHECK(interiors_overlap(a, b));
  CHECK_FALSE(interiors_overlap(a, c));
}

TEST_CASE("restriction commutes with gamma_minus on random supports") {
  fixtures::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto s = fixtures::convenient_support(rng, n, 6, 3);
    const auto x = gamma_minus(s);
    for (const auto& i : all_subsets(n)) {
      if (i.size() == 0 || i.size() == n) continue;
      const auto rs = restrict(s, i);
      REQUIRE(rs);
      const auto direct = gamma_minus(*rs);
      CHECK(restrict(x, i).simplices() == direct.simplices());
      // The face volume seen in R^n equals the full volume of the rebuilt region.
      CHECK(face_volume(x, i) == total_normalized_volume(direct));
    }
  }
}

TEST_CASE("gamma_minus simplices are interior-disjoint with integral normalized volumes") {
  fixtures::Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto x = gamma_minus(fixtures::convenient_support(rng, n, 6, 4));
    const auto& ss = x.simplices();
    for (std::size_t i = 0; i < ss.size(); ++i) {
      CHECK(ss[i].contains_origin());
      for (std::size_t j = i + 1; j < ss.size(); ++j) CHECK_FALSE(interiors_overlap(ss[i], ss[j]));
    }
    for (const auto& i : all_subsets(n)) CHECK(is_integer(face_volume(x, i)));
  }
}

TEST_CASE("adding monomials only lowers the diagram") {
  fixtures::Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [small, large] = fixtures::nested_supports(rng, 2 + trial % 3, 6);
    const auto d = newton_diagram(small);
    // Every vertex of the larger support's diagram is on or below some facet of the smaller one.
    for (const auto& v : newton_diagram(large).vertices) {
      bool below_some = false;
      for (const auto& f : d.facets) {
        Rational s = 0;
        for (std::size_t i = 0; i < v.dim(); ++i) s += Rational(f.inner_normal[i]) * v[i];
        if (s <= Rational(f.offset)) below_some = true;
      }
      CHECK(below_some);
    }
    CHECK(total_normalized_volume(gamma_minus(large)) <= total_normalized_volume(gamma_minus(small)));
  }
}
