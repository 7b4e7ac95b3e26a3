#pragma once

// Seeded input generators and fixed inputs shared by the unit and acceptance tests.

#include "newton_mu/diagram.hpp"
#include "newton_mu/family.hpp"
#include "newton_mu/polynomial.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace fixtures {

using namespace newton_mu;
using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Pure powers on every axis plus a few random interior monomials.
inline SupportSet convenient_support(Rng& rng, std::size_t n, std::int64_t max_exp, std::size_t extra) {
  std::vector<Exponent> pts;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = uniform(rng, 1, max_exp);
    pts.push_back(e);
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Exponent e(n, 0);
    std::int64_t total = 0;
    for (auto& c : e) total += (c = uniform(rng, 0, max_exp - 1));
    if (total == 0) e[uniform(rng, 0, static_cast<std::int64_t>(n) - 1)] = 1;
    pts.push_back(e);
  }
  return SupportSet::with_default_names(n, std::move(pts));
}

/// (small, large) with small ⊆ large, so gamma_minus(large) ⊆ gamma_minus(small).
inline std::pair<SupportSet, SupportSet> nested_supports(Rng& rng, std::size_t n, std::int64_t max_exp) {
  const SupportSet small = convenient_support(rng, n, max_exp, static_cast<std::size_t>(uniform(rng, 0, 2)));
  auto pts = small.points();
  const auto more = uniform(rng, 1, 3);
  for (std::int64_t k = 0; k < more; ++k) {
    Exponent e(n, 0);
    std::int64_t total = 0;
    for (auto& c : e) total += (c = uniform(rng, 0, max_exp - 1));
    if (total == 0) e[0] = 1;
    pts.push_back(e);
  }
  return {small, small.with_points(std::move(pts))};
}

/// An n-simplex avoiding O with integer coordinates in [0, max]; sparse so
/// that small full-supporting subspaces occur often.
inline Simplex simplex_avoiding_origin(Rng& rng, std::size_t n, std::int64_t max) {
  for (;;) {
    std::vector<Point> v;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::int64_t> c(n, 0);
      for (auto& x : c)
        if (uniform(rng, 0, 2) != 0) x = uniform(rng, 0, max);
      if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) c[uniform(rng, 0, static_cast<std::int64_t>(n) - 1)] = uniform(rng, 1, max);
      v.push_back(Point::from_integers(c));
    }
    if (affinely_independent(v)) return Simplex(v);
  }
}

/// |O, a_1 e_1, ..., a_n e_n| as an explicit region.
inline NewtonRegion simplex_y(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  std::vector<Point> v{Point::origin(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(n);
    c[i] = a[i];
    v.emplace_back(std::move(c));
  }
  return NewtonRegion::from_simplices(n, {Simplex(v)});
}

inline NewtonRegion simplex_y(std::size_t n, const Rational& a) { return simplex_y(std::vector<Rational>(n, a)); }

inline Point pt(std::initializer_list<std::int64_t> c) {
  std::vector<std::int64_t> v(c);
  return Point::from_integers(v);
}

inline SupportSet poly_support(const std::string& text) { return parse_polynomial(text).support; }

/// The three four-variable families with a removable vertex and their Δ.
struct FamilyFixture {
  std::string label;
  std::string f1;
  Exponent removed;
  std::vector<Point> delta;
  std::string zero_case;
  Point witness;
  CoordinateSubset minimal;
};

inline std::string w_power(int m) { return "w^" + std::to_string(m); }

inline FamilyFixture family_y2zw(int m) {
  return {"x3+y3+z5+xw5+ty2zw+w" + std::to_string(m),
          "x^3+y^3+z^5+x*w^5+t*y^2*z*w+" + w_power(m),
          {0, 2, 1, 1},
          {pt({0, 0, 0, m}), pt({0, 0, 5, 0}), pt({0, 2, 1, 1}), pt({0, 3, 0, 0}), pt({1, 0, 0, 5})},
          "i",
          pt({1, 0, 0, 5}),
          CoordinateSubset(4, {1, 2, 3})};
}

inline FamilyFixture family_zw6(int m) {
  return {"x3+y3+z5+xw5+yw5+tzw6+w" + std::to_string(m),
          "x^3+y^3+z^5+x*w^5+y*w^5+t*z*w^6+" + w_power(m),
          {0, 0, 1, 6},
          {pt({0, 0, 0, m}), pt({0, 0, 1, 6}), pt({0, 0, 5, 0}), pt({0, 1, 0, 5}), pt({1, 0, 0, 5})},
          "ii",
          pt({1, 0, 0, 5}),
          CoordinateSubset(4, {2, 3})};
}

inline FamilyFixture family_w8(int m) {
  return {"x2+y5+z6+yw6+z2w5+tw8+w" + std::to_string(m),
          "x^2+y^5+z^6+y*w^6+z^2*w^5+t*w^8+" + w_power(m),
          {0, 0, 0, 8},
          {pt({0, 0, 0, 8}), pt({0, 0, 0, m}), pt({0, 0, 2, 5}), pt({0, 1, 0, 6}), pt({2, 0, 0, 0})},
          "iii",
          pt({0, 1, 0, 6}),
          CoordinateSubset(4, {3})};
}

/// Every family fixture over the exponents where the removed vertex stays a vertex.
inline std::vector<FamilyFixture> all_families() {
  std::vector<FamilyFixture> out;
  for (int m = 8; m <= 12; ++m) out.push_back(family_y2zw(m));
  for (int m = 8; m <= 12; ++m) out.push_back(family_zw6(m));
  for (int m = 9; m <= 12; ++m) out.push_back(family_w8(m));
  return out;
}

/// A random valid vertex removal in four variables: a convenient support and
/// one non-axis vertex whose removal keeps the support convenient.
inline std::optional<FamilyStep> random_family_step(Rng& rng) {
  // Large axis powers and small mixed monomials, so mixed vertices are common.
  std::vector<Exponent> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    Exponent e(4, 0);
    e[i] = uniform(rng, 4, 8);
    pts.push_back(e);
  }
  const auto extra = uniform(rng, 1, 3);
  for (std::int64_t k = 0; k < extra; ++k) {
    Exponent e(4, 0);
    std::int64_t total = 0;
    for (auto& c : e) total += (c = uniform(rng, 0, 2));
    if (total >= 2) pts.push_back(e);
  }
  const SupportSet s = SupportSet::with_default_names(4, std::move(pts));
  std::vector<Exponent> candidates;
  for (const auto& v : diagram_vertices(s)) {
    const auto nonzero = std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (nonzero > 1) candidates.push_back(v);
  }
  if (candidates.empty()) return std::nullopt;
  const auto a = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1))];
  return FamilyStep(s, a);
}

}  // namespace fixtures
