#include "support/fixtures.hpp"

#include "newton_mu/combinatorics.hpp"
#include "newton_mu/higher.hpp"

#include <doctest.h>

using namespace newton_mu;

namespace {

Rational nu_r(const NewtonRegion& x, std::vector<std::int64_t> d) { return r_newton_number(x, DegreeTuple(std::move(d))).total; }

std::vector<std::vector<std::int64_t>> tuples(std::size_t r, std::int64_t max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> d(r, 1);
  for (;;) {
    out.push_back(d);
    std::size_t j = 0;
    while (j < r && d[j] == max) d[j++] = 1;
    if (j == r) return out;
    ++d[j];
  }
}

}  // namespace

TEST_CASE("degree tuples") {
  CHECK_THROWS_AS(DegreeTuple({}), UsageError);
  CHECK_THROWS_AS(DegreeTuple({1, 0}), UsageError);
  const DegreeTuple d({2, 3, 1});
  CHECK(d.r() == 3);
  CHECK(d.prefix(2).values() == std::vector<std::int64_t>{2, 3});
  CHECK(DegreeTuple::ones(2).values() == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("r-th newton numbers of a simplex") {
  const auto y = fixtures::simplex_y({2, 3});
  CHECK(nu_r(y, {1, 1}) == 5);
  CHECK(nu_r(y, {2, 1}) == 11);
  const auto rep = r_newton_number(y, DegreeTuple({1, 1}));
  CHECK(rep.epsilon == 1);
  CHECK(rep.epsilon_term == -1);
  CHECK(rep.terms.size() == 1);
  CHECK_THROWS_AS(r_newton_number(y, DegreeTuple({1, 1, 1})), UsageError);
}

TEST_CASE("first newton number with unit degree is the newton number") {
  fixtures::Rng rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = gamma_minus(fixtures::convenient_support(rng, 1 + trial % 4, 6, 3));
    CHECK(nu_r(x, {1}) == newton_number(x).total);
  }
}

TEST_CASE("closed form on simplices") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= n; ++r)
      for (const auto& d : tuples(r, 2)) {
        const std::vector<Rational> a = [&] {
          std::vector<Rational> v;
          for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(2 + i));
          return v;
        }();
        CHECK(nu_r(fixtures::simplex_y(a), d) == r_closed_form(a, DegreeTuple(d)));
      }
  // Unit degrees turn the weights into binomials.
  const std::vector<Rational> a{2, 3, 4};
  Rational expect = 1;  // (-1)^(n-r+1) with n = 3, r = 2
  for (unsigned s = 2; s <= 3; ++s)
    expect += ((3 - s) % 2 ? -1 : 1) * Rational(binomial(s - 1, 1)) * elementary_symmetric(s, a);
  CHECK(r_closed_form(a, DegreeTuple::ones(2)) == expect);
}

TEST_CASE("factorization branches on the four-simplex") {
  const auto delta = Simplex(fixtures::family_y2zw(8).delta);
  const auto f = r_newton_factored({delta}, DegreeTuple({1, 1}));
  CHECK(f.minimal == CoordinateSubset(4, {1, 2, 3}));
  CHECK(f.m == 1);
  CHECK(f.direct == f.restricted_sum);
  CHECK(f.consistent);
  REQUIRE_FALSE(f.branches.empty());
  for (const auto& b : f.branches) {
    CHECK(b.matches);
    CHECK(b.label.find("r<=|I|") != std::string::npos);
    CHECK(b.label.find("r>m") != std::string::npos);
  }
  CHECK_THROWS_AS(r_newton_factored({delta}, DegreeTuple({1})), DomainError);
  CHECK_THROWS_AS(r_newton_factored({delta}, DegreeTuple({1, 1, 1, 1})), DomainError);
}

TEST_CASE("factorization branches on random simplices") {
  fixtures::Rng rng(808);
  int checked = 0;
  int both_forms = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Simplex s = fixtures::simplex_avoiding_origin(rng, 4, 6);
    for (std::size_t r = 2; r <= 3; ++r)
      for (const auto& d : tuples(r, 2)) {
        RFactored f;
        try {
          f = r_newton_factored({s}, DegreeTuple(d));
        } catch (const DomainError&) {
          continue;
        }
        ++checked;
        CHECK(f.direct == f.restricted_sum);
        for (const auto& b : f.branches) CHECK_MESSAGE(b.matches, b.label);
        CHECK(f.consistent);
        if (f.m == r) {
          CHECK(f.branches.size() == 2);
          ++both_forms;
        }
      }
  }
  CHECK(checked > 300);
  CHECK(both_forms > 0);
}

TEST_CASE("r-th bounds") {
  const auto y = fixtures::simplex_y({2, 3});
  const auto c = r_bound(y, DegreeTuple({1, 1}), {2, 3});
  CHECK(c.bound == 5);
  CHECK(c.nu_value == 5);
  CHECK(c.verdict);
  const auto bigger = gamma_minus(fixtures::poly_support("x^3+x^2*y^2+y^4"));
  const auto c2 = r_bound(bigger, DegreeTuple({1, 1}), {2, 3});
  CHECK(c2.nu_value >= 5);
  CHECK(c2.verdict);
  CHECK_THROWS_AS(r_bound(y, DegreeTuple({1, 1}), {3, 3}), DomainError);
}

TEST_CASE("similar complete intersection bounds") {
  SUBCASE("plane curve pattern") {
    const auto c = sciv_milnor_bound(fixtures::poly_support("x^2+y^3"), DegreeTuple({1, 1}), {2, 3});
    CHECK(c.bound == 5);
    CHECK(c.nu_value >= 5);
    CHECK(c.verdict);
    REQUIRE_FALSE(c.chain.empty());
    CHECK(c.chain[0].status == kOkaStatus);
  }
  SUBCASE("unit intercepts stay nonnegative") {
    const auto c = sciv_milnor_bound(fixtures::poly_support("x^3+y^4+z^2"), DegreeTuple({2, 1}), {1, 1, 1});
    CHECK(c.bound >= 0);
    CHECK(c.verdict);
  }
  SUBCASE("one equation falls back to the hypersurface chain") {
    const auto s = fixtures::poly_support("x^3+y^2");
    const auto c = sciv_milnor_bound(s, DegreeTuple({1}), {3, 2});
    const auto h = milnor_lower_bound(s, {3, 2});
    CHECK(c.nu_value == h.nu_value);
    CHECK(c.bound == h.bound);
    CHECK(c.chain[0].status == kKouchnirenkoStatus);
  }
}

TEST_CASE("nonnegativity and monotonicity of r-th newton numbers") {
  fixtures::Rng rng(909);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto [small, large] = fixtures::nested_supports(rng, n, 5);
    const auto x = gamma_minus(small);
    const auto y = gamma_minus(large);
    for (std::size_t r = 1; r <= n; ++r) {
      const auto d = tuples(r, 3)[static_cast<std::size_t>(trial) % tuples(r, 3).size()];
      const Rational vx = nu_r(x, d);
      const Rational vy = nu_r(y, d);
      CHECK(vx >= vy);
      CHECK(vy >= 0);
    }
  }
}
