#include "newton_mu/combinatorics.hpp"
#include "newton_mu/errors.hpp"
#include "newton_mu/geometry.hpp"
#include "newton_mu/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace newton_mu;

namespace {

std::vector<std::int64_t> ds(std::initializer_list<std::int64_t> d) { return d; }

// Weak compositions of `total` into d.size() parts, enumerated directly.
Integer enumerate_sum(int total, const std::vector<std::int64_t>& d, int extra_power) {
  Integer sum = 0;
  std::vector<int> i(d.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == d.size()) {
      i[k] = left;
      Integer term = 1;
      for (std::size_t j = 0; j < d.size(); ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d[j]), static_cast<unsigned long>(i[j] + extra_power));
        term *= p;
      }
      sum += term;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      i[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, total);
  return sum;
}

}  // namespace

TEST_CASE("rationals stay canonical and print as p/q") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational(" 8/3 ") == Rational(8, 3));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(is_integer(make_rational(6, 3)));
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("determinants of small fixed matrices") {
  CHECK(determinant(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  CHECK(determinant(Matrix{{3, 0}, {0, 2}}) == 6);
  CHECK(determinant(Matrix{{1, 1}, {0, 2}}) == 2);
  CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(Matrix{{Rational(1, 2), 1}, {1, 2}}) == 0);
  CHECK(determinant(Matrix()) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is alternating and multilinear on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    Matrix m(n, n), row_b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = make_rational(entry(rng), 1 + (entry(rng) + 6) % 3);
        row_b(r, c) = m(r, c);
      }
    const Rational d = determinant(m);

    Matrix swapped = m;
    swapped.swap_rows(0, n - 1);
    CHECK(determinant(swapped) == -d);

    // Replace row 0 by u + 3v and compare with det(u) + 3 det(v).
    for (std::size_t c = 0; c < n; ++c) row_b(0, c) = entry(rng);
    Matrix mixed = m;
    for (std::size_t c = 0; c < n; ++c) mixed(0, c) = m(0, c) + 3 * row_b(0, c);
    CHECK(determinant(mixed) == d + 3 * determinant(row_b));
  }
}

TEST_CASE("solve and rank") {
  const auto x = solve(Matrix{{2, 1}, {1, 3}}, {Rational(3), Rational(5)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(solve(Matrix{{1, 2}, {2, 4}}, {Rational(1), Rational(2)}));
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
}

TEST_CASE("simplex volumes") {
  SUBCASE("right triangle") {
    const std::vector<Point> v{Point{0, 0}, Point{3, 0}, Point{0, 2}};
    const auto r = simplex_volume(v);
    CHECK(r.volume == 3);
    CHECK(r.normalized == 6);
    CHECK_FALSE(r.degenerate);
  }
  SUBCASE("unit tetrahedron") {
    const std::vector<Point> v{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
    CHECK(simplex_volume(v).volume == Rational(1, 6));
  }
  SUBCASE("collinear points are flagged") {
    const std::vector<Point> v{Point{0, 0}, Point{2, 0}, Point{4, 0}};
    const auto r = simplex_volume(v);
    CHECK(r.volume == 0);
    CHECK(r.degenerate);
  }
  SUBCASE("a face inside a coordinate plane") {
    const std::vector<Point> v{Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 0, 5}};
    CHECK(simplex_volume(v).normalized == 20);
  }
  SUBCASE("vertex order does not matter") {
    std::mt19937_64 rng(5);
    std::vector<Point> v{Point{1, 0, 2}, Point{0, 3, 1}, Point{2, 2, 0}, Point{Rational(1, 2), 1, 4}};
    const Rational ref = simplex_volume(v).volume;
    for (int k = 0; k < 10; ++k) {
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(simplex_volume(v).volume == ref);
    }
  }
  CHECK_THROWS_AS(Simplex({Point{0, 0}, Point{1, 1}, Point{2, 2}}), DomainError);
}

TEST_CASE("coordinate subsets print 1-based and order by size then mask") {
  const CoordinateSubset a(4, {1, 2, 3});
  CHECK(to_string(a) == "{2,3,4}");
  CHECK(a.size() == 3);
  CHECK(a.complement() == CoordinateSubset(4, {0}));
  CHECK(CoordinateSubset(3, {2}) < CoordinateSubset(3, {0, 1}));
  CHECK(all_subsets(3).size() == 8);
  CHECK(a.holds(Point{0, 1, 2, 3}));
  CHECK_FALSE(a.holds(Point{1, 1, 2, 3}));
}

TEST_CASE("elementary symmetric functions") {
  const std::vector<Rational> a{2, 3};
  CHECK(elementary_symmetric(0, a) == 1);
  CHECK(elementary_symmetric(1, a) == 5);
  CHECK(elementary_symmetric(2, a) == 6);
  const std::vector<Rational> ones{1, 1, 1};
  CHECK(elementary_symmetric(3, ones) == 1);
  CHECK_THROWS_AS(elementary_symmetric(3, a), std::invalid_argument);
}

TEST_CASE("F and G coefficients on fixed values") {
  CHECK(f_coeff(2, ds({2, 1})) == 2);
  CHECK(f_coeff(3, ds({2})) == 8);
  CHECK(f_coeff(4, ds({1, 1})) == 3);
  CHECK(g_coeff(2, ds({5, 7})) == 1);
  CHECK(g_coeff(3, ds({5, 7})) == 12);
  CHECK(g_coeff(5, ds({3})) == 81);
  CHECK_THROWS_AS(f_coeff(1, ds({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(g_coeff(2, ds({0, 1})), std::invalid_argument);
}

TEST_CASE("F and G against enumeration, factorization and recurrence") {
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::int64_t> d(k, 1);
    for (;;) {
      tuples.push_back(d);
      std::size_t j = 0;
      while (j < k && d[j] == 4) d[j++] = 1;
      if (j == k) break;
      ++d[j];
    }
  }
  for (const auto& d : tuples) {
    const int k = static_cast<int>(d.size());
    Integer prod = 1;
    for (auto x : d) prod *= x;
    for (int l = k; l <= 10; ++l) {
      const Integer f = f_coeff(l, d);
      CHECK(f == enumerate_sum(l - k, d, 1));
      CHECK(g_coeff(l, d) == enumerate_sum(l - k, d, 0));
      CHECK(f == prod * g_coeff(l, d));
      if (l > k) {
        Integer rec = f_coeff(l - 1, d);
        if (k > 1) rec += f_coeff(l - 1, std::span(d).first(d.size() - 1));
        CHECK(f == d.back() * rec);
      }
    }
  }
}

TEST_CASE("F with unit degrees is a binomial coefficient") {
  for (int r = 1; r <= 6; ++r)
    for (int s = r; s <= 10; ++s) CHECK(f_coeff(s, std::vector<std::int64_t>(r, 1)) == binomial(s - 1, r - 1));
}
