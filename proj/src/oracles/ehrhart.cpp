#include "newton_mu/errors.hpp"
#include "newton_mu/oracles.hpp"

#include <algorithm>
#include <limits>

namespace newton_mu::oracles {

namespace {

using i128 = __int128;
using IntMatrix = std::vector<std::vector<i128>>;

// Bareiss fraction-free elimination; exact for the small entries used here.
i128 det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct Inequality {
  std::vector<i128> w;
  i128 c;  // w . x >= k * c on the k-th dilate
};

std::vector<Inequality> facets(const std::vector<std::vector<std::int64_t>>& v) {
  const std::size_t n = v.size() - 1;
  std::vector<Inequality> out;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) idx.push_back(i);
    Inequality f{std::vector<i128>(n), 0};
    for (std::size_t col = 0; col < n; ++col) {
      IntMatrix minor;
      for (std::size_t r = 1; r < idx.size(); ++r) {
        std::vector<i128> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != col) row.push_back(v[idx[r]][c] - v[idx[0]][c]);
        minor.push_back(std::move(row));
      }
      f.w[col] = ((col % 2) ? -1 : 1) * det(std::move(minor));
    }
    for (std::size_t c = 0; c < n; ++c) f.c += f.w[c] * v[idx[0]][c];
    i128 opp = 0;
    for (std::size_t c = 0; c < n; ++c) opp += f.w[c] * v[skip][c];
    if (opp < f.c) {
      for (auto& x : f.w) x = -x;
      f.c = -f.c;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> integral_vertices(const Simplex& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : s.vertices()) {
    std::vector<std::int64_t> row;
    for (const auto& c : p.coords()) {
      if (c.get_den() != 1 || !c.get_num().fits_slong_p())
        throw DomainError(DomainError::Kind::Hypothesis, "lattice-point counting needs integral vertices");
      row.push_back(c.get_num().get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::int64_t lattice_points(const NewtonRegion& x, std::int64_t k) {
  const std::size_t n = x.dim();
  std::vector<std::vector<Inequality>> cells;
  std::vector<std::int64_t> hi(n, 0);
  for (const auto& s : x.simplices()) {
    if (s.dim() != n) continue;
    const auto v = integral_vertices(s);
    for (const auto& p : v)
      for (std::size_t c = 0; c < n; ++c) hi[c] = std::max(hi[c], p[c] * k);
    cells.push_back(facets(v));
  }
  if (cells.empty()) return 0;

  std::int64_t count = 0;
  std::vector<std::int64_t> p(n, 0);
  for (;;) {
    const bool inside = std::any_of(cells.begin(), cells.end(), [&](const std::vector<Inequality>& cell) {
      for (const auto& f : cell) {
        i128 s = 0;
        for (std::size_t c = 0; c < n; ++c) s += f.w[c] * p[c];
        if (s < f.c * k) return false;
      }
      return true;
    });
    if (inside) ++count;
    std::size_t c = 0;
    while (c < n && p[c] == hi[c]) p[c++] = 0;
    if (c == n) break;
    ++p[c];
  }
  return count;
}

Rational ehrhart_volume(const NewtonRegion& x) {
  const std::size_t n = x.dim();
  std::vector<Integer> counts;
  for (std::size_t k = 1; k <= n + 1; ++k) counts.emplace_back(static_cast<long>(lattice_points(x, static_cast<std::int64_t>(k))));
  // n-th forward difference of a degree-n polynomial is n! times its leading coefficient.
  Integer diff = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, j);
    diff += (((n - j) % 2) ? -1 : 1) * b * counts[j];
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  Rational v(diff, fact);
  v.canonicalize();
  return v;
}

}  // namespace newton_mu::oracles
