#include "newton_mu/higher.hpp"
#include "newton_mu/combinatorics.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"

#include <algorithm>

namespace newton_mu {

DegreeTuple::DegreeTuple(std::vector<std::int64_t> d) : d_(std::move(d)) {
  if (d_.empty()) throw UsageError("degree tuple is empty");
  for (auto x : d_)
    if (x < 1) throw UsageError("degree " + std::to_string(x) + " is below 1");
}

DegreeTuple DegreeTuple::prefix(std::size_t k) const {
  return DegreeTuple(std::vector<std::int64_t>(d_.begin(), d_.begin() + static_cast<std::ptrdiff_t>(k)));
}

RNewtonReport r_newton_number(const NewtonRegion& x, const DegreeTuple& dt) {
  const std::size_t n = x.dim(), r = dt.r();
  if (r > n) throw UsageError("r = " + std::to_string(r) + " exceeds the dimension " + std::to_string(n));
  validate_region(x);
  RNewtonReport rep;
  rep.n = n;
  rep.d = dt.values();
  for (const auto& i : all_subsets(n)) {
    if (i.size() < r) continue;
    RNewtonTerm t;
    t.subset = i;
    t.factorial_volume = face_volume(x, i);
    t.weight = f_coeff(static_cast<int>(i.size()), dt.values());
    t.sign = ((n - i.size()) % 2 == 0) ? 1 : -1;
    t.value = t.sign * Rational(t.weight) * t.factorial_volume;
    rep.total += t.value;
    rep.terms.push_back(std::move(t));
  }
  rep.epsilon = x.has_origin() ? 1 : 0;
  rep.epsilon_term = rep.epsilon * (((n - r + 1) % 2 == 0) ? 1 : -1);
  rep.total += rep.epsilon_term;
  return rep;
}

namespace {

std::vector<std::int64_t> slice(const std::vector<std::int64_t>& d, std::size_t from, std::size_t to) {
  // 1-based inclusive range d_from..d_to
  return {d.begin() + static_cast<std::ptrdiff_t>(from - 1), d.begin() + static_cast<std::ptrdiff_t>(to)};
}

}  // namespace

RFactored r_newton_factored(const std::vector<Simplex>& piece, const DegreeTuple& dt) {
  if (piece.empty()) throw DomainError(DomainError::Kind::Hypothesis, "empty piece");
  const std::size_t n = piece.front().ambient_dim(), r = dt.r();
  if (r <= 1 || r >= n)
    throw DomainError(DomainError::Kind::Hypothesis, "the factorization identities need 1 < r < n (r = " +
                                                         std::to_string(r) + ", n = " + std::to_string(n) + ")");
  const auto fac = newton_number_factored(piece);
  if (fac.fallback) throw DomainError(DomainError::Kind::Hypothesis, "the projection of the piece degenerates");

  RFactored out;
  out.minimal = fac.minimal;
  const std::size_t p = fac.minimal.size();
  const std::size_t m = n - p;
  out.m = m;

  const auto region = NewtonRegion::from_simplices(n, piece);
  const auto rep = r_newton_number(region, dt);
  out.direct = rep.total;
  for (const auto& t : rep.terms)
    if (fac.minimal.is_subset_of(t.subset)) out.restricted_sum += t.value;

  const auto projected = drop_coordinates(region, fac.minimal);
  const auto& d = dt.values();
  std::vector<Rational> nu(std::min(r, m) + 1);
  for (std::size_t k = 1; k <= std::min(r, m); ++k) nu[k] = r_newton_number(projected, dt.prefix(k)).total;

  auto term = [&](std::size_t k) -> Rational {
    Integer coef = 1;
    for (std::size_t i = k + 1; i <= r; ++i) coef *= static_cast<long>(d[i - 1]);
    coef *= g_coeff(static_cast<int>(p + 1), slice(d, k, r));
    return Rational(coef) * nu[k];
  };
  const std::size_t low = r > p ? std::max<std::size_t>(1, r - p) : 1;
  auto sum_from = [&](std::size_t top) {
    Rational s = 0;
    for (std::size_t k = top; k >= low && k >= 1; --k) s += term(k);
    return s;
  };

  const std::string first = r <= p ? "r<=|I|" : "r>|I|";
  if (r <= m) out.branches.push_back({first + ", r<=m", fac.base_volume * sum_from(r), false});
  if (r >= m) {
    Rational tail = 0;
    if (r > m) tail = Rational(f_coeff(static_cast<int>(p), slice(d, m + 1, r)));
    out.branches.push_back({first + ", r>m", fac.base_volume * (sum_from(m) + tail), false});
  }
  out.consistent = out.restricted_sum == out.direct;
  for (auto& b : out.branches) {
    b.matches = b.value == out.direct;
    out.consistent = out.consistent && b.matches;
  }
  return out;
}

Rational r_closed_form(const std::vector<Rational>& a, const DegreeTuple& dt) {
  const std::size_t n = a.size(), r = dt.r();
  if (r > n) throw UsageError("r = " + std::to_string(r) + " exceeds the dimension " + std::to_string(n));
  Rational total = 0;
  for (std::size_t s = r; s <= n; ++s) {
    const int sign = ((n - s) % 2 == 0) ? 1 : -1;
    total += sign * Rational(f_coeff(static_cast<int>(s), dt.values())) * elementary_symmetric(s, a);
  }
  total += ((n - r + 1) % 2 == 0) ? 1 : -1;
  return total;
}

BoundCertificate r_bound(const NewtonRegion& x, const DegreeTuple& dt, const std::vector<Rational>& a) {
  if (dt.r() > x.dim()) throw UsageError("r = " + std::to_string(dt.r()) + " exceeds the dimension");
  if (!contains_simplex(x, a))
    throw DomainError(DomainError::Kind::Containment, "the simplex Y_a is not contained in the region");
  BoundCertificate c;
  c.a = a;
  c.d = dt.values();
  c.bound = r_closed_form(a, dt);
  c.nu_value = r_newton_number(x, dt).total;
  c.chain.push_back({"nu^r(X)", ">=", "closed_form", "computed", c.nu_value >= c.bound});
  c.chain.push_back({"closed_form", ">=", "0", "computed", c.bound >= 0});
  settle(c);
  return c;
}

BoundCertificate sciv_milnor_bound(const SupportSet& s, const DegreeTuple& dt, const std::vector<Rational>& a) {
  if (dt.r() > s.dim()) throw UsageError("r = " + std::to_string(dt.r()) + " exceeds the dimension");
  if (dt.r() == 1 && dt.values().front() == 1) {
    auto c = milnor_lower_bound(s, a);
    c.d = dt.values();
    return c;
  }
  if (a.size() != s.dim()) throw UsageError("expected " + std::to_string(s.dim()) + " intercepts");
  if (!simplex_below_diagram(s, a))
    throw DomainError(DomainError::Kind::Containment, "the hyperplane through the intercepts is not below the Newton boundary");
  BoundCertificate c;
  c.a = a;
  c.d = dt.values();
  c.bound = r_closed_form(a, dt);
  auto value = [&](const SupportSet& g) { return r_newton_number(gamma_minus(g), dt).total; };
  if (is_convenient(s).convenient) {
    c.nu_value = value(s);
  } else {
    auto st = stabilized_modification(s, value);
    c.modification_m = st.m;
    c.nu_value = st.value;
  }
  c.chain.push_back({"mu", ">=", "nu^r(g)", kOkaStatus, std::nullopt});
  c.chain.push_back({"nu^r(g)", ">=", "closed_form", "computed", c.nu_value >= c.bound});
  c.chain.push_back({"closed_form", ">=", "0", "computed", c.bound >= 0});
  settle(c);
  return c;
}

}  // namespace newton_mu
