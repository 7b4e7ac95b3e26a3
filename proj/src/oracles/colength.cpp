#include "newton_mu/errors.hpp"
#include "newton_mu/oracles.hpp"

#include <map>

namespace newton_mu::oracles {

namespace {

using Row = std::map<std::size_t, Rational>;

// Incremental row echelon form keyed by leading column.
class Echelon {
 public:
  void insert(Row row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        pivots_.emplace(lead->first, std::move(row));
        return;
      }
      const Rational f = lead->second / it->second.begin()->second;
      for (const auto& [col, val] : it->second) {
        Rational& x = row[col];
        x -= f * val;
        if (x == 0) row.erase(col);
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

void monomials_below(std::size_t n, std::size_t degree, Exponent& cur, std::size_t var, std::vector<Exponent>& out) {
  if (var == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t e = 0; e < degree; ++e) {
    cur[var] = static_cast<std::int64_t>(e);
    std::size_t used = 0;
    for (std::size_t j = 0; j <= var; ++j) used += static_cast<std::size_t>(cur[j]);
    if (used >= degree) break;
    monomials_below(n, degree, cur, var + 1, out);
  }
  cur[var] = 0;
}

std::int64_t total_degree(const Exponent& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

Integer milnor_colength(const Polynomial& p) {
  const std::size_t n = p.support.dim();
  if (n > 3) throw UsageError("the colength oracle handles at most 3 variables");
  for (const auto& e : p.support.points())
    if (total_degree(e) > 8) throw UsageError("the colength oracle handles total degree at most 8");

  std::vector<std::map<Exponent, Rational>> partials(n);
  for (const auto& [e, c] : p.coefficients)
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) {
        Exponent d = e;
        --d[i];
        partials[i][d] += c * static_cast<long>(e[i]);
      }

  Integer previous = -1;
  for (std::size_t big_n = 1; big_n <= 24; ++big_n) {
    std::vector<Exponent> basis;
    Exponent cur(n, 0);
    monomials_below(n, big_n, cur, 0, basis);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    Echelon ech;
    for (const auto& alpha : basis)
      for (const auto& d : partials) {
        Row row;
        for (const auto& [e, c] : d) {
          if (c == 0) continue;
          Exponent prod = e;
          for (std::size_t j = 0; j < n; ++j) prod[j] += alpha[j];
          auto it = index.find(prod);
          if (it != index.end()) row[it->second] += c;
        }
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        ech.insert(std::move(row));
      }
    const Integer dim = static_cast<long>(basis.size() - ech.rank());
    if (dim == previous) return dim;
    previous = dim;
  }
  throw DomainError(DomainError::Kind::NotStabilized,
                    "the local colength did not stabilize by degree 24 (possibly non-isolated)");
}

void confirm_with_colength(BoundCertificate& c, const Polynomial& f) {
  const Integer mu = milnor_colength(f);
  c.mu_oracle = mu;
  for (auto& step : c.chain) {
    if (step.lhs != "mu") continue;
    const bool holds = Rational(mu) >= c.nu_value;
    step.holds = holds;
    step.status = holds ? "verified:colength" : "refuted:colength";
  }
  settle(c);
}

}  // namespace newton_mu::oracles
