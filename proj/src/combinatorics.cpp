#include "newton_mu/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace newton_mu {

Rational elementary_symmetric(std::size_t s, std::span<const Rational> a) {
  if (s > a.size()) throw std::invalid_argument("elementary_symmetric: index out of range");
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<Rational> e(s + 1);
  e[0] = 1;
  for (const auto& x : a)
    for (std::size_t j = s; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[s];
}

namespace {

using Key = std::pair<int, std::vector<std::int64_t>>;

// Enumerates weak compositions of `total` into d.size() parts, accumulating
// prod d_j^(i_j + shift).
Integer composition_sum(int total, std::span<const std::int64_t> d, int shift) {
  Integer sum = 0;
  std::vector<int> parts(d.size(), 0);
  auto term = [&] {
    Integer t = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d[j]),
                    static_cast<unsigned long>(parts[j] + shift));
      t *= p;
    }
    return t;
  };
  // Recursive enumeration over the first k-1 parts; the last absorbs the rest.
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == d.size()) {
      parts[j] = remaining;
      sum += term();
      return;
    }
    for (int i = 0; i <= remaining; ++i) {
      parts[j] = i;
      self(self, j + 1, remaining - i);
    }
  };
  rec(rec, 0, total);
  return sum;
}

void check_args(int l, std::span<const std::int64_t> d) {
  if (d.empty()) throw std::invalid_argument("F/G coefficient needs k >= 1");
  if (l < static_cast<int>(d.size())) throw std::invalid_argument("F/G coefficient needs l >= k");
  for (auto x : d)
    if (x < 1) throw std::invalid_argument("degrees must be positive");
}

Integer memoized(std::map<Key, Integer>& cache, std::mutex& mu, int l,
                 std::span<const std::int64_t> d, int shift) {
  check_args(l, d);
  Key key{l, std::vector<std::int64_t>(d.begin(), d.end())};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Integer value = composition_sum(l - static_cast<int>(d.size()), d, shift);
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace

Integer f_coeff(int l, std::span<const std::int64_t> d) {
  static std::map<Key, Integer> cache;
  static std::mutex mu;
  return memoized(cache, mu, l, d, 1);
}

Integer g_coeff(int l, std::span<const std::int64_t> d) {
  static std::map<Key, Integer> cache;
  static std::mutex mu;
  return memoized(cache, mu, l, d, 0);
}

}  // namespace newton_mu
