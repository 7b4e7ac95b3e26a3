#include "newton_mu/diagram.hpp"
#include "newton_mu/oracles.hpp"

#include <algorithm>
#include <random>

namespace newton_mu::oracles {

Rational shuffled_newton_number(const SupportSet& s, std::uint64_t seed) {
  auto order = diagram_vertices(s);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return newton_number(gamma_minus(s, order)).total;
}

}  // namespace newton_mu::oracles
