#pragma once

#include "newton_mu/rational.hpp"

#include <cstdint>
#include <span>

namespace newton_mu {

/// s-th elementary symmetric function of `a`; sigma_0 = 1.
/// Throws std::invalid_argument when s > a.size().
Rational elementary_symmetric(std::size_t s, std::span<const Rational> a);

/// F^l_k(d) = sum over weak compositions i_1+...+i_k = l-k of prod d_j^(i_j+1),
/// with k = d.size(). Throws std::invalid_argument when k == 0, l < k, or some d_j < 1.
/// Results are memoized on (l, d).
Integer f_coeff(int l, std::span<const std::int64_t> d);

/// G^l_k(d) = sum over weak compositions i_1+...+i_k = l-k of prod d_j^i_j.
Integer g_coeff(int l, std::span<const std::int64_t> d);

}  // namespace newton_mu
