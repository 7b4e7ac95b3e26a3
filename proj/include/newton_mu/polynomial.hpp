#pragma once

#include "newton_mu/support.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace newton_mu {

/// Support plus coefficients. Terms carrying a symbolic parameter (t, s,
/// gamma) keep the numeric part of their coefficient and are listed in
/// `symbolic`; such parameters only mark the coefficient as nonzero.
struct Polynomial {
  SupportSet support;
  std::map<Exponent, Rational> coefficients;
  std::vector<Exponent> symbolic;
};

/// Parses sums of products of numbers, variables with optional ^exponent and
/// parameters, e.g. "x^3+y^3+z^5+x*w^5+t*y^2*z*w+w^8". Without `variables`
/// the alphabet is x, y, z, w (dimension = last letter used) or z1..zN when
/// indexed names appear. Numerically cancelling terms leave the support.
/// Throws ParseError with a 0-based position.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables = {});

/// Coefficient-free text of a support, accepted back by parse_polynomial
/// with the support's variable names.
std::string to_text(const SupportSet& s);
std::string to_text(const Polynomial& p);

/// Coefficients 2, 3, 5, 7, ... assigned in support order.
Polynomial with_generic_coefficients(const SupportSet& s);

}  // namespace newton_mu
