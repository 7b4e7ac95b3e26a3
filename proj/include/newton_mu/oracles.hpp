#pragma once

// Independent ground-truth computations for tests and the --with-oracles CLI
// flag. They share no volume or triangulation code with the main pipeline.

#include "newton_mu/newton.hpp"
#include "newton_mu/polynomial.hpp"

#include <cstdint>

namespace newton_mu::oracles {

/// Leading coefficient of the Ehrhart polynomial of the union of the
/// full-dimensional simplices of x, from lattice-point counts of the dilates
/// k = 1..n+1. DomainError(Hypothesis) for non-integral vertices.
Rational ehrhart_volume(const NewtonRegion& x);

/// Number of lattice points of k * x (union of its full-dimensional simplices).
std::int64_t lattice_points(const NewtonRegion& x, std::int64_t k);

/// Newton number of Gamma_-(s) triangulated with a seeded random pulling order.
Rational shuffled_newton_number(const SupportSet& s, std::uint64_t seed);

/// dim C[x]/(J(f) + m^N) for N = 1, 2, ... until two consecutive values
/// agree; that value is the Milnor number. n <= 3 and total degree <= 8
/// (UsageError otherwise); DomainError(NotStabilized) when N reaches 24.
Integer milnor_colength(const Polynomial& p);

/// Replaces the cited mu step of a hypersurface certificate by the oracle value.
void confirm_with_colength(BoundCertificate& c, const Polynomial& f);

}  // namespace newton_mu::oracles
