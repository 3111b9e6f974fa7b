#ifndef SHEN_ELLIPTIC_MODULAR_HPP
#define SHEN_ELLIPTIC_MODULAR_HPP

#include "shen_elliptic/weierstrass.hpp"

namespace shen_elliptic {

// Invariants produced by dividing the imaginary period, together with the
// special p-value b that enters the formulas.
struct TransformResult {
    double h2;
    double h3;
    double b;
};

// n = 2 period division (omega' -> omega'/2), b = p(omega'):
//   h2 = 60 b^2 - 4 g2,   h3 = 56 b^3 + 8 g3.
TransformResult quadratic_invariants(const Invariants& inv, double b);

// n = 3 period division (omega' -> omega'/3), b = p(2/3 omega'):
//   h2 = 120 b^2 - 9 g2,  h3 = 280 b^3 - 42 b g2 - 27 g3.
TransformResult cubic_invariants(const Invariants& inv, double b);

// |q(z) - [p(z) + p(z + omega') - p(omega')]| where q is the Weierstrass
// function with invariants quadratic_invariants(inv, p(omega')), i.e. the one
// attached to the lattice (2 omega, omega').
double quadratic_sum_identity_residual(const ComplexValue& z, const Invariants& inv,
                                       const HalfPeriods& hp);

// |q(z) - [p(z) + p(z + 2/3 omega') + p(z - 2/3 omega') - 2 p(2/3 omega')]|
// with q attached to the lattice (2 omega, 2/3 omega') and b = p(2/3 omega').
double cubic_sum_identity_residual(const ComplexValue& z, const Invariants& inv,
                                   const HalfPeriods& hp);

} // namespace shen_elliptic

#endif
