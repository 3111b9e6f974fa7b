#ifndef SHEN_ELLIPTIC_HYPERGEOMETRIC_HPP
#define SHEN_ELLIPTIC_HYPERGEOMETRIC_HPP

#include "shen_elliptic/signature.hpp"

namespace shen_elliptic {

// Gauss hypergeometric series F(a, b; c; x) on 0 <= x < 1, summed until the
// term falls below 1e-16 of the accumulated sum.
double gauss_2f1(double a, double b, double c, double x);

// F(a, b; 1/2; kappa^2 sin^2 t) for the signature's parameter pair.
// Strictly positive, even and pi-periodic in t.
double integrand(const Signature& sig, const Modulus& m, double t);

// u(T) = \int_0^T F(a, b; 1/2; kappa^2 sin^2 t) dt by adaptive quadrature.
// Strictly increasing with quasi-period u(T + pi) = u(T) + 2K.
double incomplete_integral(const Signature& sig, const Modulus& m, double T);

// K = u(pi/2) evaluated in closed form as (pi/2) F(a, b; 1; kappa^2).
double complete_K(const Signature& sig, const Modulus& m);

// Inverse of u: the unique phi with u(phi) = u, by argument reduction modulo
// 2K and safeguarded Newton iteration on the reduced interval.
double invert_phi(const Signature& sig, const Modulus& m, double u);

} // namespace shen_elliptic

#endif
