#ifndef SHEN_ELLIPTIC_SHEN_HPP
#define SHEN_ELLIPTIC_SHEN_HPP

#include "shen_elliptic/signature.hpp"
#include "shen_elliptic/weierstrass.hpp"

namespace shen_elliptic {

// Invariants of the Weierstrass function coperiodic with the signature's
// elliptic function:
//   three: g2 = 4/27 (9 - 8 k^2),  g3 = 8/729 (27 - 36 k^2 + 8 k^4)
//   four:  g2 = 4/3 - k^2,         g3 = 8/27 - k^2/3
// The discriminant is checked to be positive.
Invariants signature_invariants(const Signature& sig, const Modulus& m);

// Closed-form fundamental half periods,
//   omega  = (pi/2) F(a, b; 1; kappa^2)
//   omega' = i (period_scale / 2) pi F(a, b; 1; lambda^2).
HalfPeriods shen_half_periods(const Signature& sig, const Modulus& m);

// dn3 (signature three) or dn4 (signature four): the elliptic function f with
// (1 - f)(1/3 + p) = rhs_scale * kappa^2 for the coperiodic Weierstrass p.
class ShenFunction {
public:
    ShenFunction(const Signature& sig, const Modulus& m);

    const Signature& signature() const { return sig_; }
    const Modulus& modulus() const { return m_; }
    const Invariants& invariants() const { return w_.invariants(); }
    const HalfPeriods& half_periods() const { return hp_; }
    const Weierstrass& weierstrass() const { return w_; }

    // 1 - rhs_scale * kappa^2 / (1/3 + p(z)); exactly 1 at lattice points
    // (the p-pole limit). Throws pole_error where p(z) = -1/3 within 1e-12.
    ComplexValue operator()(const ComplexValue& z) const;

private:
    Signature sig_;
    Modulus m_;
    HalfPeriods hp_;
    Weierstrass w_;
};

ComplexValue shen_eval(const ShenFunction& f, const ComplexValue& z);

// Real-line construction of dn3: 1 / F(1/3, 2/3; 1/2; kappa^2 sin^2 phi(u)),
// the inverse-function-theorem form of phi'.
double dn3_real(const Modulus& m, double u);

// Real-line construction of dn4: cos(arcsin(kappa sin phi(u))).
double dn4_real(const Modulus& m, double u);

// Real part of p(2/3 omega') for signature three, p(omega') for signature
// four; both equal -1/3.
double special_value_b(const Signature& sig, const Modulus& m);

// |LHS - RHS| of the signature's differential equation at z, with the
// derivative taken analytically through the chain rule:
//   three: 9 f'^2 = 4 (1 - f)(f^3 + 3 f^2 - 4 lambda^2)
//   four:  f'^2 = 2 (1 - f)(f^2 - lambda^2)
double ode_residual(const ShenFunction& f, const ComplexValue& z);

// |q(z) + n p_lambda(period_scale * i * z)| with n = period_scale^2, where q
// carries the period-divided invariants built from b = -1/3 and p_lambda is
// the coperiodic function of the complementary modulus.
double companion_q_residual(const Signature& sig, const Modulus& m,
                            const ComplexValue& z);

// Relative residual of omega'_kappa = period_scale * i * omega_lambda. With
// quadrature_omega_prime set, omega'_kappa is taken from the integration
// oracle instead of the closed form.
double complementary_period_residual(const Signature& sig, const Modulus& m,
                                     bool quadrature_omega_prime = false);

// omega' / omega = i * period_scale * F(a, b; 1; lambda^2) / F(a, b; 1; kappa^2).
ComplexValue period_ratio(const Signature& sig, const Modulus& m);

} // namespace shen_elliptic

#endif
