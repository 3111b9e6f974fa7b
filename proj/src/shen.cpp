#include "shen_elliptic/shen.hpp"

#include <cmath>

#include "shen_elliptic/errors.hpp"
#include "shen_elliptic/hypergeometric.hpp"
#include "shen_elliptic/modular.hpp"

namespace shen_elliptic {

namespace {
constexpr double kPi = 3.141592653589793;
constexpr double kThird = 1.0 / 3.0;
constexpr double kShenPoleTol = 1e-12;
} // namespace

Invariants signature_invariants(const Signature& sig, const Modulus& m) {
    const double k2 = m.kappa2();
    double g2, g3;
    if (sig.tag() == SignatureTag::Three) {
        g2 = (4.0 / 27.0) * (9.0 - 8.0 * k2);
        g3 = (8.0 / 729.0) * (27.0 - 36.0 * k2 + 8.0 * k2 * k2);
    } else {
        g2 = 4.0 / 3.0 - k2;
        g3 = 8.0 / 27.0 - k2 / 3.0;
    }
    const Invariants inv(g2, g3);
    if (!(inv.discriminant() > 0.0))
        throw degenerate_lattice_error(
            "signature invariants degenerate for this modulus");
    return inv;
}

HalfPeriods shen_half_periods(const Signature& sig, const Modulus& m) {
    const double omega = 0.5 * kPi * gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2());
    const double omega_prime =
        0.5 * sig.period_scale() * kPi * gauss_2f1(sig.a(), sig.b(), 1.0, m.lambda2());
    return HalfPeriods{omega, ComplexValue(0.0, omega_prime)};
}

ShenFunction::ShenFunction(const Signature& sig, const Modulus& m)
    : sig_(sig), m_(m), hp_(shen_half_periods(sig, m)), w_(signature_invariants(sig, m)) {}

ComplexValue ShenFunction::operator()(const ComplexValue& z) const {
    ComplexValue p;
    try {
        p = w_.p(z);
    } catch (const pole_error&) {
        // p has a pole: (1 - f)(1/3 + p) = const forces f -> 1.
        return ComplexValue(1.0, 0.0);
    }
    const ComplexValue denom = kThird + p;
    if (std::abs(denom) < kShenPoleTol)
        throw pole_error("shen_eval: argument at a pole of the Shen function");
    return 1.0 - sig_.rhs_scale() * m_.kappa2() / denom;
}

ComplexValue shen_eval(const ShenFunction& f, const ComplexValue& z) { return f(z); }

double dn3_real(const Modulus& m, double u) {
    const Signature& sig = Signature::three();
    const double phi = invert_phi(sig, m, u);
    return 1.0 / integrand(sig, m, phi);
}

double dn4_real(const Modulus& m, double u) {
    const Signature& sig = Signature::four();
    const double phi = invert_phi(sig, m, u);
    return std::cos(std::asin(m.kappa() * std::sin(phi)));
}

double special_value_b(const Signature& sig, const Modulus& m) {
    const Weierstrass w(signature_invariants(sig, m));
    const double frac = sig.tag() == SignatureTag::Three ? 2.0 / 3.0 : 1.0;
    return w.p(frac * w.half_periods().omega_prime).real();
}

double ode_residual(const ShenFunction& f, const ComplexValue& z) {
    const auto [p, pp] = f.weierstrass().p_and_prime(z);
    const ComplexValue denom = kThird + p;
    if (std::abs(denom) < kShenPoleTol)
        throw pole_error("ode_residual: argument at a pole of the Shen function");
    const double ck = f.signature().rhs_scale() * f.modulus().kappa2();
    const ComplexValue val = 1.0 - ck / denom;
    const ComplexValue deriv = ck * pp / (denom * denom);
    const double lam2 = f.modulus().lambda2();

    ComplexValue lhs, rhs;
    if (f.signature().tag() == SignatureTag::Three) {
        lhs = 9.0 * deriv * deriv;
        rhs = 4.0 * (1.0 - val) * (val * val * val + 3.0 * val * val - 4.0 * lam2);
    } else {
        lhs = deriv * deriv;
        rhs = 2.0 * (1.0 - val) * (val * val - lam2);
    }
    return std::abs(lhs - rhs);
}

double companion_q_residual(const Signature& sig, const Modulus& m,
                            const ComplexValue& z) {
    const Invariants inv = signature_invariants(sig, m);
    const double b = -kThird; // the paper's exact division value
    const TransformResult t = sig.tag() == SignatureTag::Three
                                  ? cubic_invariants(inv, b)
                                  : quadratic_invariants(inv, b);
    const Weierstrass q(Invariants(t.h2, t.h3));
    const Weierstrass p_lambda(signature_invariants(sig, m.complementary()));

    const double s = sig.period_scale();
    const double n = s * s;
    const ComplexValue rotated(-s * z.imag(), s * z.real()); // period_scale * i * z
    return std::abs(q.p(z) + n * p_lambda.p(rotated));
}

double complementary_period_residual(const Signature& sig, const Modulus& m,
                                     bool quadrature_omega_prime) {
    const ComplexValue omega_prime_kappa =
        quadrature_omega_prime
            ? half_periods_from_invariants(signature_invariants(sig, m)).omega_prime
            : shen_half_periods(sig, m).omega_prime;
    const double omega_lambda = shen_half_periods(sig, m.complementary()).omega;
    const ComplexValue predicted(0.0, sig.period_scale() * omega_lambda);
    return std::abs(omega_prime_kappa - predicted) / std::abs(omega_prime_kappa);
}

ComplexValue period_ratio(const Signature& sig, const Modulus& m) {
    const double num = gauss_2f1(sig.a(), sig.b(), 1.0, m.lambda2());
    const double den = gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2());
    return ComplexValue(0.0, sig.period_scale() * num / den);
}

} // namespace shen_elliptic
