#include "shen_elliptic/modular.hpp"

#include <cmath>

namespace shen_elliptic {

TransformResult quadratic_invariants(const Invariants& inv, double b) {
    const double h2 = 60.0 * b * b - 4.0 * inv.g2();
    const double h3 = 56.0 * b * b * b + 8.0 * inv.g3();
    return TransformResult{h2, h3, b};
}

TransformResult cubic_invariants(const Invariants& inv, double b) {
    const double h2 = 120.0 * b * b - 9.0 * inv.g2();
    const double h3 = 280.0 * b * b * b - 42.0 * b * inv.g2() - 27.0 * inv.g3();
    return TransformResult{h2, h3, b};
}

double quadratic_sum_identity_residual(const ComplexValue& z, const Invariants& inv,
                                       const HalfPeriods& hp) {
    const Weierstrass p(inv);
    const ComplexValue wprime = hp.omega_prime;
    const double b = p.p(wprime).real();
    const TransformResult t = quadratic_invariants(inv, b);
    const Weierstrass q(Invariants(t.h2, t.h3));
    const ComplexValue lhs = q.p(z);
    const ComplexValue rhs = p.p(z) + p.p(z + wprime) - b;
    return std::abs(lhs - rhs);
}

double cubic_sum_identity_residual(const ComplexValue& z, const Invariants& inv,
                                   const HalfPeriods& hp) {
    const Weierstrass p(inv);
    const ComplexValue shift = (2.0 / 3.0) * hp.omega_prime;
    const double b = p.p(shift).real();
    const TransformResult t = cubic_invariants(inv, b);
    const Weierstrass q(Invariants(t.h2, t.h3));
    const ComplexValue lhs = q.p(z);
    const ComplexValue rhs = p.p(z) + p.p(z + shift) + p.p(z - shift) - 2.0 * b;
    return std::abs(lhs - rhs);
}

} // namespace shen_elliptic
