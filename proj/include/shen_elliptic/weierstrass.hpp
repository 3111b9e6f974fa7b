#ifndef SHEN_ELLIPTIC_WEIERSTRASS_HPP
#define SHEN_ELLIPTIC_WEIERSTRASS_HPP

#include <complex>
#include <utility>

namespace shen_elliptic {

using ComplexValue = std::complex<double>;

// Invariant pair (g2, g3) of a Weierstrass function. The discriminant
// Delta = g2^3 - 27 g3^2 is computed on construction; operations that need a
// nondegenerate real lattice reject Delta <= 0.
class Invariants {
public:
    Invariants(double g2, double g3)
        : g2_(g2), g3_(g3), disc_(g2 * g2 * g2 - 27.0 * g3 * g3) {}

    double g2() const { return g2_; }
    double g3() const { return g3_; }
    double discriminant() const { return disc_; }

private:
    double g2_, g3_;
    double disc_;
};

// Real roots e1 > e2 > e3 of 4t^3 - g2 t - g3.
struct CubicRoots {
    double e1;
    double e2;
    double e3;
};

// Rectangular-lattice half periods: omega real positive, omega_prime purely
// imaginary with positive imaginary part; (2 omega, 2 omega') generate the
// period lattice.
struct HalfPeriods {
    double omega;
    ComplexValue omega_prime;
};

CubicRoots cubic_roots(const Invariants& inv);

// Half periods by direct quadrature of the defining improper integrals,
//   omega  = int_{e1}^{inf} (4t^3 - g2 t - g3)^{-1/2} dt
//   omega' = i int_{-inf}^{e3} (-(4t^3 - g2 t - g3))^{-1/2} dt,
// each desingularized by a square-root substitution at the finite endpoint.
// Serves as the integration oracle against the closed-form period formulas.
HalfPeriods half_periods_from_invariants(const Invariants& inv);

// Evaluator for one Weierstrass function with real invariants, Delta > 0.
// Arguments are lattice-reduced, then p and p' are obtained from Jacobi
// sn/cn/dn data computed by the AGM recurrence of Bulirsch; complex arguments
// go through the real/imaginary addition decomposition, which stays accurate
// across the whole fundamental cell including the half-period neighborhoods.
class Weierstrass {
public:
    explicit Weierstrass(const Invariants& inv);

    const Invariants& invariants() const { return inv_; }
    const CubicRoots& roots() const { return roots_; }
    // AGM-derived half periods (machine accuracy); independent of the
    // quadrature route above.
    const HalfPeriods& half_periods() const { return hp_; }

    ComplexValue p(const ComplexValue& z) const;
    ComplexValue p_prime(const ComplexValue& z) const;
    std::pair<ComplexValue, ComplexValue> p_and_prime(const ComplexValue& z) const;

    // Shift z by full periods into the cell alpha, beta in [-1/2, 1/2) where
    // z = 2 alpha omega + 2 beta omega'.
    ComplexValue reduce(const ComplexValue& z) const;

private:
    struct JacobiTriple {
        double sn, cn, dn;
    };
    JacobiTriple sncndn(double u, double m) const;

    Invariants inv_;
    CubicRoots roots_;
    double root_scale_;   // sqrt(e1 - e3)
    double jacobi_m_;     // (e2 - e3)/(e1 - e3)
    double quarter_k_;    // K(m)
    double quarter_kp_;   // K(1 - m)
    HalfPeriods hp_;
};

ComplexValue wp(const ComplexValue& z, const Invariants& inv);
ComplexValue wp_prime(const ComplexValue& z, const Invariants& inv);

// Truncated symmetric lattice sum
//   z^-2 + sum_{0 < max(|m|,|n|) <= N} [ (z - w)^-2 - w^-2 ],  w = 2m omega + 2n omega',
// accumulated in order of increasing |w|. O(1/N) accuracy; brute-force
// cross-check only.
ComplexValue lattice_sum_oracle(const ComplexValue& z, const HalfPeriods& hp, int N);

// Homogeneity scaling: invariants (c^-4 g2, c^-6 g3) of the function
// satisfying wp(c z; scaled) = c^-2 wp(z; g2, g3).
std::pair<ComplexValue, ComplexValue> scale_invariants(const ComplexValue& c,
                                                        const Invariants& inv);

} // namespace shen_elliptic

#endif
