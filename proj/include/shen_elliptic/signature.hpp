#ifndef SHEN_ELLIPTIC_SIGNATURE_HPP
#define SHEN_ELLIPTIC_SIGNATURE_HPP

#include <cmath>
#include <string>

#include "shen_elliptic/errors.hpp"

namespace shen_elliptic {

enum class SignatureTag { Three, Four };

// One of Ramanujan's alternative-base signatures. Carries the hypergeometric
// parameter pair (a, b) with a + b = 1, the period scale relating the
// imaginary half-period to the complementary real one, and the constant on
// the right-hand side of the defining relation (1 - f)(1/3 + p) = rhs_scale * kappa^2.
class Signature {
public:
    static const Signature& three();
    static const Signature& four();
    static const Signature& from_order(int n); // 3 or 4

    SignatureTag tag() const { return tag_; }
    int order() const { return tag_ == SignatureTag::Three ? 3 : 4; }
    double a() const { return a_; }
    double b() const { return b_; }
    // sqrt(3) for signature three, sqrt(2) for signature four;
    // period_scale^2 is the period-division order n.
    double period_scale() const { return period_scale_; }
    int division_order() const { return tag_ == SignatureTag::Three ? 3 : 2; }
    double rhs_scale() const { return rhs_scale_; }
    std::string name() const { return tag_ == SignatureTag::Three ? "three" : "four"; }

    bool operator==(const Signature& o) const { return tag_ == o.tag_; }

private:
    Signature(SignatureTag tag, double a, double b, double period_scale, double rhs_scale)
        : tag_(tag), a_(a), b_(b), period_scale_(period_scale), rhs_scale_(rhs_scale) {}

    SignatureTag tag_;
    double a_, b_;
    double period_scale_;
    double rhs_scale_;
};

inline const Signature& Signature::three() {
    static const Signature s{SignatureTag::Three, 1.0 / 3.0, 2.0 / 3.0,
                             std::sqrt(3.0), 4.0 / 9.0};
    return s;
}

inline const Signature& Signature::four() {
    static const Signature s{SignatureTag::Four, 0.25, 0.75, std::sqrt(2.0), 0.5};
    return s;
}

inline const Signature& Signature::from_order(int n) {
    if (n == 3) return three();
    if (n == 4) return four();
    throw domain_error("signature order must be 3 or 4");
}

// Modulus kappa in (0, 1) with complementary modulus lambda = sqrt(1 - kappa^2).
// Stores kappa^2 exactly as supplied so that hypergeometric arguments do not
// pick up a squaring round trip.
class Modulus {
public:
    static Modulus from_kappa(double kappa) {
        if (!(kappa > 0.0) || !(kappa < 1.0))
            throw domain_error("modulus kappa must lie in (0, 1)");
        return Modulus(kappa * kappa);
    }
    static Modulus from_kappa_squared(double kappa2) {
        if (!(kappa2 > 0.0) || !(kappa2 < 1.0))
            throw domain_error("kappa^2 must lie in (0, 1)");
        return Modulus(kappa2);
    }

    double kappa() const { return kappa_; }
    double lambda() const { return lambda_; }
    double kappa2() const { return kappa2_; }
    double lambda2() const { return lambda2_; }

    Modulus complementary() const { return Modulus(lambda2_); }

private:
    explicit Modulus(double kappa2)
        : kappa2_(kappa2),
          lambda2_(1.0 - kappa2),
          kappa_(std::sqrt(kappa2)),
          lambda_(std::sqrt(1.0 - kappa2)) {}

    double kappa2_, lambda2_;
    double kappa_, lambda_;
};

} // namespace shen_elliptic

#endif
