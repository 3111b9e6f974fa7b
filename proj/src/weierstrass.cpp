#include "shen_elliptic/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "shen_elliptic/errors.hpp"
#include "shen_elliptic/quadrature.hpp"

namespace shen_elliptic {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kPoleFraction = 1e-12; // pole threshold, relative to omega

void require_nondegenerate(const Invariants& inv) {
    if (!(inv.discriminant() > 0.0))
        throw degenerate_lattice_error(
            "invariants have discriminant <= 0: degenerate period lattice");
}

// Complete elliptic integral K(m) via the arithmetic-geometric mean.
double agm_K(double m) {
    if (!(m >= 0.0) || !(m < 1.0))
        throw domain_error("agm_K: parameter m must lie in [0, 1)");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * a) break;
    }
    return kPi / (2.0 * a);
}

// int_0^inf ds / sqrt((s^2 + A)(s^2 + B)) with A, B > 0: the desingularized
// form shared by both half-period integrals. Truncated where the original
// cubic integrand drops below 1e-16, with the asymptotic tail added back.
double half_period_integral(double A, double B) {
    // (4 t^3)^(-1/2) < 1e-16  =>  t > (1e32 / 4)^(1/3); s = sqrt(t - e_end).
    const double t_cut = std::cbrt(0.25e32);
    const double s_max = std::sqrt(t_cut);
    const double body = quad::integrate(
        [A, B](double s) { return 1.0 / std::sqrt((s * s + A) * (s * s + B)); }, 0.0,
        s_max, 1e-13);
    const double S = s_max;
    const double tail = 1.0 / S - (A + B) / (6.0 * S * S * S) +
                        (3.0 * A * A + 2.0 * A * B + 3.0 * B * B) / (40.0 * std::pow(S, 5));
    return body + tail;
}

} // namespace

CubicRoots cubic_roots(const Invariants& inv) {
    require_nondegenerate(inv);
    const double g2 = inv.g2();
    const double g3 = inv.g3();

    // 4t^3 - g2 t - g3 = 0  <=>  t^3 + p t + q = 0, p = -g2/4, q = -g3/4.
    // Delta > 0 forces g2 > 0, so the trigonometric branch always applies.
    const double p = -0.25 * g2;
    const double q = -0.25 * g3;
    const double r = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * r);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg);

    double e[3];
    for (int k = 0; k < 3; ++k)
        e[k] = r * std::cos((theta - 2.0 * kPi * k) / 3.0);
    std::sort(e, e + 3, std::greater<>());

    // One Newton polish per root.
    for (double& x : e) {
        const double f = ((4.0 * x * x) * x) - g2 * x - g3;
        const double fp = 12.0 * x * x - g2;
        if (fp != 0.0) x -= f / fp;
    }
    return CubicRoots{e[0], e[1], e[2]};
}

HalfPeriods half_periods_from_invariants(const Invariants& inv) {
    const CubicRoots r = cubic_roots(inv);
    const double omega = half_period_integral(r.e1 - r.e2, r.e1 - r.e3);
    const double omega_prime = half_period_integral(r.e1 - r.e3, r.e2 - r.e3);
    return HalfPeriods{omega, ComplexValue(0.0, omega_prime)};
}

Weierstrass::Weierstrass(const Invariants& inv) : inv_(inv), roots_(cubic_roots(inv)) {
    root_scale_ = std::sqrt(roots_.e1 - roots_.e3);
    jacobi_m_ = (roots_.e2 - roots_.e3) / (roots_.e1 - roots_.e3);
    quarter_k_ = agm_K(jacobi_m_);
    quarter_kp_ = agm_K(1.0 - jacobi_m_);
    hp_ = HalfPeriods{quarter_k_ / root_scale_,
                      ComplexValue(0.0, quarter_kp_ / root_scale_)};
}

// Bulirsch's descending AGM recurrence for Jacobi sn, cn, dn with real
// argument and parameter m in [0, 1).
Weierstrass::JacobiTriple Weierstrass::sncndn(double u, double m) const {
    constexpr int kDepth = 16;
    const double ca = std::sqrt(std::numeric_limits<double>::epsilon());

    double emc = 1.0 - m;
    if (emc == 0.0) {
        const double sech = 1.0 / std::cosh(u);
        return JacobiTriple{std::tanh(u), sech, sech};
    }

    double a = 1.0;
    double dn = 1.0;
    double c = 1.0;
    double em[kDepth], en[kDepth];
    int l = 0;
    for (int i = 0; i < kDepth; ++i) {
        l = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= ca * a) break;
        emc *= a;
        a = c;
    }
    u *= c;
    double sn = std::sin(u);
    double cn = std::cos(u);
    if (sn != 0.0) {
        a = cn / sn;
        c *= a;
        for (int i = l; i >= 0; --i) {
            const double b = em[i];
            a *= c;
            c *= dn;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0) ? a : -a;
        cn = c * sn;
    }
    return JacobiTriple{sn, cn, dn};
}

ComplexValue Weierstrass::reduce(const ComplexValue& z) const {
    const double two_w = 2.0 * hp_.omega;
    const double two_wp = 2.0 * hp_.omega_prime.imag();
    double x = z.real();
    double y = z.imag();
    x -= two_w * std::floor(x / two_w + 0.5);
    y -= two_wp * std::floor(y / two_wp + 0.5);
    return ComplexValue(x, y);
}

std::pair<ComplexValue, ComplexValue> Weierstrass::p_and_prime(
    const ComplexValue& z) const {
    const ComplexValue zr = reduce(z);
    if (std::abs(zr) < kPoleFraction * hp_.omega)
        throw pole_error("wp: argument is on (or numerically on) the period lattice");

    const double e1 = roots_.e1, e3 = roots_.e3;
    const double m = jacobi_m_;
    const double u = zr.real() * root_scale_;
    const double v = zr.imag() * root_scale_;

    const JacobiTriple ju = sncndn(u, m);
    const JacobiTriple jv = sncndn(v, 1.0 - m);

    // Jacobi functions of u + iv from real data (Abramowitz & Stegun 16.21):
    // each numerator/denominator below is a plain product, so the ratios keep
    // full relative accuracy even beside the poles of sn.
    const double den = jv.cn * jv.cn + m * ju.sn * ju.sn * jv.sn * jv.sn;
    const ComplexValue n_sn(ju.sn * jv.dn, ju.cn * ju.dn * jv.sn * jv.cn);
    const ComplexValue n_cn(ju.cn * jv.cn, -ju.sn * ju.dn * jv.sn * jv.dn);
    const ComplexValue n_dn(ju.dn * jv.cn * jv.dn, -m * ju.sn * ju.cn * jv.sn);

    const double scale2 = e1 - e3; // root_scale_^2
    if (n_sn == ComplexValue(0.0, 0.0)) {
        // Exactly at a pole of sn: p = e3, p' = 0.
        return {ComplexValue(e3, 0.0), ComplexValue(0.0, 0.0)};
    }
    const ComplexValue n_sn2 = n_sn * n_sn;
    const ComplexValue pval = e3 + scale2 * den * den / n_sn2;
    // p' = -2 (e1 - e3)^{3/2} cn dn / sn^3.
    const ComplexValue pprime =
        -2.0 * scale2 * root_scale_ * n_cn * n_dn * den / (n_sn2 * n_sn);
    return {pval, pprime};
}

ComplexValue Weierstrass::p(const ComplexValue& z) const { return p_and_prime(z).first; }

ComplexValue Weierstrass::p_prime(const ComplexValue& z) const {
    return p_and_prime(z).second;
}

ComplexValue wp(const ComplexValue& z, const Invariants& inv) {
    return Weierstrass(inv).p(z);
}

ComplexValue wp_prime(const ComplexValue& z, const Invariants& inv) {
    return Weierstrass(inv).p_prime(z);
}

ComplexValue lattice_sum_oracle(const ComplexValue& z, const HalfPeriods& hp, int N) {
    if (N < 10) throw domain_error("lattice_sum_oracle: N must be at least 10");
    const ComplexValue two_w(2.0 * hp.omega, 0.0);
    const ComplexValue two_wp = 2.0 * hp.omega_prime;

    struct Term {
        double abs2;
        ComplexValue w;
    };
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(2 * N + 1) * (2 * N + 1));
    for (int mi = -N; mi <= N; ++mi) {
        for (int ni = -N; ni <= N; ++ni) {
            if (mi == 0 && ni == 0) continue;
            if (std::max(std::abs(mi), std::abs(ni)) > N) continue;
            const ComplexValue w = static_cast<double>(mi) * two_w +
                                   static_cast<double>(ni) * two_wp;
            terms.push_back(Term{std::norm(w), w});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.abs2 < b.abs2; });

    // Pole check: z must not coincide with a lattice point.
    {
        const double x = z.real() - 2.0 * hp.omega * std::floor(z.real() / (2.0 * hp.omega) + 0.5);
        const double wp_im = 2.0 * hp.omega_prime.imag();
        const double y = z.imag() - wp_im * std::floor(z.imag() / wp_im + 0.5);
        if (std::abs(ComplexValue(x, y)) < kPoleFraction * hp.omega)
            throw pole_error("lattice_sum_oracle: argument on the period lattice");
    }

    ComplexValue sum = 1.0 / (z * z);
    for (const Term& t : terms) {
        const ComplexValue d = z - t.w;
        sum += 1.0 / (d * d) - 1.0 / (t.w * t.w);
    }
    return sum;
}

std::pair<ComplexValue, ComplexValue> scale_invariants(const ComplexValue& c,
                                                        const Invariants& inv) {
    if (c == ComplexValue(0.0, 0.0))
        throw domain_error("scale_invariants: scale factor must be nonzero");
    const ComplexValue c2 = c * c;
    const ComplexValue c4 = c2 * c2;
    const ComplexValue c6 = c4 * c2;
    return {inv.g2() / c4, inv.g3() / c6};
}

} // namespace shen_elliptic
