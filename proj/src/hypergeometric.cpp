#include "shen_elliptic/hypergeometric.hpp"

#include <cmath>
#include <cstddef>

#include "shen_elliptic/errors.hpp"
#include "shen_elliptic/quadrature.hpp"

namespace shen_elliptic {

namespace {

constexpr double kSeriesRelTol = 1e-16;
constexpr std::size_t kSeriesMaxTerms = 100000;
constexpr double kQuadTol = 1e-12;

bool is_nonpositive_integer(double c) {
    return c <= 0.0 && c == std::floor(c);
}

} // namespace

double gauss_2f1(double a, double b, double c, double x) {
    if (is_nonpositive_integer(c))
        throw domain_error("gauss_2f1: c must not be a nonpositive integer");
    if (!(x >= 0.0) || x >= 1.0)
        throw domain_error("gauss_2f1: argument must satisfy 0 <= x < 1");

    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 0; k < kSeriesMaxTerms; ++k) {
        const double dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / (c + dk) * x / (dk + 1.0);
        sum += term;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum)) return sum;
    }
    throw nonconvergence_error("gauss_2f1: series term budget exhausted");
}

double integrand(const Signature& sig, const Modulus& m, double t) {
    const double s = std::sin(t);
    return gauss_2f1(sig.a(), sig.b(), 0.5, m.kappa2() * s * s);
}

double incomplete_integral(const Signature& sig, const Modulus& m, double T) {
    if (T == 0.0) return 0.0;
    return quad::integrate([&](double t) { return integrand(sig, m, t); }, 0.0, T,
                           kQuadTol);
}

double complete_K(const Signature& sig, const Modulus& m) {
    constexpr double half_pi = 1.5707963267948966;
    return half_pi * gauss_2f1(sig.a(), sig.b(), 1.0, m.kappa2());
}

double invert_phi(const Signature& sig, const Modulus& m, double u) {
    if (u == 0.0) return 0.0;
    constexpr double pi = 3.141592653589793;
    const double two_k = 2.0 * complete_K(sig, m);

    // u(phi + pi) = u(phi) + 2K, so solve on one fundamental interval.
    const double n = std::floor(u / two_k);
    const double u_red = u - n * two_k; // in [0, 2K)

    double lo = 0.0, hi = pi;
    double phi = u_red * (pi / two_k);
    double residual = incomplete_integral(sig, m, phi) - u_red;

    constexpr int max_iter = 80;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(residual) < 1e-12) break;
        if (residual > 0.0)
            hi = phi;
        else
            lo = phi;
        // Newton step; the derivative F(...) >= 1 keeps it well scaled.
        double next = phi - residual / integrand(sig, m, phi);
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (next == phi) break;
        phi = next;
        residual = incomplete_integral(sig, m, phi) - u_red;
    }
    return phi + n * pi;
}

} // namespace shen_elliptic
