#ifndef SHEN_ELLIPTIC_QUADRATURE_HPP
#define SHEN_ELLIPTIC_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "shen_elliptic/errors.hpp"

namespace shen_elliptic {
namespace quad {

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15 abscissae).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gauss_kronrod_15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double fc = f(mid);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    result_kronrod *= half;
    result_gauss *= half;

    Panel p;
    p.a = a;
    p.b = b;
    p.value = result_kronrod;
    p.error = std::abs(result_kronrod - result_gauss);
    return p;
}

} // namespace detail

// Globally adaptive Gauss-Kronrod bisection: repeatedly split the panel with
// the largest error estimate until the summed estimate drops below abs_tol.
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol,
                 std::size_t max_panels = 4096) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gauss_kronrod_15(f, a, b));
    double total_value = panels.top().value;
    double total_error = panels.top().error;

    while (total_error > abs_tol && panels.size() < max_panels) {
        detail::Panel worst = panels.top();
        panels.pop();
        total_value -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel narrowed to machine width; keep its estimate as is.
            total_value += worst.value;
            total_error += 0.0;
            continue;
        }
        for (const auto& child : {detail::gauss_kronrod_15(f, worst.a, mid),
                                  detail::gauss_kronrod_15(f, mid, worst.b)}) {
            total_value += child.value;
            total_error += child.error;
            panels.push(child);
        }
    }
    if (total_error > abs_tol * 1e3 && total_error > 1e-300)
        throw nonconvergence_error("adaptive quadrature failed to reach tolerance");

    // Re-accumulate from the panel list to reduce cancellation drift.
    std::vector<double> values;
    values.reserve(panels.size());
    while (!panels.empty()) {
        values.push_back(panels.top().value);
        panels.pop();
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    return sign * sum;
}

} // namespace quad
} // namespace shen_elliptic

#endif
