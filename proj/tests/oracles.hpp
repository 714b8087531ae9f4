// Independent reference computations used by the tests. Everything here is
// deliberately brute force (adaptive quadrature, raw series, panelwise
// Gauss rules) and shares no code path with the library implementations.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

// --- adaptive Simpson -------------------------------------------------------

namespace detail {
inline double simpson(const std::function<double(double)>& f, double a, double fa,
                      double b, double fb, double fm) {
    return (b - a) / 6 * (fa + 4 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double fa,
                    double b, double fb, double fm, double whole, double tol, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    if (depth <= 0 || std::fabs(left + right - whole) < 15 * tol) {
        return left + right + (left + right - whole) / 15;
    }
    return adapt(f, a, fa, m, fm, flm, left, tol / 2, depth - 1) +
           adapt(f, m, fm, b, fb, frm, right, tol / 2, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 40) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    return detail::adapt(f, a, fa, b, fb, fm, detail::simpson(f, a, fa, b, fb, fm), tol,
                         depth);
}

// --- Fresnel integrals by quadrature ---------------------------------------

// Integrates the oscillatory integrand in half-period panels bounded by the
// phase zeros w_n = sqrt(2n) so each adaptive call sees a tame integrand.
inline double fresnel_quadrature(double z, bool sine) {
    const auto f = [sine](double w) {
        const double phase = kPi / 2 * w * w;
        return sine ? std::sin(phase) : std::cos(phase);
    };
    const double az = std::fabs(z);
    double acc = 0.0;
    double lo = 0.0;
    for (int n = 1; lo < az; ++n) {
        const double hi = std::min(std::sqrt(2.0 * n), az);
        acc += adaptive_simpson(f, lo, hi, 1e-14);
        lo = hi;
    }
    return z < 0 ? -acc : acc;
}

// --- erf oracles ------------------------------------------------------------

// Taylor series; usable to machine precision for |z| <~ 3.
inline double erf_taylor(double z) {
    const double z2 = z * z;
    double term = z;
    double sum = z;
    for (int n = 1; n < 200; ++n) {
        term *= -z2 / n;
        const double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return 2 / std::sqrt(kPi) * sum;
}

inline double erf_quadrature(double z) {
    const double az = std::fabs(z);
    const double v = 2 / std::sqrt(kPi) *
                     adaptive_simpson([](double s) { return std::exp(-s * s); }, 0.0,
                                      std::min(az, 8.0), 1e-15);
    return z < 0 ? -v : v;
}

// --- heat kernel acting on a step -------------------------------------------

inline double heat_step_quadrature(double center, double half_width, double height,
                                   double sigma, double t, double x) {
    const double norm = 1.0 / (2 * std::sqrt(kPi * sigma * t));
    return adaptive_simpson(
        [&](double y) {
            const double d = x - y;
            return norm * height * std::exp(-d * d / (4 * sigma * t));
        },
        center - half_width, center + half_width, 1e-14);
}

// --- free-propagator oscillatory integral -----------------------------------

// psi(x,t) = 1/sqrt(2 pi i t) * sum over rectangles of
// int e^{i (x-y)^2/(2t)} h dy, via 10-point Gauss panels sized to give
// >= 40 nodes per phase oscillation.
inline std::complex<double> psi_quadrature(double s, double b, double h, double t,
                                           double x) {
    static const double gx[5] = {0.1488743389816312, 0.4333953941292472,
                                 0.6794095682990244, 0.8650633666889845,
                                 0.9739065285171717};
    static const double gw[5] = {0.2955242247147529, 0.2692667193099963,
                                 0.2190863625159820, 0.1494513491505806,
                                 0.0666713443086881};
    std::complex<double> integral(0.0, 0.0);
    for (double c : {-s, s}) {
        const double lo = c - b, hi = c + b;
        // max phase slope over the rectangle, in cycles per unit y
        const double slope = (std::max(std::fabs(lo - x), std::fabs(hi - x)) / t) / (2 * kPi);
        const int panels = std::max(4, static_cast<int>(std::ceil(slope * (hi - lo) * 4)));
        const double w = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = lo + (p + 0.5) * w;
            for (int g = 0; g < 5; ++g) {
                for (double sgn : {-1.0, 1.0}) {
                    const double y = mid + sgn * gx[g] * (w / 2);
                    const double phase = (x - y) * (x - y) / (2 * t);
                    integral += gw[g] * (w / 2) * h *
                                std::complex<double>(std::cos(phase), std::sin(phase));
                }
            }
        }
    }
    // 1/sqrt(2 pi i t) = (1 - i) / (2 sqrt(pi t))
    return std::complex<double>(1.0, -1.0) / (2 * std::sqrt(kPi * t)) * integral;
}

// --- net-shift weight by raw (m, n) double sum ------------------------------

// w_j = e^{-2x} sum over m - n = j of x^{m+n} / (m! n!), summed directly.
inline double shift_weight_double_sum(long j, double x) {
    double sum = 0.0;
    for (long n = 0; n < 400; ++n) {
        const long m = n + j;
        if (m < 0) continue;
        const double lg = static_cast<double>(m + n) * std::log(x) -
                          std::lgamma(static_cast<double>(m) + 1) -
                          std::lgamma(static_cast<double>(n) + 1);
        const double term = std::exp(lg - 2 * x);
        sum += term;
        if (n > x && term < 1e-17 * sum) break;
    }
    return sum;
}

}  // namespace oracles
