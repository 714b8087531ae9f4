#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace slitfringe {

/// Truncation budgets shared by series and quadrature code.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double tail_eps = 1e-12;

    /// Throws ParameterError unless all fields are in (0, 1e-2].
    void validate() const;
};

struct FresnelValue {
    double c;  // C(z) = int_0^z cos(pi w^2 / 2) dw
    double s;  // S(z) = int_0^z sin(pi w^2 / 2) dw
};

/// Fresnel integrals C(z), S(z). Odd in z; absolute accuracy ~1e-14.
/// Throws DomainError for non-finite z.
FresnelValue fresnel(double z);

/// Standard error function. Throws DomainError for non-finite z.
double erf_checked(double z);

/// Heat semigroup applied to height * indicator([center-hw, center+hw]),
/// evaluated at x after time t with diffusion sigma:
///   (height/2) [erf((x-c+hw)/(2 sqrt(sigma t))) - erf((x-c-hw)/(2 sqrt(sigma t)))].
/// At t = 0 returns the raw indicator, with height/2 at the jump points.
/// Throws ParameterError for sigma <= 0, hw <= 0, height < 0, or t < 0.
double heat_step(double center, double half_width, double height, double sigma,
                 double t, double x);

/// Net-shift weights of exp(t B) for B f = beta (f(.+d) - 2 f + f(.-d)):
///   w_j = e^{-2 beta t} sum_{n >= max(0,-j)} (beta t)^{j+2n} / ((j+n)! n!),
/// the probability that the compound of +d and -d Poisson shifts nets j steps.
struct ShiftWeights {
    long half_width = 0;          // J: weights cover j = -J..J
    std::vector<double> weights;  // size 2J+1, index j+J
    double rate_time = 0.0;       // beta * t

    double at(long j) const { return weights[static_cast<std::size_t>(j + half_width)]; }
    double sum() const;
};

/// Computes ShiftWeights with J minimal such that the omitted tail mass is
/// below tail_eps. Throws ParameterError for rate_time < 0 or tail_eps
/// outside (0, 1e-3); ResourceError if J would exceed hard_cap.
ShiftWeights shift_weights(double rate_time, double tail_eps, long hard_cap = 10000);

}  // namespace slitfringe
