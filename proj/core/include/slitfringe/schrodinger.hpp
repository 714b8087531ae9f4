#pragma once

#include "slitfringe/types.hpp"

namespace slitfringe {

/// Value of psi(x, t) at one point.
struct Amplitude {
    double re;
    double im;

    double norm_sq() const { return re * re + im * im; }
};

/// First and second absolute moments of psi_0:
///   m0 = int |psi_0|, m2 = int y^2 |psi_0|.
/// Closed forms for the two-rectangle data:
///   m0 = 4 b h, m2 = (2h/3) ((s+b)^3 - (s-b)^3).
std::pair<double, double> psi0_moments(const SlitPair& slits);

/// Free-propagator solution for two-rectangle initial data, evaluated via
/// Fresnel integrals: each rectangle [c-b, c+b] contributes
///   h (1-i)/2 [(C(v)-C(u)) + i (S(v)-S(u))],
/// u = (c-b-x)/sqrt(pi t), v = (c+b-x)/sqrt(pi t).
/// Throws DomainError for t <= 0.
Amplitude psi(const SlitPair& slits, double t, double x);

/// Probability density |psi(x,t)|^2.
double rho(const SlitPair& slits, double t, double x);

/// rho sampled over a grid (parallel across points, per-point order fixed).
Profile rho_profile(const SlitPair& slits, double t, const Grid& grid);

/// Trapezoid mass of rho over a domain padded so the truncated tail stays
/// within tail_budget: the momentum density of step data falls off like
/// 4 h^2 / k^2, so the omitted mass beyond radius R is about 4 h^2 t/(pi R).
/// Half the budget goes to truncation, the rest covers quadrature error.
double rho_mass(const SlitPair& slits, double t, double tail_budget = 1e-4);

/// Space-time dilation inequality data:
///   sup_x |rho(x, tT) - (1/t) rho(x/t, T)| <= sqrt(2)/(pi t T^2) m2 m0.
struct DilationReport {
    double t;
    double T;
    double lhs_sup;
    double rhs_bound;
    double moment1;  // m0
    double moment2;  // m2

    bool holds() const { return lhs_sup <= rhs_bound; }
};

/// Evaluates both sides of the dilation inequality over the grid.
/// Throws DomainError unless t >= 1 and T > 0.
DilationReport dilation_check(const SlitPair& slits, double t, double T, const Grid& grid);

/// Limit of t rho(x, t) as t -> infinity: m0^2 / (2 pi).
double asymptotic_limit(const SlitPair& slits);

}  // namespace slitfringe
