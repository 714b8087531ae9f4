#pragma once

#include "slitfringe/numerics.hpp"
#include "slitfringe/types.hpp"

namespace slitfringe {

/// Second-difference operator of one nonlocal level:
///   rate * (p(x + shift) - 2 p(x) + p(x - shift))
/// sampled on p's grid; reads outside the grid are 0. The shift must land on
/// grid nodes unless interpolate is set (linear interpolation).
/// Throws GridError for a non-commensurate shift without interpolation.
Profile apply_difference(double level_shift, double level_rate, const Profile& p,
                         bool interpolate = false);

/// Sup-norm gap between the derivative form of the nonlocal advection term
/// (numerical d/dx of the trapezoid quadrature of the signed integral) and
/// apply_difference, over interior points. O(dx^2) for smooth profiles.
double integral_form_residual(double level_shift, double level_rate,
                              const Profile& test_profile);

/// Pointwise evaluator for the factorized solution
///   T(t) omega_0 = T_alpha(t) exp(t B_0) ... exp(t B_m) omega_0:
/// the level shift series are folded into one displacement distribution and
/// each displacement contributes a closed-form heat_step pair.
class FactorizedEvolver {
  public:
    /// Throws ParameterError for invalid params/slits/t; ResourceError if a
    /// level's shift series exceeds the hard cap.
    FactorizedEvolver(const NladParams& params, const SlitPair& slits, double t,
                      const Tolerance& tol = {});

    double operator()(double x) const;

    /// Number of distinct folded displacements (diagnostic).
    std::size_t term_count() const { return displacements_.size(); }

    /// Radius R such that the solution mass outside [-R, R] is <= mass_tail:
    /// displacement weights are accumulated from the outside in, then the
    /// slit extent and a diffusion margin are added.
    double mass_radius(double mass_tail) const;

  private:
    NladParams params_;
    SlitPair slits_;
    double t_;
    std::vector<double> displacements_;
    std::vector<double> weights_;
};

/// Factorized solution sampled over a grid (exact in x, no grid error).
Profile evolve_factorized(const NladParams& params, const SlitPair& slits, double t,
                          const Grid& grid, const Tolerance& tol = {});

/// Fourier-multiplier data on the uniform k-grid 0, dk, ..., k_max.
struct MultiplierTable {
    double k_max;
    double dk;
    std::vector<double> symbol_values;     // sigma(k) = -alpha k^2 - sum 2 b_i (1 - cos(k d_i))
    std::vector<double> transform_values;  // omega0_hat(k)
};

/// Generator symbol at frequency k.
double multiplier_symbol(const NladParams& params, double k);

/// Fourier transform of the two-rectangle initial data:
///   omega0_hat(k) = 2 h (2 sin(k b) / k) cos(k s), omega0_hat(0) = 4 b h.
double initial_transform(const SlitPair& slits, double k);

/// Builds the table with k_max from e^{t sigma(k_max)} < tail_eps and dk
/// resolving the fastest oscillation (max of |x| extent and the largest
/// shift) by >= nodes_per_period nodes.
MultiplierTable build_multiplier_table(const NladParams& params, const SlitPair& slits,
                                       double t, double x_extent, const Tolerance& tol,
                                       int nodes_per_period = 12);

/// Spectral evaluation omega(x,t) = (1/pi) int_0^kmax cos(kx) e^{t sigma(k)}
/// omega0_hat(k) dk by composite Simpson. Throws DomainError for t <= 0.
Profile evolve_spectral(const NladParams& params, const SlitPair& slits, double t,
                        const Grid& grid, const Tolerance& tol = {});

/// Mass of the spectral solution over [-x_radius, x_radius], integrating the
/// representation exactly in x first:
///   (2/pi) int_0^kmax e^{t sigma(k)} omega0_hat(k) sin(k x_radius)/k dk.
/// Uses the same table and Simpson rule as evolve_spectral, so it exercises
/// the spectral pipeline without an x-grid.
double spectral_mass(const NladParams& params, const SlitPair& slits, double t,
                     double x_radius, const Tolerance& tol = {});

/// Sup-norm of the generator residual
///   (omega(., t+dt) - omega(., t))/dt - (alpha d^2/dx^2 + sum B_i) omega(., t)
/// with the time derivative from the factorized evolver and the spatial
/// operators from grid differences. O(dt) + O(dx^2).
double euler_step_residual(const NladParams& params, const SlitPair& slits,
                           const Profile& p, double dt, const Tolerance& tol = {});

}  // namespace slitfringe
