#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace slitfringe {

/// Whether the slit plateau height normalizes the density (NLAD omega_0,
/// integral of omega_0 = 1) or the amplitude (SE psi_0, integral of
/// |psi_0|^2 = 1).
enum class Normalization { density, amplitude };

/// Two rectangles of half-width b centered at +-s with the given plateau
/// height.
struct SlitPair {
    double s;       // center offset from the origin
    double b;       // half-width of each slit
    double height;  // plateau value on each slit
    Normalization mode = Normalization::density;

    /// Throws ParameterError unless s > 0, 0 < b < s, height > 0.
    void validate() const;

    /// psi_0 / omega_0 sampled at x (height/2 at the jump points).
    double initial_value(double x) const;
};

/// Standard geometry s = 1, b = 0.1 with height forced by the
/// normalization: 2.5 (density) or sqrt(2.5) (amplitude).
SlitPair standard_slits(Normalization mode = Normalization::density);

/// Uniform 1D sample grid on [x_min, x_max] with n points.
struct Grid {
    double x_min;
    double x_max;
    std::size_t n;

    void validate() const;  // throws ParameterError unless x_min < x_max, n >= 2
    double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
    double x(std::size_t i) const {
        return x_min + static_cast<double>(i) * dx();
    }
    bool operator==(const Grid&) const = default;
};

/// Real-valued density sampled on a grid at a fixed time.
struct Profile {
    Grid grid;
    std::vector<double> values;
    double time = 0.0;

    void validate() const;  // size match, finite values, time >= 0
};

/// Trapezoid-rule integral of the profile over its grid.
double mass(const Profile& p);

/// One nonlocal advection level: second-difference operator with the given
/// shift distance and rate.
struct NladLevel {
    double shift;
    double rate;
};

/// Diffusion coefficient plus the ordered list of nonlocal levels.
struct NladParams {
    double alpha;
    std::vector<NladLevel> levels;

    static constexpr std::size_t kMaxLevels = 8;

    /// Throws ParameterError unless alpha > 0, 1..kMaxLevels levels with
    /// strictly increasing positive shifts and nonnegative rates.
    void validate() const;
};

/// Standard parameters: alpha = 1/pi^3 and levels
/// (s, 1/(8 b^2)), (3s/(2b), pi/(2b 15^2)), (5s/(2b), pi/(2b 25^2))
/// for s = 1, b = 0.1, i.e. shifts (1, 15, 25).
NladParams standard_nlad_params();

/// The reduced Schroedinger coefficient hbar/2m; fixed to 1 in all shipped
/// scenarios.
struct SeParams {
    double scale = 1.0;
};

}  // namespace slitfringe
