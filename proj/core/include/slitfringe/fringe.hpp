#pragma once

#include <utility>
#include <vector>

#include "slitfringe/types.hpp"

namespace slitfringe {

struct Extremum {
    double x;
    double value;
};

/// Classified local extrema of a profile inside a window. Minima and maxima
/// interleave when merged in x order.
struct ExtremaReport {
    std::vector<Extremum> minima;
    std::vector<Extremum> maxima;
    std::pair<double, double> window;
    bool refined = true;  // positions from 3-point quadratic fits
};

/// Sign-change detection on first differences with quadratic sub-grid
/// refinement; extrema whose prominence (value gap to the nearest neighboring
/// extremum) is below noise_floor are dropped.
/// Throws DomainError if the window is not inside the grid.
ExtremaReport find_extrema(const Profile& p, std::pair<double, double> window,
                           double noise_floor = 1e-9);

/// Consecutive-minima gap statistics.
struct SpacingStats {
    std::vector<double> gaps;
    double mean;
    double max_abs_dev;  // max |gap - mean|
};

/// Throws InsufficientDataError unless the report has >= 3 minima.
SpacingStats spacing_stats(const ExtremaReport& report);

/// Space-time dilation: v(x) = (1/m) p(x/m), linear interpolation between
/// samples. Mass-preserving. Throws DomainError if m <= 0 or any x/m falls
/// outside p's grid.
Profile dilate(const Profile& p, double m, const Grid& target_grid);

/// (sup |a-b|, trapezoid integral of |a-b|). Throws DomainError on grid
/// mismatch.
std::pair<double, double> compare(const Profile& a, const Profile& b);

/// Smallest local-minimum value of each profile inside the window
/// (omega first, rho second). Throws InsufficientDataError if either
/// profile has no minima there.
std::pair<double, double> second_phase_contrast(const Profile& omega, const Profile& rho,
                                                std::pair<double, double> window);

}  // namespace slitfringe
