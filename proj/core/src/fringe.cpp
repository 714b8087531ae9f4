#include "slitfringe/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slitfringe/errors.hpp"

namespace slitfringe {

namespace {

struct RawExtremum {
    double x;
    double value;
    bool is_max;
};

// Linear interpolation inside the grid; caller guarantees range.
double interp(const Profile& p, double x) {
    const double pos = (x - p.grid.x_min) / p.grid.dx();
    const auto i = std::min(static_cast<std::size_t>(std::max(pos, 0.0)), p.grid.n - 2);
    const double frac = pos - static_cast<double>(i);
    return p.values[i] * (1.0 - frac) + p.values[i + 1] * frac;
}

}  // namespace

ExtremaReport find_extrema(const Profile& p, std::pair<double, double> window,
                           double noise_floor) {
    p.validate();
    const auto [lo, hi] = window;
    if (!(lo < hi) || lo < p.grid.x_min - 1e-12 || hi > p.grid.x_max + 1e-12) {
        throw DomainError("find_extrema: window outside profile grid");
    }
    if (!(noise_floor >= 0.0)) throw DomainError("find_extrema: negative noise floor");

    const double dx = p.grid.dx();
    std::vector<RawExtremum> raw;
    int last_sign = 0;
    for (std::size_t i = 1; i < p.grid.n; ++i) {
        const double d = p.values[i] - p.values[i - 1];
        const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) {
            const std::size_t c = i - 1;  // cell where the slope turned
            if (c >= 1 && c + 1 < p.grid.n) {
                const double vm = p.values[c - 1], v0 = p.values[c], vp = p.values[c + 1];
                const double a = (vp - 2 * v0 + vm) / 2;
                const double b = (vp - vm) / 2;
                double off = 0.0, val = v0;
                if (a != 0.0) {
                    off = std::clamp(-b / (2 * a), -1.0, 1.0);
                    val = v0 + b * off + a * off * off;
                }
                const double x = p.grid.x(c) + off * dx;
                if (x >= lo && x <= hi) raw.push_back({x, val, last_sign > 0});
            }
        }
        last_sign = sign;
    }

    // Drop low-prominence ripple pairwise so the survivors still interleave.
    bool removed = true;
    while (removed && raw.size() >= 2) {
        removed = false;
        double best_gap = std::numeric_limits<double>::infinity();
        std::size_t best = 0;
        for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
            const double gap = std::fabs(raw[i + 1].value - raw[i].value);
            if (gap < best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best_gap < noise_floor) {
            raw.erase(raw.begin() + static_cast<long>(best),
                      raw.begin() + static_cast<long>(best) + 2);
            removed = true;
        }
    }

    // A lone survivor of the pairwise pass has no partner; judge its
    // prominence against the profile at the window edges instead.
    if (raw.size() == 1 &&
        std::fabs(raw[0].value - interp(p, lo)) < noise_floor &&
        std::fabs(raw[0].value - interp(p, hi)) < noise_floor) {
        raw.clear();
    }

    ExtremaReport report;
    report.window = window;
    for (const auto& e : raw) {
        (e.is_max ? report.maxima : report.minima).push_back({e.x, e.value});
    }
    return report;
}

SpacingStats spacing_stats(const ExtremaReport& report) {
    if (report.minima.size() < 3) {
        throw InsufficientDataError("spacing_stats: need at least 3 minima");
    }
    SpacingStats stats;
    for (std::size_t i = 1; i < report.minima.size(); ++i) {
        stats.gaps.push_back(report.minima[i].x - report.minima[i - 1].x);
    }
    double sum = 0.0;
    for (double g : stats.gaps) sum += g;
    stats.mean = sum / static_cast<double>(stats.gaps.size());
    stats.max_abs_dev = 0.0;
    for (double g : stats.gaps) {
        stats.max_abs_dev = std::max(stats.max_abs_dev, std::fabs(g - stats.mean));
    }
    return stats;
}

Profile dilate(const Profile& p, double m, const Grid& target_grid) {
    p.validate();
    target_grid.validate();
    if (!(m > 0.0)) throw DomainError("dilate: factor must be positive");
    Profile out{target_grid, std::vector<double>(target_grid.n), p.time};
    for (std::size_t i = 0; i < target_grid.n; ++i) {
        const double xs = target_grid.x(i) / m;
        if (xs < p.grid.x_min - 1e-12 || xs > p.grid.x_max + 1e-12) {
            throw DomainError("dilate: rescaled point outside source grid");
        }
        out.values[i] = interp(p, xs) / m;
    }
    return out;
}

std::pair<double, double> compare(const Profile& a, const Profile& b) {
    if (a.grid != b.grid) throw DomainError("compare: grid mismatch");
    double sup = 0.0;
    Profile absdiff{a.grid, std::vector<double>(a.grid.n), a.time};
    for (std::size_t i = 0; i < a.grid.n; ++i) {
        absdiff.values[i] = std::fabs(a.values[i] - b.values[i]);
        sup = std::max(sup, absdiff.values[i]);
    }
    return {sup, mass(absdiff)};
}

std::pair<double, double> second_phase_contrast(const Profile& omega, const Profile& rho,
                                                std::pair<double, double> window) {
    const auto min_of_minima = [&](const Profile& p) {
        const ExtremaReport rep = find_extrema(p, window);
        if (rep.minima.empty()) {
            throw InsufficientDataError("second_phase_contrast: no minima in window");
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : rep.minima) best = std::min(best, e.value);
        return best;
    };
    return {min_of_minima(omega), min_of_minima(rho)};
}

}  // namespace slitfringe
