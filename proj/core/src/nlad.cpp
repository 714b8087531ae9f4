#include "slitfringe/nlad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "slitfringe/errors.hpp"
#include "slitfringe/parallel.hpp"

namespace slitfringe {

namespace {

constexpr double kPi = std::numbers::pi;

// Index of the grid node hit by `shift`, or throws.
long commensurate_steps(const Grid& g, double shift) {
    const double ratio = shift / g.dx();
    const double rounded = std::round(ratio);
    if (std::fabs(shift - rounded * g.dx()) > 1e-12 * std::max(1.0, std::fabs(shift))) {
        throw GridError("shift is not commensurate with the grid");
    }
    return static_cast<long>(rounded);
}

double sample_or_zero(const Profile& p, long i) {
    if (i < 0 || i >= static_cast<long>(p.grid.n)) return 0.0;
    return p.values[static_cast<std::size_t>(i)];
}

// Linear interpolation of p at x, 0 outside the grid.
double interp_or_zero(const Profile& p, double x) {
    const double pos = (x - p.grid.x_min) / p.grid.dx();
    if (pos < 0.0 || pos > static_cast<double>(p.grid.n - 1)) return 0.0;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= p.grid.n) return p.values.back();
    const double frac = pos - static_cast<double>(i);
    return p.values[i] * (1.0 - frac) + p.values[i + 1] * frac;
}

void require_density(const SlitPair& slits) {
    if (slits.mode != Normalization::density) {
        throw ParameterError("expected density-mode slits");
    }
}

}  // namespace

Profile apply_difference(double level_shift, double level_rate, const Profile& p,
                         bool interpolate) {
    p.validate();
    if (!(level_shift > 0.0)) throw ParameterError("apply_difference: shift must be positive");
    Profile out{p.grid, std::vector<double>(p.grid.n), p.time};
    if (interpolate) {
        for (std::size_t i = 0; i < p.grid.n; ++i) {
            const double x = p.grid.x(i);
            out.values[i] = level_rate * (interp_or_zero(p, x + level_shift) -
                                          2 * p.values[i] + interp_or_zero(p, x - level_shift));
        }
    } else {
        const long m = commensurate_steps(p.grid, level_shift);
        for (std::size_t i = 0; i < p.grid.n; ++i) {
            const long k = static_cast<long>(i);
            out.values[i] = level_rate * (sample_or_zero(p, k + m) - 2 * p.values[i] +
                                          sample_or_zero(p, k - m));
        }
    }
    return out;
}

double integral_form_residual(double level_shift, double level_rate,
                              const Profile& test_profile) {
    const Profile diff = apply_difference(level_shift, level_rate, test_profile);
    const Grid& g = test_profile.grid;
    const long m = commensurate_steps(g, level_shift);
    const double dx = g.dx();

    // q(x_i) = rate * trapezoid of [p(x+u) - p(x-u)] over u in [0, shift].
    std::vector<double> q(g.n, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) {
        const long k = static_cast<long>(i);
        double acc = 0.0;
        for (long j = 0; j <= m; ++j) {
            const double v = sample_or_zero(test_profile, k + j) -
                             sample_or_zero(test_profile, k - j);
            acc += (j == 0 || j == m) ? v / 2 : v;
        }
        q[i] = level_rate * acc * dx;
    }

    double sup = 0.0;
    for (long i = m + 1; i + m + 1 < static_cast<long>(g.n); ++i) {
        const double dq = (q[static_cast<std::size_t>(i + 1)] -
                           q[static_cast<std::size_t>(i - 1)]) / (2 * dx);
        sup = std::max(sup, std::fabs(dq - diff.values[static_cast<std::size_t>(i)]));
    }
    return sup;
}

FactorizedEvolver::FactorizedEvolver(const NladParams& params, const SlitPair& slits,
                                     double t, const Tolerance& tol)
    : params_(params), slits_(slits), t_(t) {
    params.validate();
    slits.validate();
    require_density(slits);
    tol.validate();
    if (!(t >= 0.0)) throw ParameterError("FactorizedEvolver: t must be nonnegative");

    // Fold the per-level net-shift distributions into one displacement
    // distribution; coincident displacements merge (shifts 1/15/25 overlap a
    // lot). Fixed iteration order keeps the sums bit-reproducible.
    std::map<double, double> folded{{0.0, 1.0}};
    for (const auto& lv : params.levels) {
        const ShiftWeights w = shift_weights(lv.rate * t, tol.tail_eps);
        std::map<double, double> next;
        for (const auto& [delta, weight] : folded) {
            for (long j = -w.half_width; j <= w.half_width; ++j) {
                next[delta + static_cast<double>(j) * lv.shift] += weight * w.at(j);
            }
        }
        folded.swap(next);
    }
    displacements_.reserve(folded.size());
    weights_.reserve(folded.size());
    for (const auto& [delta, weight] : folded) {
        displacements_.push_back(delta);
        weights_.push_back(weight);
    }
}

double FactorizedEvolver::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < displacements_.size(); ++i) {
        const double xd = x + displacements_[i];
        acc += weights_[i] *
               (heat_step(-slits_.s, slits_.b, slits_.height, params_.alpha, t_, xd) +
                heat_step(slits_.s, slits_.b, slits_.height, params_.alpha, t_, xd));
    }
    return acc;
}

Profile evolve_factorized(const NladParams& params, const SlitPair& slits, double t,
                          const Grid& grid, const Tolerance& tol) {
    grid.validate();
    const FactorizedEvolver ev(params, slits, t, tol);
    Profile p{grid, std::vector<double>(grid.n), t};
    parallel_for(grid.n, [&](std::size_t i) { p.values[i] = ev(grid.x(i)); });
    return p;
}

double multiplier_symbol(const NladParams& params, double k) {
    double sigma = -params.alpha * k * k;
    for (const auto& lv : params.levels) {
        sigma -= 2 * lv.rate * (1.0 - std::cos(k * lv.shift));
    }
    return sigma;
}

double initial_transform(const SlitPair& slits, double k) {
    const double sinc = k == 0.0 ? slits.b : std::sin(k * slits.b) / k;
    return 2 * slits.height * (2 * sinc) * std::cos(k * slits.s);
}

MultiplierTable build_multiplier_table(const NladParams& params, const SlitPair& slits,
                                       double t, double x_extent, const Tolerance& tol,
                                       int nodes_per_period) {
    params.validate();
    slits.validate();
    tol.validate();
    if (!(t > 0.0)) throw DomainError("build_multiplier_table: t must be positive");

    // e^{t sigma(k)} <= e^{-alpha t k^2}, so this k_max bounds the tail.
    const double k_max = std::sqrt(-std::log(tol.tail_eps) / (params.alpha * t));
    const double fastest = std::max({std::fabs(x_extent), params.levels.back().shift,
                                     slits.s, 1.0});
    double dk = 2 * kPi / (nodes_per_period * fastest);
    auto n = static_cast<std::size_t>(std::ceil(k_max / dk));
    n = std::max<std::size_t>(n + (n % 2), 64);  // Simpson needs an even count
    dk = k_max / static_cast<double>(n);

    MultiplierTable table{k_max, dk, std::vector<double>(n + 1), std::vector<double>(n + 1)};
    for (std::size_t i = 0; i <= n; ++i) {
        const double k = static_cast<double>(i) * dk;
        table.symbol_values[i] = multiplier_symbol(params, k);
        table.transform_values[i] = initial_transform(slits, k);
    }
    return table;
}

Profile evolve_spectral(const NladParams& params, const SlitPair& slits, double t,
                        const Grid& grid, const Tolerance& tol) {
    grid.validate();
    require_density(slits);
    const double x_extent = std::max(std::fabs(grid.x_min), std::fabs(grid.x_max));
    const MultiplierTable table = build_multiplier_table(params, slits, t, x_extent, tol);

    // Simpson-weighted integrand values; cos(kx) is applied per point below.
    const std::size_t nk = table.symbol_values.size();
    std::vector<double> g(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        double w = (i == 0 || i + 1 == nk) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        g[i] = w * std::exp(t * table.symbol_values[i]) * table.transform_values[i];
    }
    const double scale = table.dk / 3.0 / kPi;

    Profile p{grid, std::vector<double>(grid.n), t};
    parallel_for(grid.n, [&](std::size_t ix) {
        const double x = grid.x(ix);
        // cos(k_i x) by rotation recurrence over the uniform k-grid.
        const double cd = std::cos(table.dk * x), sd = std::sin(table.dk * x);
        double c = 1.0, s = 0.0;
        double acc = g[0];
        for (std::size_t i = 1; i < nk; ++i) {
            const double cn = c * cd - s * sd;
            s = s * cd + c * sd;
            c = cn;
            acc += g[i] * c;
        }
        p.values[ix] = acc * scale;
    });
    return p;
}

double FactorizedEvolver::mass_radius(double mass_tail) const {
    if (!(mass_tail > 0.0 && mass_tail < 1.0)) {
        throw ParameterError("mass_radius: mass_tail must be in (0, 1)");
    }
    // Displacements are stored with their folded weights; walk inward from
    // the largest |displacement| until the excluded weight would exceed the
    // budget. Each excluded term can place at most its full weight outside.
    std::vector<std::size_t> order(displacements_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(displacements_[a]) > std::fabs(displacements_[b]);
    });
    double excluded = 0.0;
    double radius = 0.0;
    for (std::size_t i : order) {
        if (excluded + weights_[i] > mass_tail / 2.0) {
            radius = std::fabs(displacements_[i]);
            break;
        }
        excluded += weights_[i];
    }
    // slit extent plus a heat-kernel margin (8 sigma leaves < 1e-15 outside)
    return radius + slits_.s + slits_.b + 8.0 * std::sqrt(2.0 * params_.alpha * t_);
}

double spectral_mass(const NladParams& params, const SlitPair& slits, double t,
                     double x_radius, const Tolerance& tol) {
    require_density(slits);
    if (!(x_radius > 0.0)) throw DomainError("spectral_mass: x_radius must be positive");
    const MultiplierTable table = build_multiplier_table(params, slits, t, x_radius, tol);
    const std::size_t nk = table.symbol_values.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < nk; ++i) {
        const double w = (i == 0 || i + 1 == nk) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double k = static_cast<double>(i) * table.dk;
        const double kernel = i == 0 ? x_radius : std::sin(k * x_radius) / k;
        acc += w * std::exp(t * table.symbol_values[i]) * table.transform_values[i] * kernel;
    }
    return acc * table.dk / 3.0 * 2.0 / kPi;
}

double euler_step_residual(const NladParams& params, const SlitPair& slits,
                           const Profile& p, double dt, const Tolerance& tol) {
    p.validate();
    if (!(p.time > 0.0)) throw DomainError("euler_step_residual: profile time must be positive");
    if (!(dt > 0.0) || dt > 1e-3) throw ParameterError("euler_step_residual: dt must be in (0, 1e-3]");

    const Profile next = evolve_factorized(params, slits, p.time + dt, p.grid, tol);

    // Spatial generator on the grid: alpha second difference + level operators.
    std::vector<double> gen(p.grid.n, 0.0);
    const double dx2 = p.grid.dx() * p.grid.dx();
    for (std::size_t i = 1; i + 1 < p.grid.n; ++i) {
        gen[i] = params.alpha * (p.values[i + 1] - 2 * p.values[i] + p.values[i - 1]) / dx2;
    }
    for (const auto& lv : params.levels) {
        const Profile d = apply_difference(lv.shift, lv.rate, p);
        for (std::size_t i = 0; i < p.grid.n; ++i) gen[i] += d.values[i];
    }

    // Restrict to points whose stencils stay inside the grid: zero-filled
    // out-of-range reads would otherwise dominate the sup near the edges.
    std::size_t margin = 1;
    for (const auto& lv : params.levels) {
        margin = std::max(margin,
                          static_cast<std::size_t>(std::lround(lv.shift / p.grid.dx())));
    }
    if (2 * margin + 2 >= p.grid.n) {
        throw GridError("euler_step_residual: grid too small for the level shifts");
    }
    double sup = 0.0;
    for (std::size_t i = margin + 1; i + margin + 1 < p.grid.n; ++i) {
        const double dot = (next.values[i] - p.values[i]) / dt;
        sup = std::max(sup, std::fabs(dot - gen[i]));
    }
    return sup;
}

}  // namespace slitfringe
