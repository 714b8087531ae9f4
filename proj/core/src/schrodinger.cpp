#include "slitfringe/schrodinger.hpp"

#include <cmath>
#include <numbers>

#include "slitfringe/errors.hpp"
#include "slitfringe/numerics.hpp"
#include "slitfringe/parallel.hpp"

namespace slitfringe {

namespace {
constexpr double kPi = std::numbers::pi;

void require_amplitude(const SlitPair& slits) {
    if (slits.mode != Normalization::amplitude) {
        throw ParameterError("expected amplitude-mode slits");
    }
}
}  // namespace

std::pair<double, double> psi0_moments(const SlitPair& slits) {
    slits.validate();
    const double m0 = 4 * slits.b * slits.height;
    const double hi = slits.s + slits.b, lo = slits.s - slits.b;
    const double m2 = 2 * slits.height / 3 * (hi * hi * hi - lo * lo * lo);
    return {m0, m2};
}

Amplitude psi(const SlitPair& slits, double t, double x) {
    if (!(t > 0.0)) throw DomainError("psi: t must be positive");
    require_amplitude(slits);
    const double r = std::sqrt(kPi * t);
    double dc = 0.0, ds = 0.0;
    for (double c : {-slits.s, slits.s}) {
        const auto a = fresnel((c - slits.b - x) / r);
        const auto b = fresnel((c + slits.b - x) / r);
        dc += b.c - a.c;
        ds += b.s - a.s;
    }
    // prefactor 1/sqrt(2 pi i t) = (1-i)/(2 sqrt(pi t)); the sqrt(pi t) from
    // the substitution cancels it.
    const double h2 = slits.height / 2;
    return {h2 * (dc + ds), h2 * (ds - dc)};
}

double rho(const SlitPair& slits, double t, double x) {
    return psi(slits, t, x).norm_sq();
}

Profile rho_profile(const SlitPair& slits, double t, const Grid& grid) {
    grid.validate();
    if (!(t > 0.0)) throw DomainError("rho_profile: t must be positive");
    require_amplitude(slits);
    Profile p{grid, std::vector<double>(grid.n), t};
    parallel_for(grid.n, [&](std::size_t i) {
        p.values[i] = rho(slits, t, grid.x(i));
    });
    return p;
}

double rho_mass(const SlitPair& slits, double t, double tail_budget) {
    if (!(t > 0.0)) throw DomainError("rho_mass: t must be positive");
    if (!(tail_budget > 0.0 && tail_budget < 1.0)) {
        throw ParameterError("rho_mass: tail_budget must lie in (0, 1)");
    }
    require_amplitude(slits);
    const double h2 = slits.height * slits.height;
    // Spend half the budget on truncation; the envelope bound gives the radius.
    const double radius = 8.0 * h2 * t / (kPi * tail_budget);
    // ~100 samples per slit-separation fringe (wavelength pi*t/s).
    const double dx = kPi * t / (100.0 * slits.s);
    auto n = static_cast<std::size_t>(std::ceil(2.0 * radius / dx)) + 1;
    if (n > 50'000'000) {
        throw ResourceError("rho_mass: requested budget needs too fine a grid");
    }
    if (n % 2 == 0) ++n;
    return mass(rho_profile(slits, t, Grid{-radius, radius, n}));
}

DilationReport dilation_check(const SlitPair& slits, double t, double T, const Grid& grid) {
    if (!(t >= 1.0)) throw DomainError("dilation_check: t must be >= 1");
    if (!(T > 0.0)) throw DomainError("dilation_check: T must be positive");
    grid.validate();
    const auto [m0, m2] = psi0_moments(slits);
    DilationReport rep{t, T, 0.0, std::sqrt(2.0) / (kPi * t * T * T) * m2 * m0, m0, m2};
    std::vector<double> diffs(grid.n);
    parallel_for(grid.n, [&](std::size_t i) {
        const double x = grid.x(i);
        diffs[i] = std::fabs(rho(slits, t * T, x) - rho(slits, T, x / t) / t);
    });
    for (double d : diffs) rep.lhs_sup = std::max(rep.lhs_sup, d);
    return rep;
}

double asymptotic_limit(const SlitPair& slits) {
    require_amplitude(slits);
    const auto [m0, m2] = psi0_moments(slits);
    (void)m2;
    return m0 * m0 / (2 * kPi);
}

}  // namespace slitfringe
