#include "slitfringe/numerics.hpp"

#include <cmath>
#include <numbers>

#include "slitfringe/errors.hpp"

namespace slitfringe {

namespace {

#include "fresnel_coeffs.inc"

constexpr double kPi = std::numbers::pi;

// Power series on |z| <= kFresnelAuxZlo.
FresnelValue fresnel_series(double z) {
    const double z2 = z * z;
    const double q = (kPi / 2) * z2;  // pi z^2 / 2
    const double q2 = -q * q;

    // C: sum b_n / (4n+1), b_n = (pi/2)^(2n) z^(4n+1) / (2n)!
    double b = z;
    double c = b;
    for (int n = 0; n < 40; ++n) {
        b *= q2 / ((2.0 * n + 1) * (2.0 * n + 2));
        const double term = b / (4.0 * n + 5);
        c += term;
        if (std::fabs(term) < 1e-18 * std::fabs(c)) break;
    }
    // S: sum b_n / (4n+3), b_n = (pi/2)^(2n+1) z^(4n+3) / (2n+1)!
    b = q * z;
    double s = b / 3;
    for (int n = 0; n < 40; ++n) {
        b *= q2 / ((2.0 * n + 2) * (2.0 * n + 3));
        const double term = b / (4.0 * n + 7);
        s += term;
        if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
    }
    return {c, s};
}

double clenshaw(const double* coeffs, std::size_t n, double xi) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = n; i-- > 1;) {
        const double t = 2 * xi * b1 - b2 + coeffs[i];
        b2 = b1;
        b1 = t;
    }
    return xi * b1 - b2 + coeffs[0];
}

// Auxiliary f, g for z >= kFresnelAuxZlo.
void fresnel_aux(double z, double& f, double& g) {
    if (z <= kFresnelAuxZhi) {
        const double w = 1.0 / (z * z);
        const double xi = (2 * w - kFresnelAuxWlo - kFresnelAuxWhi) /
                          (kFresnelAuxWhi - kFresnelAuxWlo);
        f = clenshaw(kFresnelAuxF, std::size(kFresnelAuxF), xi) / (kPi * z);
        g = clenshaw(kFresnelAuxG, std::size(kFresnelAuxG), xi) / (kPi * kPi * z * z * z);
        return;
    }
    // Asymptotic series in 1/(pi z^2)^2, truncated at the smallest term.
    const double x2 = 1.0 / ((kPi * z * z) * (kPi * z * z));
    double fa = 1.0, fterm = 1.0;
    double ga = 1.0, gterm = 1.0;
    for (int m = 0; m < 20; ++m) {
        const double fnext = fterm * (4.0 * m + 1) * (4.0 * m + 3) * x2;
        const double gnext = gterm * (4.0 * m + 3) * (4.0 * m + 5) * x2;
        if (fnext >= fterm || fnext < 1e-18) {
            if (fnext < fterm) {
                fa += (m % 2 == 0 ? -fnext : fnext);
                ga += (m % 2 == 0 ? -gnext : gnext);
            }
            break;
        }
        fterm = fnext;
        gterm = gnext;
        fa += (m % 2 == 0 ? -fterm : fterm);
        ga += (m % 2 == 0 ? -gterm : gterm);
    }
    f = fa / (kPi * z);
    g = ga / (kPi * kPi * z * z * z);
}

}  // namespace

void Tolerance::validate() const {
    for (double v : {abs_tol, rel_tol, tail_eps}) {
        if (!(v > 0.0) || v > 1e-2) {
            throw ParameterError("Tolerance fields must lie in (0, 1e-2]");
        }
    }
}

FresnelValue fresnel(double z) {
    if (!std::isfinite(z)) throw DomainError("fresnel: non-finite argument");
    const double az = std::fabs(z);
    FresnelValue v;
    if (az <= kFresnelAuxZlo) {
        v = fresnel_series(az);
    } else {
        double f, g;
        fresnel_aux(az, f, g);
        const double theta = kPi / 2 * az * az;
        const double st = std::sin(theta), ct = std::cos(theta);
        v = {0.5 + f * st - g * ct, 0.5 - f * ct - g * st};
    }
    if (z < 0) {
        v.c = -v.c;
        v.s = -v.s;
    }
    return v;
}

double erf_checked(double z) {
    if (!std::isfinite(z)) throw DomainError("erf: non-finite argument");
    return std::erf(z);
}

double heat_step(double center, double half_width, double height, double sigma,
                 double t, double x) {
    if (!(sigma > 0.0)) throw ParameterError("heat_step: sigma must be positive");
    if (!(half_width > 0.0)) throw ParameterError("heat_step: half_width must be positive");
    if (!(height >= 0.0)) throw ParameterError("heat_step: height must be nonnegative");
    if (!(t >= 0.0)) throw ParameterError("heat_step: t must be nonnegative");
    const double lo = center - half_width;
    const double hi = center + half_width;
    if (t == 0.0) {
        if (x == lo || x == hi) return height / 2;
        return (x > lo && x < hi) ? height : 0.0;
    }
    const double denom = 2.0 * std::sqrt(sigma * t);
    return height / 2 * (std::erf((x - lo) / denom) - std::erf((x - hi) / denom));
}

double ShiftWeights::sum() const {
    double acc = 0.0;
    for (double w : weights) acc += w;
    return acc;
}

namespace {

// w_j for j >= 0 at x = beta t: e^{-2x} sum_n x^{j+2n} / ((j+n)! n!).
double net_shift_weight(long j, double x) {
    if (x == 0.0) return j == 0 ? 1.0 : 0.0;
    // Leading term in log space; the recurrence then stays well scaled.
    double term = std::exp(static_cast<double>(j) * std::log(x) -
                           std::lgamma(static_cast<double>(j) + 1) - 2.0 * x);
    double sum = term;
    const double x2 = x * x;
    const long n_max = static_cast<long>(4 * x) + 400;
    for (long n = 0; n < n_max; ++n) {
        const double denom = static_cast<double>(j + n + 1) * static_cast<double>(n + 1);
        term *= x2 / denom;
        sum += term;
        if (term == 0.0 || (denom > x2 && term <= 1e-18 * sum)) break;
    }
    return sum;
}

}  // namespace

ShiftWeights shift_weights(double rate_time, double tail_eps, long hard_cap) {
    if (!(rate_time >= 0.0)) throw ParameterError("shift_weights: rate_time must be >= 0");
    if (!(tail_eps > 0.0) || tail_eps >= 1e-3) {
        throw ParameterError("shift_weights: tail_eps must lie in (0, 1e-3)");
    }
    // The net-shift distribution has standard deviation sqrt(2 x), so J can
    // never come in under that; refuse absurd rates before doing any work.
    if (std::sqrt(2.0 * rate_time) > static_cast<double>(hard_cap)) {
        throw ResourceError("shift_weights: half-width exceeds hard cap");
    }
    ShiftWeights out;
    out.rate_time = rate_time;
    std::vector<double> half;  // w_0, w_1, ..., w_J
    half.push_back(net_shift_weight(0, rate_time));
    double covered = half[0];
    long j = 0;
    while (1.0 - covered >= tail_eps) {
        ++j;
        if (j > hard_cap) throw ResourceError("shift_weights: half-width exceeds hard cap");
        half.push_back(net_shift_weight(j, rate_time));
        covered += 2.0 * half.back();
    }
    out.half_width = j;
    out.weights.resize(static_cast<std::size_t>(2 * j + 1));
    for (long i = -j; i <= j; ++i) {
        out.weights[static_cast<std::size_t>(i + j)] = half[static_cast<std::size_t>(std::labs(i))];
    }
    return out;
}

}  // namespace slitfringe
