#include "slitfringe/types.hpp"

#include <cmath>
#include <numbers>

#include "slitfringe/errors.hpp"

namespace slitfringe {

void SlitPair::validate() const {
    if (!(s > 0.0)) throw ParameterError("SlitPair: s must be positive");
    if (!(b > 0.0) || !(b < s)) throw ParameterError("SlitPair: need 0 < b < s");
    if (!(height > 0.0)) throw ParameterError("SlitPair: height must be positive");
}

double SlitPair::initial_value(double x) const {
    const double ax = std::fabs(x);
    if (ax == s - b || ax == s + b) return height / 2;
    return (ax > s - b && ax < s + b) ? height : 0.0;
}

SlitPair standard_slits(Normalization mode) {
    const double s = 1.0, b = 0.1;
    const double h = mode == Normalization::density ? 1.0 / (4 * b)
                                                    : 1.0 / std::sqrt(4 * b);
    return {s, b, h, mode};
}

void Grid::validate() const {
    if (!(x_min < x_max)) throw ParameterError("Grid: x_min must be < x_max");
    if (n < 2) throw ParameterError("Grid: need at least 2 points");
}

void Profile::validate() const {
    grid.validate();
    if (values.size() != grid.n) throw ParameterError("Profile: values/grid size mismatch");
    if (!(time >= 0.0)) throw ParameterError("Profile: time must be nonnegative");
    for (double v : values) {
        if (!std::isfinite(v)) throw ParameterError("Profile: non-finite value");
    }
}

double mass(const Profile& p) {
    const std::size_t n = p.values.size();
    if (n < 2) return 0.0;
    double acc = (p.values.front() + p.values.back()) / 2;
    for (std::size_t i = 1; i + 1 < n; ++i) acc += p.values[i];
    return acc * p.grid.dx();
}

void NladParams::validate() const {
    if (!(alpha > 0.0)) throw ParameterError("NladParams: alpha must be positive");
    if (levels.empty()) throw ParameterError("NladParams: need at least one level");
    if (levels.size() > kMaxLevels) throw ParameterError("NladParams: too many levels");
    double prev = 0.0;
    for (const auto& lv : levels) {
        if (!(lv.shift > prev)) {
            throw ParameterError("NladParams: shifts must be positive and strictly increasing");
        }
        if (!(lv.rate >= 0.0)) throw ParameterError("NladParams: rates must be nonnegative");
        prev = lv.shift;
    }
}

NladParams standard_nlad_params() {
    const double pi = std::numbers::pi;
    const double s = 1.0, b = 0.1;
    NladParams p;
    p.alpha = 1.0 / (pi * pi * pi);
    p.levels = {
        {s, 1.0 / (8 * b * b)},
        {3 * s / (2 * b), pi / (2 * b * 15 * 15)},
        {5 * s / (2 * b), pi / (2 * b * 25 * 25)},
    };
    return p;
}

}  // namespace slitfringe
