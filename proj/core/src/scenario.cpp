#include "slitfringe/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "slitfringe/errors.hpp"
#include "slitfringe/fringe.hpp"
#include "slitfringe/nlad.hpp"

namespace slitfringe {

namespace {

constexpr double kPi = std::numbers::pi;

// Mass tolerances per method; a deviation beyond 100x these is a numeric
// failure.
constexpr double kMassTolFactorized = 1e-6;
constexpr double kMassTolSpectral = 1e-5;
constexpr double kMassTolSe = 1e-4;
constexpr double kPositivityFloor = -1e-8;

const std::vector<double> kDefaultTimes = {0.1, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void reject_unknown_keys(const nlohmann::json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return key == a;
            }) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

Method method_from_string(const std::string& name) {
    if (name == "se") return Method::se;
    if (name == "nlad_factorized") return Method::nlad_factorized;
    if (name == "nlad_spectral") return Method::nlad_spectral;
    throw ConfigError("unknown method '" + name + "'");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::se: return "se";
        case Method::nlad_factorized: return "nlad_factorized";
        case Method::nlad_spectral: return "nlad_spectral";
    }
    return "?";
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

double clipped_log10(double v) {
    if (!(v > 0.0)) return -300.0;
    return std::max(std::log10(v), -300.0);
}

}  // namespace

double ScenarioConfig::time_at(std::size_t i) const {
    return pi_units ? times.at(i) / kPi : times.at(i);
}

Grid ScenarioConfig::grid_for(double t) const {
    if (grid) return *grid;
    const double m = std::max(1.0, t * kPi);
    return Grid{-40.0 * m, 40.0 * m, 8001};
}

bool ScenarioConfig::has_method(Method m) const {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void ScenarioConfig::validate() const {
    if (!(slit_s > 0.0)) throw ConfigError("slits.s must be positive");
    if (!(slit_b > 0.0) || !(slit_b < slit_s)) throw ConfigError("slits.b must satisfy 0 < b < s");
    try {
        nlad.validate();
        tolerances.validate();
        if (grid) grid->validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (times.empty()) throw ConfigError("times must be nonempty");
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw ConfigError("times must be strictly increasing and positive");
        prev = t;
    }
    if (methods.empty()) throw ConfigError("methods must be nonempty");
    if (!dilation_factors.empty() && dilation_factors.size() != times.size()) {
        throw ConfigError("dilation_factors must pair with times");
    }
    for (double m : dilation_factors) {
        if (m != 0.0 && !(m >= 1.0)) {
            throw ConfigError("dilation_factors entries must be 0 (none) or >= 1");
        }
    }
}

ScenarioConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown_keys(j, "config",
                        {"slits", "nlad", "times", "pi_units", "grid", "methods",
                         "dilation_factors", "tolerances", "output_dir"});

    ScenarioConfig cfg;
    try {
        if (j.contains("slits")) {
            const auto& s = j["slits"];
            reject_unknown_keys(s, "slits", {"s", "b"});
            cfg.slit_s = s.value("s", cfg.slit_s);
            cfg.slit_b = s.value("b", cfg.slit_b);
        }
        if (j.contains("nlad")) {
            const auto& n = j["nlad"];
            reject_unknown_keys(n, "nlad", {"alpha", "levels"});
            if (n.contains("alpha")) cfg.nlad.alpha = n["alpha"].get<double>();
            if (n.contains("levels")) {
                cfg.nlad.levels.clear();
                for (const auto& lv : n["levels"]) {
                    reject_unknown_keys(lv, "nlad.levels", {"shift", "rate"});
                    cfg.nlad.levels.push_back(
                        {lv.at("shift").get<double>(), lv.at("rate").get<double>()});
                }
            }
        }
        cfg.pi_units = j.value("pi_units", true);
        if (j.contains("times")) {
            cfg.times = j["times"].get<std::vector<double>>();
            if (j.contains("dilation_factors")) {
                cfg.dilation_factors = j["dilation_factors"].get<std::vector<double>>();
            }
        } else {
            cfg.times = kDefaultTimes;
            if (j.contains("dilation_factors")) {
                cfg.dilation_factors = j["dilation_factors"].get<std::vector<double>>();
            } else if (cfg.pi_units) {
                // Default figure suite: second-phase times carry m = pi t.
                for (double t : cfg.times) cfg.dilation_factors.push_back(t > 1.0 ? t : 0.0);
            }
        }
        if (j.contains("grid")) {
            const auto& g = j["grid"];
            reject_unknown_keys(g, "grid", {"x_min", "x_max", "n"});
            cfg.grid = Grid{g.at("x_min").get<double>(), g.at("x_max").get<double>(),
                            g.at("n").get<std::size_t>()};
        }
        if (j.contains("methods")) {
            cfg.methods.clear();
            for (const auto& m : j["methods"]) {
                cfg.methods.push_back(method_from_string(m.get<std::string>()));
            }
        }
        if (j.contains("tolerances")) {
            const auto& t = j["tolerances"];
            reject_unknown_keys(t, "tolerances", {"abs_tol", "rel_tol", "tail_eps"});
            cfg.tolerances.abs_tol = t.value("abs_tol", cfg.tolerances.abs_tol);
            cfg.tolerances.rel_tol = t.value("rel_tol", cfg.tolerances.rel_tol);
            cfg.tolerances.tail_eps = t.value("tail_eps", cfg.tolerances.tail_eps);
        }
        if (j.contains("output_dir")) {
            cfg.output_dir = j["output_dir"].get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

namespace {

std::string csv_name(const ScenarioConfig& cfg, std::size_t i) {
    if (cfg.pi_units) return "profile_t" + fmt_short(cfg.times[i]) + "over_pi.csv";
    return "profile_t" + fmt_short(cfg.times[i]) + ".csv";
}

nlohmann::json extrema_json(const Profile& p) {
    nlohmann::json out;
    const double lo = std::max(0.2, p.grid.x_min);
    const double hi = std::min(8.8, p.grid.x_max);
    if (!(lo < hi)) return out;
    const ExtremaReport rep = find_extrema(p, {lo, hi});
    nlohmann::json minima = nlohmann::json::array();
    for (const auto& e : rep.minima) minima.push_back({{"x", e.x}, {"value", e.value}});
    out["minima"] = minima;
    if (rep.minima.size() >= 3) {
        const SpacingStats st = spacing_stats(rep);
        out["spacing"] = {{"mean", st.mean}, {"max_abs_dev", st.max_abs_dev}};
    }
    return out;
}

}  // namespace

RunSummary run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.output_dir);

    const SlitPair density{cfg.slit_s, cfg.slit_b, 1.0 / (4 * cfg.slit_b),
                           Normalization::density};
    const SlitPair amplitude{cfg.slit_s, cfg.slit_b, 1.0 / std::sqrt(4 * cfg.slit_b),
                             Normalization::amplitude};

    RunSummary summary;
    nlohmann::json times_json = nlohmann::json::array();

    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
        const double t = cfg.time_at(i);
        const Grid grid = cfg.grid_for(t);
        nlohmann::json entry;
        entry["t"] = t;
        entry["csv"] = csv_name(cfg, i);

        std::optional<Profile> se, fact, spec;
        if (cfg.has_method(Method::se)) se = rho_profile(amplitude, t, grid);
        if (cfg.has_method(Method::nlad_factorized)) {
            fact = evolve_factorized(cfg.nlad, density, t, grid, cfg.tolerances);
        }
        if (cfg.has_method(Method::nlad_spectral)) {
            spec = evolve_spectral(cfg.nlad, density, t, grid, cfg.tolerances);
        }

        // Conservation diagnostics live on padded domains: the plotting
        // window truncates slowly decaying tails (the wave model's momentum
        // tail, the nonlocal model's long displacements) by far more than the
        // mass tolerances.
        double pad_radius = 0.0;
        if (fact || spec) {
            const FactorizedEvolver ev(cfg.nlad, density, t, cfg.tolerances);
            pad_radius = std::max({ev.mass_radius(1e-7), std::fabs(grid.x_min),
                                   std::fabs(grid.x_max)});
        }
        auto padded_mass = [&](Method m) {
            switch (m) {
                case Method::se: return rho_mass(amplitude, t, kMassTolSe);
                case Method::nlad_spectral:
                    return spectral_mass(cfg.nlad, density, t, pad_radius, cfg.tolerances);
                case Method::nlad_factorized: {
                    const double dx = grid.dx();
                    auto n = static_cast<std::size_t>(std::ceil(2.0 * pad_radius / dx)) + 1;
                    if (n % 2 == 0) ++n;
                    const Grid padded{-pad_radius, pad_radius, n};
                    return mass(evolve_factorized(cfg.nlad, density, t, padded,
                                                  cfg.tolerances));
                }
            }
            return 0.0;
        };

        auto record = [&](const char* name, const Profile& p, double m, double mass_tol) {
            const double mn = *std::min_element(p.values.begin(), p.values.end());
            entry[name] = {{"mass", m}, {"min", mn}};
            const nlohmann::json ex = extrema_json(p);
            if (!ex.is_null()) entry[name]["extrema"] = ex;
            if (std::fabs(m - 1.0) > 100 * mass_tol) {
                summary.failures.push_back(std::string(name) + " mass deviation at t=" +
                                           fmt_short(t) + ": " + fmt17(m));
            }
            if (mn < kPositivityFloor && name != std::string("se")) {
                summary.failures.push_back(std::string(name) + " positivity violation at t=" +
                                           fmt_short(t) + ": " + fmt17(mn));
            }
        };
        if (se) record(method_name(Method::se), *se, padded_mass(Method::se), kMassTolSe);
        if (fact) {
            record(method_name(Method::nlad_factorized), *fact,
                   padded_mass(Method::nlad_factorized), kMassTolFactorized);
        }
        if (spec) {
            record(method_name(Method::nlad_spectral), *spec,
                   padded_mass(Method::nlad_spectral), kMassTolSpectral);
        }

        if (fact && spec) {
            const auto [sup, l1] = compare(*fact, *spec);
            entry["cross_method"] = {{"sup", sup}, {"l1", l1}};
        }

        const Profile* omega = fact ? &*fact : (spec ? &*spec : nullptr);
        std::optional<Profile> dilated;
        if (omega && !cfg.dilation_factors.empty() && cfg.dilation_factors[i] > 0.0) {
            dilated = dilate(*omega, cfg.dilation_factors[i], grid);
            entry["dilation_factor"] = cfg.dilation_factors[i];
            if (se) {
                const auto [sup, l1] = compare(*dilated, *se);
                entry["dilated_vs_se"] = {{"sup", sup}, {"l1", l1}};
            }
        } else if (omega && se) {
            const auto [sup, l1] = compare(*omega, *se);
            entry["nlad_vs_se"] = {{"sup", sup}, {"l1", l1}};
        }

        // CSV: fixed column order, absent when not computed.
        std::string csv = "x";
        if (se) csv += ",rho_se";
        if (omega) csv += ",omega_nlad";
        if (dilated) csv += ",omega_nlad_dilated";
        if (se) csv += ",log10_rho_se";
        if (omega) csv += ",log10_omega_nlad";
        csv += "\n";
        for (std::size_t k = 0; k < grid.n; ++k) {
            csv += fmt17(grid.x(k));
            if (se) csv += "," + fmt17(se->values[k]);
            if (omega) csv += "," + fmt17(omega->values[k]);
            if (dilated) csv += "," + fmt17(dilated->values[k]);
            if (se) csv += "," + fmt17(clipped_log10(se->values[k]));
            if (omega) csv += "," + fmt17(clipped_log10(omega->values[k]));
            csv += "\n";
        }
        write_atomic(cfg.output_dir / csv_name(cfg, i), csv);
        times_json.push_back(std::move(entry));
    }

    summary.ok = summary.failures.empty();
    summary.data["times"] = std::move(times_json);
    summary.data["ok"] = summary.ok;
    summary.data["failures"] = summary.failures;
    write_atomic(cfg.output_dir / "summary.json", summary.data.dump(2) + "\n");
    if (!summary.ok) {
        std::string text;
        for (const auto& f : summary.failures) text += f + "\n";
        write_atomic(cfg.output_dir / "FAILED", text);
    }
    return summary;
}

BoundsReport check_bounds(const ScenarioConfig& cfg,
                          const std::vector<std::pair<double, double>>& pairs) {
    const SlitPair amplitude{cfg.slit_s, cfg.slit_b, 1.0 / std::sqrt(4 * cfg.slit_b),
                             Normalization::amplitude};
    BoundsReport report;
    for (const auto& [t, T] : pairs) {
        const auto n = static_cast<std::size_t>(std::lround(80.0 / 0.02)) + 1;
        const Grid grid{-40.0 * t, 40.0 * t, n};
        report.reports.push_back(dilation_check(amplitude, t, T, grid));
        report.all_hold = report.all_hold && report.reports.back().holds();
    }
    return report;
}

}  // namespace slitfringe
