// Command-line front end: scenario runs, extrema reports, dilation-bound
// checks, and profile comparison over the CSV outputs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slitfringe/errors.hpp"
#include "slitfringe/fringe.hpp"
#include "slitfringe/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw slitfringe::ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // per column

    const std::vector<double>& column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == name) return data[i];
        }
        throw slitfringe::ConfigError("no column '" + name + "' in CSV");
    }
    bool has(const std::string& name) const {
        for (const auto& c : columns) {
            if (c == name) return true;
        }
        return false;
    }
};

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw slitfringe::ConfigError("cannot read " + path);
    Csv csv;
    std::string line;
    if (!std::getline(in, line)) throw slitfringe::ConfigError("empty CSV " + path);
    std::stringstream head(line);
    std::string cell;
    while (std::getline(head, cell, ',')) csv.columns.push_back(cell);
    csv.data.resize(csv.columns.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::size_t i = 0;
        while (std::getline(row, cell, ',')) {
            if (i >= csv.columns.size()) throw slitfringe::ConfigError("ragged CSV row");
            csv.data[i++].push_back(std::strtod(cell.c_str(), nullptr));
        }
    }
    return csv;
}

slitfringe::Profile profile_from_csv(const Csv& csv, const std::string& column) {
    const auto& xs = csv.column("x");
    if (xs.size() < 2) throw slitfringe::ConfigError("CSV has fewer than 2 rows");
    slitfringe::Profile p{{xs.front(), xs.back(), xs.size()}, csv.column(column), 0.0};
    p.validate();
    return p;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    slitfringe::ScenarioConfig cfg = slitfringe::parse_config(slurp(config_path));
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    const slitfringe::RunSummary summary = slitfringe::run_scenario(cfg);
    std::cout << "wrote " << cfg.output_dir.string() << "/summary.json\n";
    if (!summary.ok) {
        for (const auto& f : summary.failures) std::cerr << "numeric failure: " << f << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int cmd_extrema(const std::string& csv_path, const std::string& column,
                const std::string& window_spec) {
    const auto sep = window_spec.find(':');
    if (sep == std::string::npos) {
        throw slitfringe::ConfigError("--window must be <lo>:<hi>");
    }
    const double lo = std::strtod(window_spec.substr(0, sep).c_str(), nullptr);
    const double hi = std::strtod(window_spec.substr(sep + 1).c_str(), nullptr);
    const slitfringe::Profile p = profile_from_csv(read_csv(csv_path), column);
    const slitfringe::ExtremaReport rep = slitfringe::find_extrema(p, {lo, hi});

    nlohmann::json out;
    for (const auto* list : {&rep.minima, &rep.maxima}) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : *list) arr.push_back({{"x", e.x}, {"value", e.value}});
        out[list == &rep.minima ? "minima" : "maxima"] = arr;
    }
    if (rep.minima.size() >= 3) {
        const auto st = slitfringe::spacing_stats(rep);
        out["spacing"] = {{"mean", st.mean}, {"max_abs_dev", st.max_abs_dev}};
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_check_bounds(const std::string& config_path, const std::string& pairs_spec) {
    std::vector<std::pair<double, double>> pairs;
    std::stringstream ss(pairs_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto sep = item.find(':');
        if (sep == std::string::npos) {
            throw slitfringe::ConfigError("--pairs must be t:T[,t:T...]");
        }
        pairs.emplace_back(std::strtod(item.substr(0, sep).c_str(), nullptr),
                           std::strtod(item.substr(sep + 1).c_str(), nullptr));
    }
    if (pairs.empty()) throw slitfringe::ConfigError("no (t, T) pairs given");

    const slitfringe::ScenarioConfig cfg =
        config_path.empty() ? slitfringe::ScenarioConfig{}
                            : slitfringe::parse_config(slurp(config_path));
    const slitfringe::BoundsReport report = slitfringe::check_bounds(cfg, pairs);
    for (const auto& r : report.reports) {
        std::cout << "t=" << r.t << " T=" << r.T << " lhs_sup=" << r.lhs_sup
                  << " rhs_bound=" << r.rhs_bound << " -> "
                  << (r.holds() ? "holds" : "VIOLATED") << "\n";
    }
    std::cout << (report.all_hold ? "all bounds hold" : "bound violated") << "\n";
    return report.all_hold ? kExitOk : kExitNumeric;
}

int cmd_compare(const std::string& a_path, const std::string& b_path) {
    const Csv a = read_csv(a_path);
    const Csv b = read_csv(b_path);
    bool any = false;
    for (const auto& col : a.columns) {
        if (col == "x" || !b.has(col)) continue;
        const auto pa = profile_from_csv(a, col);
        const auto pb = profile_from_csv(b, col);
        const auto [sup, l1] = slitfringe::compare(pa, pb);
        std::cout << col << ": sup_diff=" << sup << " l1_diff=" << l1 << "\n";
        any = true;
    }
    if (!any) throw slitfringe::ConfigError("no shared value columns to compare");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-slit SE vs NLAD simulation suite"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    auto* simulate = app.add_subcommand("simulate", "Run a scenario and emit CSV + summary");
    simulate->add_option("--config", config_path, "Scenario JSON path")->required();
    simulate->add_option("--out", out_dir, "Output directory override");

    std::string csv_path, column, window_spec;
    auto* extrema = app.add_subcommand("extrema", "Report extrema of a CSV column");
    extrema->add_option("--in", csv_path, "Input CSV")->required();
    extrema->add_option("--column", column, "Column name")->required();
    extrema->add_option("--window", window_spec, "Window lo:hi")->required();

    std::string bounds_config, pairs_spec;
    auto* bounds = app.add_subcommand("check-bounds", "Verify the dilation inequality");
    bounds->add_option("--config", bounds_config, "Scenario JSON path (optional)");
    bounds->add_option("--pairs", pairs_spec, "Pairs t:T,t:T,...")->required();

    std::string a_path, b_path;
    auto* cmp = app.add_subcommand("compare", "Compare shared columns of two CSVs");
    cmp->add_option("--a", a_path, "First CSV")->required();
    cmp->add_option("--b", b_path, "Second CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(config_path, out_dir);
        if (extrema->parsed()) return cmd_extrema(csv_path, column, window_spec);
        if (bounds->parsed()) return cmd_check_bounds(bounds_config, pairs_spec);
        if (cmp->parsed()) return cmd_compare(a_path, b_path);
    } catch (const slitfringe::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
