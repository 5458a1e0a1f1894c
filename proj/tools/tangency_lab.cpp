// Command-line front end: regenerates the spectrum tables, arc radius table,
// sphere profiles and toy point clouds as JSON/CSV under --out.

#include "tangency/cli_reports.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

json int_list(const std::string& s) {
    json a = json::array();
    for (const auto& t : split(s)) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != t.size()) throw CLI::ValidationError("list", "'" + t + "' is not an integer");
        a.push_back(v);
    }
    return a;
}

json family_list(const std::string& s) {
    if (s == "all") return json::array({"C0I", "C0II", "C1I", "C1II"});
    json a = json::array();
    for (const auto& t : split(s)) a.push_back(t);
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type I/II minima, Hessian spectra and tangency arcs of the two-layer ReLU loss"};
    app.require_subcommand(1);

    std::string out_dir = "out";
    std::string config_file;
    int seed = 0;
    int jobs = -1;
    app.add_option("--out", out_dir, "output directory (TANGENCY_LAB_OUT overrides)");
    app.add_option("--config", config_file, "JSON config; command-line flags take precedence");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--jobs", jobs, "worker threads (0 = one per cell)");

    // Per-command flags are stored as strings and folded into the JSON config.
    std::map<std::string, std::string> flags;
    std::map<std::string, bool> switches;
    auto opt = [&](CLI::App* sub, const std::string& name, const std::string& help) {
        sub->add_option("--" + name, flags[sub->get_name() + ":" + name], help);
    };

    auto* spectrum = app.add_subcommand("spectrum", "Hessian spectra with Puiseux predictions");
    opt(spectrum, "family", "comma-separated families or 'all'");
    opt(spectrum, "d", "comma-separated dimensions");
    spectrum->add_flag("--brute", switches["brute"], "add the dense-Hessian agreement row (d <= 12)");

    auto* arcs = app.add_subcommand("arcs", "tangency arc radius table");
    opt(arcs, "family", "comma-separated families or 'all'");
    opt(arcs, "d", "comma-separated dimensions");
    opt(arcs, "hooks", "comma-separated singleton counts of the ambient charts");
    for (const char* k : {"delta-r", "r-min", "r-max", "newton-tol", "cond-threshold"}) {
        opt(arcs, k, "trace setting");
    }

    auto* sphere = app.add_subcommand("sphere", "m(r) and M(r) profiles");
    opt(sphere, "family", "comma-separated families");
    opt(sphere, "d", "comma-separated dimensions");
    opt(sphere, "mode", "min, max or both");
    opt(sphere, "r-grid", "lo:hi radius range, log spaced");
    opt(sphere, "n-r", "number of radii");
    opt(sphere, "n-starts", "random starts per radius");
    opt(sphere, "hook", "singleton count of the ambient chart");

    auto* toy = app.add_subcommand("toy", "tangency point clouds of the planar example");
    opt(toy, "center", "all, max, saddle or min");
    opt(toy, "resolution", "grid cells per side");
    opt(toy, "extent", "half-width of the square grid");

    auto* minima = app.add_subcommand("minima", "refined critical points");
    opt(minima, "family", "comma-separated families or 'all'");
    opt(minima, "d", "comma-separated dimensions");
    minima->add_flag("--series", switches["series"], "also write the series coefficient table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json cfg = json::object();
    try {
        if (!config_file.empty()) {
            std::ifstream is(config_file);
            if (!is) throw std::runtime_error("cannot read " + config_file);
            cfg = json::parse(is);
        }
        auto given = [&](const std::string& name) {
            auto it = flags.find(command + ":" + name);
            return it != flags.end() && !it->second.empty() ? it->second : std::string();
        };
        if (app.get_option("--seed")->count()) cfg["seed"] = seed;
        if (app.get_option("--jobs")->count()) cfg["jobs"] = jobs;
        if (auto v = given("family"); !v.empty()) cfg["family"] = family_list(v);
        if (auto v = given("d"); !v.empty()) cfg["d"] = int_list(v);
        if (auto v = given("hooks"); !v.empty()) cfg["hooks"] = int_list(v);
        if (auto v = given("hook"); !v.empty()) cfg["hook"] = std::stoi(v);
        if (auto v = given("mode"); !v.empty()) cfg["mode"] = v;
        if (auto v = given("r-grid"); !v.empty()) cfg["r_grid"] = v;
        if (auto v = given("n-r"); !v.empty()) cfg["n_r"] = std::stoi(v);
        if (auto v = given("n-starts"); !v.empty()) cfg["n_starts"] = std::stoi(v);
        if (auto v = given("center"); !v.empty()) cfg["center"] = v;
        if (auto v = given("resolution"); !v.empty()) cfg["resolution"] = std::stoi(v);
        if (auto v = given("extent"); !v.empty()) cfg["extent"] = std::stod(v);
        const std::pair<const char*, const char*> trace_keys[] = {{"delta-r", "delta_r"},
                                                                  {"r-min", "r_min"},
                                                                  {"r-max", "r_max"},
                                                                  {"newton-tol", "newton_tol"},
                                                                  {"cond-threshold", "cond_threshold"}};
        for (const auto& [flag, key] : trace_keys) {
            if (auto v = given(flag); !v.empty()) cfg["trace"][key] = std::stod(v);
        }
        if (command == "spectrum" && switches["brute"]) cfg["brute"] = true;
        if (command == "minima" && switches["series"]) cfg["series"] = true;
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return 2;
    }

    if (const char* env = std::getenv("TANGENCY_LAB_OUT"); env && *env) out_dir = env;

    const auto result = tangency::reports::run(command, cfg, out_dir);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    if (result.exit_code != 0) {
        std::cerr << (result.exit_code == 2 ? "invalid config: " : "numerical failure: ") << result.message
                  << '\n';
    }
    return result.exit_code;
}
