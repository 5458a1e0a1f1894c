#include "tangency/cli_reports.hpp"

#include "tangency/errors.hpp"
#include "tangency/hessian_spectrum.hpp"
#include "tangency/minima_atlas.hpp"
#include "tangency/tangency_tracer.hpp"
#include "tangency/toy_b2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tangency::reports {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<Family> families_of(const json& cfg) {
    std::vector<Family> out;
    for (const auto& name : cfg.at("family")) out.push_back(family_from_string(name.get<std::string>()));
    return out;
}

std::vector<int> ints_of(const json& cfg, const char* key) {
    return cfg.at(key).get<std::vector<int>>();
}

TraceConfig trace_of(const json& cfg) { return trace_config_from_json(cfg.at("trace")); }

void write_text(const fs::path& path, const std::string& text, RunResult& res) {
    fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InvalidConfig("cannot write " + path.string());
    os << text;
    res.files.push_back(path);
}

void write_json(const fs::path& path, const json& j, RunResult& res) {
    write_text(path, j.dump(2) + "\n", res);
}

json with_config(const json& cfg, json payload) {
    payload["config"] = cfg;
    return payload;
}

// Dominant isotypic component of a unit direction, relative to the big block.
std::pair<std::string, double> dominant_label(const Matrix& v, int m) {
    std::string best;
    double best_norm = -1.0, residual = 0.0;
    for (IsotypicLabel l : {IsotypicLabel::t, IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y}) {
        const Matrix pv = isotypic_project(v, l, m);
        if (pv.norm() > best_norm) {
            best_norm = pv.norm();
            best = to_string(l);
            residual = (v - pv).norm();
        }
    }
    return {best, residual};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    if (n == 1) return {lo};
    for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidConfig("range '" + s + "' is not of the form lo:hi");
    try {
        return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw InvalidConfig("range '" + s + "' is not numeric");
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidConfig(what);
}

} // namespace

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json default_config(const std::string& command) {
    const json all = json::array({"C0I", "C0II", "C1I", "C1II"});
    json c = {{"command", command}, {"seed", 0}, {"jobs", 0}};
    if (command == "spectrum") {
        c["family"] = all;
        c["d"] = {7, 20, 100};
        c["brute"] = false;
    } else if (command == "arcs") {
        c["family"] = all;
        c["d"] = {7, 20, 100};
        c["hooks"] = {1, 2, 3};
        c["trace"] = to_json(TraceConfig{});
    } else if (command == "sphere") {
        c["family"] = json::array({"C0I"});
        c["d"] = {20};
        c["hook"] = 3;
        c["mode"] = "both";
        c["r_grid"] = "1e-3:1e-1";
        c["n_r"] = 9;
        c["n_starts"] = 8;
    } else if (command == "toy") {
        c["center"] = "all";
        c["resolution"] = 512;
        c["extent"] = 2.0;
        TraceConfig t;
        t.r_max = 3.0;
        c["trace"] = to_json(t);
    } else if (command == "minima") {
        c["family"] = all;
        c["d"] = {7, 20, 100};
        c["series"] = false;
    } else {
        throw InvalidConfig("unknown command '" + command + "'");
    }
    return c;
}

json resolve_config(const std::string& command, const json& overrides) {
    json c = default_config(command);
    if (!overrides.is_null()) {
        require(overrides.is_object(), "config must be a JSON object");
        for (const auto& [k, v] : overrides.items()) {
            if (k == "trace" && c.contains("trace")) {
                c["trace"].update(v);
            } else {
                c[k] = v;
            }
        }
    }
    c["command"] = command;
    try {
        require(c.at("seed").is_number_integer(), "seed must be an integer");
        require(c.at("jobs").get<int>() >= 0, "jobs must be >= 0");
        if (c.contains("family")) {
            if (c["family"].is_string()) c["family"] = json::array({c["family"]});
            for (const auto& f : c["family"]) family_from_string(f.get<std::string>());
            require(!c["family"].empty(), "family list is empty");
        }
        if (c.contains("d")) {
            if (c["d"].is_number_integer()) c["d"] = json::array({c["d"]});
            require(!c["d"].empty(), "d list is empty");
            for (int d : c["d"].get<std::vector<int>>()) {
                require(d >= kMinDimension, "d = " + std::to_string(d) + " is below the supported minimum " +
                                                std::to_string(kMinDimension));
            }
        }
        if (c.contains("trace")) trace_config_from_json(c["trace"]);
        if (command == "arcs") {
            for (int k : ints_of(c, "hooks")) require(k >= 1 && k <= 3, "hooks must lie in 1..3");
        }
        if (command == "sphere") {
            require(c["hook"].get<int>() >= 1 && c["hook"].get<int>() <= 3, "hook must lie in 1..3");
            const std::string mode = c["mode"];
            require(mode == "min" || mode == "max" || mode == "both", "mode must be min, max or both");
            const auto [lo, hi] = parse_range(c["r_grid"]);
            require(lo > 0 && hi >= lo, "r_grid needs 0 < lo <= hi");
            require(c["n_r"].get<int>() >= 1, "n_r must be positive");
            require(c["n_starts"].get<int>() >= 8, "n_starts must be >= 8");
        }
        if (command == "toy") {
            require(c["resolution"].get<int>() >= 64, "resolution must be >= 64");
            require(c["extent"].get<double>() > 0, "extent must be positive");
            const std::string center = c["center"];
            require(center == "all" || center == "max" || center == "saddle" || center == "min",
                    "center must be all, max, saddle or min");
        }
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("malformed config: ") + e.what());
    }
    return c;
}

RunResult cmd_spectrum(const json& cfg, const fs::path& out) {
    RunResult res;
    const auto fams = families_of(cfg);
    const auto ds = ints_of(cfg, "d");
    const bool brute = cfg.at("brute").get<bool>();
    const IsotypicLabel labels[] = {IsotypicLabel::t, IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y};

    json results = json::array();
    std::ostringstream csv;
    csv << "d,component,index";
    for (Family f : fams) {
        const std::string n = to_string(f);
        csv << ',' << n << "_mult," << n << "_computed," << n << "_predicted," << n << "_abs_error";
    }
    csv << '\n';

    std::string failure;
    for (int d : ds) {
        struct Col {
            std::map<IsotypicLabel, std::vector<double>> computed, predicted;
            double loss = NAN, loss_pred = NAN, brute_dev = NAN;
            bool ok = false;
        };
        std::vector<Col> cols(fams.size());
        for (std::size_t i = 0; i < fams.size(); ++i) {
            const Family f = fams[i];
            json r = {{"family", to_string(f)}, {"d", d}};
            try {
                const CriticalPointRecord rec = build_minimum(f, d);
                const SpectrumReport rep = full_spectrum(rec);
                Col& c = cols[i];
                c.predicted = predicted_spectrum(f, d);
                for (const auto& e : rep.entries) c.computed[e.label].push_back(e.eigenvalue);
                for (auto& [l, v] : c.computed) std::sort(v.begin(), v.end());
                c.loss = rec.loss_value;
                c.loss_pred = predicted_loss(f, d);
                r["minimum"] = to_json(rec);
                r["spectrum"] = to_json(rep);
                json rows = json::array();
                for (IsotypicLabel l : labels) {
                    for (std::size_t k = 0; k < c.computed[l].size(); ++k) {
                        const double pv = k < c.predicted[l].size() ? c.predicted[l][k] : NAN;
                        rows.push_back({{"label", to_string(l)},
                                        {"index", k + 1},
                                        {"multiplicity", multiplicity(l, d, family_p(f))},
                                        {"computed", c.computed[l][k]},
                                        {"predicted", pv},
                                        {"abs_error", std::abs(c.computed[l][k] - pv)}});
                    }
                }
                r["rows"] = rows;
                if (brute && d <= 12) {
                    const auto dense = brute_spectrum(rec.W());
                    const auto blocks = rep.expanded();
                    double dev = 0.0;
                    for (std::size_t k = 0; k < dense.size(); ++k) dev = std::max(dev, std::abs(dense[k] - blocks[k]));
                    c.brute_dev = dev;
                    r["brute_max_dev"] = dev;
                }
                c.ok = true;
            } catch (const NumericalError& e) {
                r["error"] = e.what();
                if (failure.empty()) failure = e.what();
            }
            results.push_back(r);
        }

        for (IsotypicLabel l : labels) {
            std::size_t rows = 0;
            for (const Col& c : cols) {
                if (c.ok) rows = std::max(rows, c.computed.at(l).size());
            }
            for (std::size_t k = 0; k < rows; ++k) {
                csv << d << ',' << to_string(l) << ',' << k + 1;
                for (std::size_t i = 0; i < fams.size(); ++i) {
                    const Col& c = cols[i];
                    if (!c.ok || k >= c.computed.at(l).size()) {
                        csv << ",,,,";
                        continue;
                    }
                    const double v = c.computed.at(l)[k];
                    const double pv = k < c.predicted.at(l).size() ? c.predicted.at(l)[k] : NAN;
                    csv << ',' << multiplicity(l, d, family_p(fams[i])) << ',' << fmt(v) << ',' << fmt(pv)
                        << ',' << fmt(std::abs(v - pv));
                }
                csv << '\n';
            }
        }
        csv << d << ",loss,1";
        for (const Col& c : cols) {
            csv << ",," << fmt(c.loss) << ',' << fmt(c.loss_pred) << ',' << fmt(std::abs(c.loss - c.loss_pred));
        }
        csv << '\n';
        if (brute) {
            csv << d << ",brute_max_dev,1";
            for (const Col& c : cols) csv << ",," << fmt(c.brute_dev) << ",,";
            csv << '\n';
        }
    }

    write_json(out / "spectrum.json", with_config(cfg, {{"results", results}}), res);
    write_text(out / "spectrum_table.csv", csv.str(), res);
    if (!failure.empty()) {
        res.exit_code = 3;
        res.message = failure;
    }
    return res;
}

RunResult cmd_arcs(const json& cfg, const fs::path& out) {
    RunResult res;
    const auto fams = families_of(cfg);
    const auto ds = ints_of(cfg, "d");
    const auto hooks = ints_of(cfg, "hooks");
    const TraceConfig tc = trace_of(cfg);
    int jobs = cfg.at("jobs").get<int>();
    if (jobs == 0) jobs = static_cast<int>(fams.size() * ds.size() * hooks.size());

    const auto cells = arc_radius_table(fams, hooks, ds, tc, jobs);

    std::ostringstream csv;
    csv << "d,ambient";
    for (Family f : fams) csv << ',' << to_string(f);
    csv << '\n';
    json jcells = json::array();
    std::string failure;
    std::size_t i = 0;
    for (int d : ds) {
        for (int k : hooks) {
            csv << d << ',' << '"' << YoungPartitionGroup::hook(d, k).to_string() << '"';
            for (std::size_t fi = 0; fi < fams.size(); ++fi, ++i) {
                const ArcCell& cell = cells[i];
                csv << ',' << (cell.error.empty() ? fmt(cell.radius) : "error");
                jcells.push_back(to_json(cell));
                if (!cell.error.empty() && failure.empty()) failure = cell.error;

                const std::string stem = std::string(to_string(cell.family)) + "_d" + std::to_string(d) + "_k" +
                                         std::to_string(k);
                write_json(out / "arcs" / (stem + ".json"), with_config(cfg, to_json(cell, true)), res);
                std::ostringstream prof;
                prof << "orientation,r,loss,lambda\n";
                for (const auto& a : cell.arcs) {
                    for (const auto& s : a.arc.samples) {
                        prof << a.sign << ',' << fmt(s.r) << ',' << fmt(s.value) << ',' << fmt(s.lambda) << '\n';
                    }
                }
                write_text(out / "arcs" / (stem + ".csv"), prof.str(), res);
            }
            csv << '\n';
        }
    }
    write_text(out / "arcs_table.csv", csv.str(), res);
    write_json(out / "arcs.json", with_config(cfg, {{"cells", jcells}}), res);
    if (!failure.empty()) {
        res.exit_code = 3;
        res.message = failure;
    }
    return res;
}

RunResult cmd_sphere(const json& cfg, const fs::path& out) {
    RunResult res;
    const auto fams = families_of(cfg);
    const auto ds = ints_of(cfg, "d");
    const int hook = cfg.at("hook");
    const std::string mode = cfg.at("mode");
    const auto [lo, hi] = parse_range(cfg.at("r_grid"));
    const auto grid = log_grid(lo, hi, cfg.at("n_r"));
    const int n_starts = cfg.at("n_starts");
    const auto seed = cfg.at("seed").get<std::uint64_t>();

    std::ostringstream csv;
    csv << "family,d,r,m,M,m_minus_center,min_label,min_label_residual,min_isotropy,max_label,"
           "max_label_residual,max_isotropy\n";
    json rows = json::array();
    for (int d : ds) {
        for (Family f : fams) {
            const CriticalPointRecord rec = build_minimum(f, d);
            const int p = family_p(f);
            const FixedPointChart chart = build_chart(d, YoungPartitionGroup::hook(d, std::max(hook, p)));
            const Matrix W = rec.W();
            for (double r : grid) {
                json row = {{"family", to_string(f)}, {"d", d}, {"r", r}, {"ambient", chart.group().to_string()}};
                std::string line = std::string(to_string(f)) + ',' + std::to_string(d) + ',' + fmt(r);
                auto side = [&](SphereMode sm, const char* key) {
                    const SphereResult sr = sphere_extremize(chart, rec, r, sm, n_starts, seed);
                    const Matrix v = (embed(chart, sr.xi) - W) / r;
                    const auto [label, resid] = dominant_label(v, d - p);
                    const std::string iso = detect_diagonal_isotropy(v, 1e-6).to_string();
                    row[key] = {{"value", sr.value},
                                {"lagrange_residual", sr.lagrange_residual},
                                {"converged_starts", sr.converged_starts},
                                {"label", label},
                                {"label_residual", resid},
                                {"isotropy", iso}};
                    return std::make_tuple(sr.value, label, resid, iso);
                };
                std::string mv = "", Mv = "", tail_min = ",,", tail_max = ",,";
                double m_val = NAN;
                if (mode != "max") {
                    const auto [v, l, rs, iso] = side(SphereMode::min, "min");
                    m_val = v;
                    mv = fmt(v);
                    tail_min = l + ',' + fmt(rs) + ",\"" + iso + '"';
                }
                if (mode != "min") {
                    const auto [v, l, rs, iso] = side(SphereMode::max, "max");
                    Mv = fmt(v);
                    tail_max = l + ',' + fmt(rs) + ",\"" + iso + '"';
                }
                csv << line << ',' << mv << ',' << Mv << ',' << fmt(m_val - rec.loss_value) << ',' << tail_min
                    << ',' << tail_max << '\n';
                rows.push_back(row);
            }
        }
    }
    write_text(out / "sphere.csv", csv.str(), res);
    write_json(out / "sphere.json", with_config(cfg, {{"profiles", rows}}), res);
    return res;
}

RunResult cmd_toy(const json& cfg, const fs::path& out) {
    RunResult res;
    const std::string which = cfg.at("center");
    toy::Grid grid{cfg.at("resolution").get<int>(), cfg.at("extent").get<double>()};
    const TraceConfig tc = trace_of(cfg);

    std::ostringstream cloud;
    cloud << "x,y,center_id\n";
    json centers = json::array();
    const toy::ToyObjective obj;
    for (const auto& cp : toy::critical_points()) {
        if (which != "all" && which != cp.kind) continue;
        toy::write_point_cloud_csv(cloud, toy::sample_tangency_set(cp.p, grid), cp.id);

        const Eigen::Matrix2d H = toy::hess_h(cp.p);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(H);
        std::vector<Vector> dirs;
        if (std::abs(es.eigenvalues()(0) - es.eigenvalues()(1)) < 1e-12) {
            const double s = std::sqrt(0.5);
            dirs = {Vector::Unit(2, 0), Vector::Unit(2, 1), Eigen::Vector2d(s, s), Eigen::Vector2d(s, -s)};
        } else {
            dirs = {es.eigenvectors().col(0), es.eigenvectors().col(1)};
        }
        json arcs = json::array();
        for (const Vector& v : dirs) {
            for (int sgn : {1, -1}) {
                const ArcRecord arc = trace_arc(obj, cp.p, double(sgn) * v, tc);
                const Vector end = arc.samples.back().xi;
                arcs.push_back({{"direction", {sgn * v(0), sgn * v(1)}},
                                {"termination", to_string(arc.termination)},
                                {"terminal_radius", arc.terminal_radius},
                                {"terminal_point", {end(0), end(1)}},
                                {"samples", arc.samples.size()}});
            }
        }
        centers.push_back({{"id", cp.id},
                           {"kind", cp.kind},
                           {"point", {cp.p.x(), cp.p.y()}},
                           {"value", toy::h(cp.p)},
                           {"hessian_eigenvalues", {es.eigenvalues()(0), es.eigenvalues()(1)}},
                           {"arcs", arcs}});
    }
    write_text(out / "toy_tangency.csv", cloud.str(), res);
    write_json(out / "toy.json", with_config(cfg, {{"centers", centers}}), res);
    return res;
}

RunResult cmd_minima(const json& cfg, const fs::path& out) {
    RunResult res;
    json recs = json::array();
    std::string failure;
    for (int d : ints_of(cfg, "d")) {
        for (Family f : families_of(cfg)) {
            try {
                json r = to_json(build_minimum(f, d));
                r["predicted_loss"] = predicted_loss(f, d);
                recs.push_back(r);
            } catch (const NumericalError& e) {
                recs.push_back({{"family", to_string(f)}, {"d", d}, {"error", e.what()}});
                if (failure.empty()) failure = e.what();
            }
        }
    }
    write_json(out / "minima.json", with_config(cfg, {{"records", recs}}), res);
    if (cfg.at("series").get<bool>()) {
        write_json(out / "puiseux_series.json", series_table_json(), res);
    }
    if (!failure.empty()) {
        res.exit_code = 3;
        res.message = failure;
    }
    return res;
}

RunResult run(const std::string& command, const json& overrides, const fs::path& out) {
    json cfg;
    try {
        cfg = resolve_config(command, overrides);
    } catch (const ConfigError& e) {
        return {2, {}, e.what()};
    }
    try {
        RunResult r;
        if (command == "spectrum") r = cmd_spectrum(cfg, out);
        else if (command == "arcs") r = cmd_arcs(cfg, out);
        else if (command == "sphere") r = cmd_sphere(cfg, out);
        else if (command == "toy") r = cmd_toy(cfg, out);
        else r = cmd_minima(cfg, out);
        if (r.exit_code == 3) {
            write_json(out / "error.json", with_config(cfg, {{"error", r.message}}), r);
        }
        return r;
    } catch (const ConfigError& e) {
        return {2, {}, e.what()};
    } catch (const NumericalError& e) {
        RunResult r{3, {}, e.what()};
        write_json(out / "error.json", with_config(cfg, {{"error", e.what()}}), r);
        return r;
    }
}

} // namespace tangency::reports
