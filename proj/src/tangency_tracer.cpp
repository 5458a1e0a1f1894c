#include "tangency/tangency_tracer.hpp"

#include "tangency/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

namespace tangency {

namespace {

enum class Corrector { converged, singular, failed };

struct Correction {
    Corrector status;
    Vector x;
    double lambda;
};

// Newton on [grad f(x) - 2 lambda u; u.u - r^2] with u = x - c.
Correction correct(const Objective& f, const Vector& c, double r, Vector x, double lambda,
                   const TraceConfig& cfg) {
    const int n = f.dim();
    try {
        for (int it = 0; it <= cfg.max_newton_iters; ++it) {
            const Vector u = x - c;
            Vector F(n + 1);
            F.head(n) = f.gradient(x) - 2.0 * lambda * u;
            F(n) = u.squaredNorm() - r * r;
            if (!F.allFinite()) return {Corrector::failed, x, lambda};
            if (F.norm() <= cfg.newton_tol) return {Corrector::converged, x, lambda};
            if (it == cfg.max_newton_iters) break;

            Matrix J = Matrix::Zero(n + 1, n + 1);
            J.topLeftCorner(n, n) = f.hessian(x) - 2.0 * lambda * Matrix::Identity(n, n);
            J.topRightCorner(n, 1) = -2.0 * u;
            J.bottomLeftCorner(1, n) = 2.0 * u.transpose();
            Eigen::JacobiSVD<Matrix> svd(J, Eigen::ComputeFullU | Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            if (!(sv(n) > 0.0) || sv(0) / sv(n) >= cfg.cond_threshold) {
                return {Corrector::singular, x, lambda};
            }
            const Vector dx = svd.solve(-F);
            x += dx.head(n);
            lambda += dx(n);
        }
    } catch (const NumericalError&) {
    }
    return {Corrector::failed, x, lambda};
}

double rayleigh(const Matrix& H, const Vector& v) { return v.dot(H * v) / v.squaredNorm(); }

void check_eigenvector(const Matrix& H, const Vector& v) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    const double rho = rayleigh(H, v);
    if ((H * v - rho * v).norm() > 1e-3 * scale) {
        throw BadDirection("direction is not a Hessian eigenvector at the centre");
    }
}

} // namespace

void TraceConfig::validate() const {
    if (!(0.0 < r_min && r_min < delta_r && delta_r < r_max)) {
        throw InvalidConfig("trace config needs 0 < r_min < delta_r < r_max");
    }
    if (!(newton_tol > 0.0) || max_newton_iters < 1 || !(cond_threshold > 1.0) || !(min_step > 0.0)) {
        throw InvalidConfig("trace config has non-positive tolerances");
    }
}

nlohmann::json to_json(const TraceConfig& cfg) {
    return {{"delta_r", cfg.delta_r},
            {"r_min", cfg.r_min},
            {"r_max", cfg.r_max},
            {"newton_tol", cfg.newton_tol},
            {"max_newton_iters", cfg.max_newton_iters},
            {"cond_threshold", cfg.cond_threshold},
            {"min_step", cfg.min_step},
            {"stop_at_critical", cfg.stop_at_critical}};
}

TraceConfig trace_config_from_json(const nlohmann::json& j, TraceConfig c) {
    c.delta_r = j.value("delta_r", c.delta_r);
    c.r_min = j.value("r_min", c.r_min);
    c.r_max = j.value("r_max", c.r_max);
    c.newton_tol = j.value("newton_tol", c.newton_tol);
    c.max_newton_iters = j.value("max_newton_iters", c.max_newton_iters);
    c.cond_threshold = j.value("cond_threshold", c.cond_threshold);
    c.min_step = j.value("min_step", c.min_step);
    c.stop_at_critical = j.value("stop_at_critical", c.stop_at_critical);
    c.validate();
    return c;
}

const char* to_string(Termination t) {
    switch (t) {
    case Termination::SingularJacobian: return "SingularJacobian";
    case Termination::NewtonDiverged: return "NewtonDiverged";
    case Termination::ReachedRmax: return "ReachedRmax";
    case Termination::StepStalled: return "StepStalled";
    case Termination::CriticalPoint: return "CriticalPoint";
    }
    return "?";
}

ArcRecord trace_arc(const Objective& f, const Vector& center, const Vector& direction,
                    const TraceConfig& cfg) {
    cfg.validate();
    const int n = f.dim();
    if (center.size() != n || direction.size() != n) {
        throw DimensionMismatch("centre and direction must live in the objective's space");
    }
    const double vn = direction.norm();
    if (!(vn > 0.0)) {
        throw BadDirection("direction vanishes");
    }
    const Vector v = direction / vn;
    const Matrix H0 = f.hessian(center);
    check_eigenvector(H0, v);

    ArcRecord arc;
    arc.center_xi = center;

    Correction c0 = correct(f, center, cfg.r_min, center + cfg.r_min * v, 0.5 * rayleigh(H0, v), cfg);
    if (c0.status != Corrector::converged) {
        arc.termination =
            c0.status == Corrector::singular ? Termination::SingularJacobian : Termination::NewtonDiverged;
        arc.terminal_radius = 0.0;
        return arc;
    }
    arc.samples.push_back({cfg.r_min, c0.x, c0.lambda, f.value(c0.x)});

    double step = cfg.delta_r;
    bool last_failed_finite = true;
    while (true) {
        const ArcSample& last = arc.samples.back();
        if (last.r >= cfg.r_max) {
            arc.termination = Termination::ReachedRmax;
            break;
        }
        const double rn = std::min(last.r + step, cfg.r_max);

        // Secant predictor through the two most recent samples.
        Vector xp;
        double lp;
        if (arc.samples.size() >= 2) {
            const ArcSample& prev = arc.samples[arc.samples.size() - 2];
            const double s = (rn - last.r) / (last.r - prev.r);
            xp = last.xi + s * (last.xi - prev.xi);
            lp = last.lambda + s * (last.lambda - prev.lambda);
        } else {
            xp = center + rn * v;
            lp = last.lambda;
        }
        const Correction c = correct(f, center, rn, xp, lp, cfg);
        if (c.status == Corrector::singular) {
            arc.termination = Termination::SingularJacobian;
            break;
        }
        // A corrector that lands far from the predictor has jumped branches.
        const bool ok = c.status == Corrector::converged && (c.x - xp).norm() <= 10.0 * (rn - last.r);
        if (!ok) {
            last_failed_finite = c.x.allFinite() && std::isfinite(c.lambda);
            step *= 0.5;
            if (step < cfg.min_step) {
                arc.termination = last_failed_finite ? Termination::StepStalled : Termination::NewtonDiverged;
                break;
            }
            continue;
        }

        if (cfg.stop_at_critical && (last.lambda > 0.0) != (c.lambda > 0.0)) {
            // Regula falsi on lambda(r) between the bracketing samples.
            ArcSample a = last;
            ArcSample b{rn, c.x, c.lambda, 0.0};
            ArcSample best = b;
            for (int it = 0; it < 60; ++it) {
                const double t = a.lambda / (a.lambda - b.lambda);
                const double rm = a.r + t * (b.r - a.r);
                const Correction cm =
                    correct(f, center, rm, a.xi + t * (b.xi - a.xi), 0.0, cfg);
                if (cm.status != Corrector::converged) break;
                best = {rm, cm.x, cm.lambda, 0.0};
                if (std::abs(cm.lambda) < 1e-13 || std::abs(b.r - a.r) < 1e-13) break;
                if ((cm.lambda > 0.0) == (a.lambda > 0.0)) {
                    a = best;
                } else {
                    b = best;
                }
            }
            best.value = f.value(best.xi);
            arc.samples.push_back(best);
            arc.termination = Termination::CriticalPoint;
            break;
        }

        arc.samples.push_back({rn, c.x, c.lambda, f.value(c.x)});
        step = std::min(cfg.delta_r, 2.0 * step);
    }
    arc.terminal_radius = arc.samples.back().r;
    return arc;
}

ArcRecord trace_arc(const FixedPointChart& chart, const CriticalPointRecord& center,
                    const Matrix& direction, const TraceConfig& cfg) {
    const Vector v = project(chart, direction);
    if ((embed(chart, v) - direction).norm() > 1e-10 * std::max(1.0, direction.norm())) {
        throw BadDirection("direction is not in the span of chart " + chart.group().to_string());
    }
    const Matrix W = center.W();
    const Vector c = project(chart, W);
    if ((embed(chart, c) - W).norm() > 1e-10 * (1.0 + W.norm())) {
        throw BadDirection("centre is not fixed by " + chart.group().to_string());
    }
    ArcRecord arc = trace_arc(ChartObjective(chart), c, v, cfg);
    arc.ambient = chart.group().to_string();
    return arc;
}

SphereResult sphere_extremize(const Objective& f, const Vector& center, double r, SphereMode mode,
                              int n_starts, std::uint64_t seed) {
    if (!(r > 0.0)) throw InvalidConfig("sphere radius must be positive");
    if (n_starts < 8) throw InvalidConfig("sphere search needs at least 8 starts");
    constexpr int kMaxIter = 100000;
    constexpr double kStationary = 1e-9;
    const int n = f.dim();
    const double sgn = mode == SphereMode::min ? 1.0 : -1.0;

    auto retract = [&](const Vector& y) { return Vector(center + r * (y - center).normalized()); };
    auto rgrad = [&](const Vector& x, const Vector& g) {
        const Vector u = (x - center) / r;
        return Vector(sgn * (g - g.dot(u) * u));
    };

    const double alpha0 = 1.0 / std::max(1e-8, f.hessian(center).norm());
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    SphereResult best{Vector(), std::numeric_limits<double>::quiet_NaN(), 0.0, 0};
    for (int s = 0; s < n_starts; ++s) {
        Vector u(n);
        for (int i = 0; i < n; ++i) u(i) = gauss(rng);
        Vector x = retract(center + u);
        double fx = sgn * f.value(x);
        Vector g = f.gradient(x);
        Vector rg = rgrad(x, g);
        double alpha = alpha0;
        bool done = false;
        for (int it = 0; it < kMaxIter; ++it) {
            if (rg.norm() <= kStationary) {
                done = true;
                break;
            }
            // Armijo backtracking from the Barzilai-Borwein trial step. Near the
            // centre the loss differences drown in rounding, so a step that
            // shrinks the gradient without a measurable increase also passes.
            Vector xn;
            double fn = 0.0;
            double t = alpha;
            bool accepted = false;
            for (int bt = 0; bt < 60 && !accepted; ++bt, t *= 0.5) {
                xn = retract(x - t * rg);
                fn = sgn * f.value(xn);
                if (fn <= fx - 1e-4 * t * rg.squaredNorm()) {
                    accepted = true;
                } else if (fn <= fx + 1e-14 * (1.0 + std::abs(fx))) {
                    accepted = rgrad(xn, f.gradient(xn)).norm() < rg.norm();
                }
            }
            if (!accepted) break;
            t *= 2.0;
            const Vector gn = f.gradient(xn);
            const Vector rgn = rgrad(xn, gn);
            const Vector sx = xn - x;
            const Vector sy = rgn - rg;
            const double sy_dot = sx.dot(sy);
            alpha = sy_dot > 0.0 ? std::clamp(sx.squaredNorm() / sy_dot, 1e-10, 1e10) : 2.0 * t;
            x = xn;
            fx = fn;
            g = gn;
            rg = rgn;
        }
        if (!done) continue;
        const double value = sgn * fx;
        const double lambda = g.dot(x - center) / (2.0 * r * r);
        const double residual = (g - 2.0 * lambda * (x - center)).norm();
        ++best.converged_starts;
        if (best.xi.size() == 0 || sgn * value < sgn * best.value) {
            best.xi = x;
            best.value = value;
            best.lagrange_residual = residual;
        }
    }
    if (best.converged_starts == 0) {
        throw NoConvergence("no start reached a stationary point on the sphere");
    }
    return best;
}

SphereResult sphere_extremize(const FixedPointChart& chart, const CriticalPointRecord& center,
                              double r, SphereMode mode, int n_starts, std::uint64_t seed) {
    const Vector c = project(chart, center.W());
    return sphere_extremize(ChartObjective(chart), c, r, mode, n_starts, seed);
}

Vector tangent_direction(const ArcRecord& arc) {
    if (arc.samples.size() < 3) {
        throw InsufficientSamples("tangent needs at least three samples");
    }
    const ArcSample& s = arc.samples.front();
    return (s.xi - arc.center_xi) / s.r;
}

Matrix tangent_direction(const FixedPointChart& chart, const ArcRecord& arc) {
    Matrix M = embed(chart, tangent_direction(arc));
    return M / M.norm();
}

MinimalDirection minimal_direction(const CriticalPointRecord& rec, const YoungPartitionGroup& ambient) {
    constexpr double kDegenerate = 1e-5;
    const int d = rec.d;
    const int p = family_p(rec.family);
    const auto& blocks = ambient.blocks();
    const int k = static_cast<int>(blocks.size()) - 1;
    if (ambient.d() != d || !(ambient == YoungPartitionGroup::hook(d, k)) || k < p) {
        throw InvalidPartition("ambient " + ambient.to_string() +
                               " is not a hook containing the centre's isotropy");
    }
    const Matrix W = rec.W();

    struct Level {
        std::string name;
        Eigen::VectorXd values;
        std::vector<Matrix> vectors;  // embedded eigenvectors, ascending
    };
    std::vector<Level> levels;
    for (int j = p; j <= k; ++j) {
        const FixedPointChart chart = build_chart(d, YoungPartitionGroup::hook(d, j));
        const Vector c = project(chart, W);
        Eigen::SelfAdjointEigenSolver<Matrix> es(chart_hessian(chart, c));
        Level lv{chart.group().to_string(), es.eigenvalues(), {}};
        for (int i = 0; i < chart.N(); ++i) lv.vectors.push_back(embed(chart, es.eigenvectors().col(i)));
        levels.push_back(std::move(lv));
    }
    const Level& top = levels.back();
    const double lmin = top.values(0);
    const double tol = kDegenerate * std::max(1.0, std::abs(lmin));

    MinimalDirection out;
    out.eigenvalue = lmin;
    out.eigenspace_dim = static_cast<int>((top.values.array() <= lmin + tol).count());
    for (const Level& lv : levels) {
        if (lv.values(0) <= lmin + tol) {
            out.direction = lv.vectors[0] / lv.vectors[0].norm();
            out.level = lv.name;
            break;
        }
    }
    if (out.eigenspace_dim <= 1) return out;

    // Split the degenerate eigenspace by chain level and isotypic label.
    std::vector<Matrix> span;
    const int m = d - p;
    for (const Level& lv : levels) {
        std::vector<Matrix> fresh;
        for (int i = 0; i < lv.values.size() && lv.values(i) <= lmin + tol; ++i) {
            Matrix v = lv.vectors[i];
            for (const Matrix& b : span) v -= b.cwiseProduct(v).sum() * b;
            for (const Matrix& b : fresh) v -= b.cwiseProduct(v).sum() * b;
            if (v.norm() > 1e-6) fresh.push_back(v / v.norm());
        }
        for (IsotypicLabel label : {IsotypicLabel::t, IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y}) {
            if (fresh.empty()) break;
            Matrix stack(d * d, static_cast<Eigen::Index>(fresh.size()));
            for (std::size_t i = 0; i < fresh.size(); ++i) {
                const Matrix pr = isotypic_project(fresh[i], label, m);
                stack.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vector>(pr.data(), d * d);
            }
            Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeThinU);
            if (svd.singularValues()(0) < 1e-6) continue;
            const Vector u = svd.matrixU().col(0);
            Matrix dir = Eigen::Map<const Matrix>(u.data(), d, d);
            out.candidates.push_back({dir / dir.norm(), lmin, lv.name, to_string(label)});
        }
        span.insert(span.end(), fresh.begin(), fresh.end());
    }
    return out;
}

namespace {

double trace_both(const FixedPointChart& chart, const CriticalPointRecord& rec, const Matrix& dir,
                  const TraceConfig& cfg, std::vector<OrientedArc>* keep, Termination* term) {
    double best = std::numeric_limits<double>::infinity();
    Termination best_term = Termination::ReachedRmax;
    for (int sgn : {1, -1}) {
        ArcRecord arc = trace_arc(chart, rec, double(sgn) * dir, cfg);
        if (arc.event_radius() < best) {
            best = arc.event_radius();
            best_term = arc.termination;
        }
        if (keep) keep->push_back({sgn, std::move(arc)});
    }
    if (term) *term = best_term;
    return best;
}

} // namespace

ArcCell arc_cell(Family family, int d, int hook_size, const TraceConfig& cfg) {
    ArcCell cell;
    cell.family = family;
    cell.d = d;
    cell.ambient = YoungPartitionGroup::hook(d, hook_size);
    try {
        const CriticalPointRecord rec = build_minimum(family, d);
        const FixedPointChart chart = build_chart(d, cell.ambient);
        const MinimalDirection md = minimal_direction(rec, cell.ambient);
        cell.eigenvalue = md.eigenvalue;
        cell.eigenspace_dim = md.eigenspace_dim;
        cell.level = md.level;
        Termination term;
        cell.radius = trace_both(chart, rec, md.direction, cfg, &cell.arcs, &term);
        cell.termination = to_string(term);
        for (const auto& c : md.candidates) {
            const double r = trace_both(chart, rec, c.direction, cfg, nullptr, nullptr);
            cell.candidates.push_back({c.level, c.label, c.eigenvalue, r});
        }
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

std::vector<ArcCell> arc_radius_table(const std::vector<Family>& families,
                                      const std::vector<int>& hook_sizes,
                                      const std::vector<int>& ds, const TraceConfig& cfg, int jobs) {
    cfg.validate();
    struct Job {
        Family f;
        int d, k;
    };
    std::vector<Job> todo;
    for (int d : ds)
        for (int k : hook_sizes)
            for (Family f : families) todo.push_back({f, d, k});

    std::vector<ArcCell> cells(todo.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= todo.size()) return;
                i = next++;
            }
            cells[i] = arc_cell(todo[i].f, todo[i].d, todo[i].k, cfg);
        }
    };
    jobs = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, todo.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return cells;
}

nlohmann::json to_json(const ArcRecord& arc) {
    std::vector<double> r, lambda, value, xi;
    for (const auto& s : arc.samples) {
        r.push_back(s.r);
        lambda.push_back(s.lambda);
        value.push_back(s.value);
        xi.insert(xi.end(), s.xi.data(), s.xi.data() + s.xi.size());
    }
    return {{"ambient", arc.ambient},
            {"center_xi", std::vector<double>(arc.center_xi.data(),
                                              arc.center_xi.data() + arc.center_xi.size())},
            {"dim", arc.center_xi.size()},
            {"r", r},
            {"lambda", lambda},
            {"loss", value},
            {"xi", xi},
            {"termination", to_string(arc.termination)},
            {"terminal_radius", arc.terminal_radius}};
}

nlohmann::json to_json(const ArcCell& cell, bool with_arcs) {
    auto num = [](double v) -> nlohmann::json {
        if (std::isinf(v)) return "inf";
        if (std::isnan(v)) return nullptr;
        return v;
    };
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : cell.candidates) {
        cands.push_back({{"level", c.level}, {"label", c.label}, {"eigenvalue", c.eigenvalue},
                         {"radius", num(c.radius)}});
    }
    nlohmann::json j = {{"family", to_string(cell.family)},
                        {"d", cell.d},
                        {"ambient", cell.ambient.to_string()},
                        {"radius", num(cell.radius)},
                        {"termination", cell.termination},
                        {"eigenvalue", cell.eigenvalue},
                        {"eigenspace_dim", cell.eigenspace_dim},
                        {"direction_level", cell.level},
                        {"candidates", cands}};
    if (!cell.error.empty()) j["error"] = cell.error;
    if (with_arcs) {
        nlohmann::json arcs = nlohmann::json::array();
        for (const auto& a : cell.arcs) {
            nlohmann::json aj = to_json(a.arc);
            aj["orientation"] = a.sign;
            arcs.push_back(aj);
        }
        j["arcs"] = arcs;
    }
    return j;
}

} // namespace tangency
