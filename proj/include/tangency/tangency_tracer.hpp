#pragma once

#include "tangency/hessian_spectrum.hpp"
#include "tangency/minima_atlas.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace tangency {

// A smooth function on R^N; tracing and sphere search only see this.
class Objective {
public:
    virtual ~Objective() = default;
    virtual int dim() const = 0;
    virtual double value(const Vector& x) const = 0;
    virtual Vector gradient(const Vector& x) const = 0;
    virtual Matrix hessian(const Vector& x) const = 0;
};

class ChartObjective : public Objective {
public:
    explicit ChartObjective(const FixedPointChart& chart) : chart_(chart) {}
    int dim() const override { return chart_.N(); }
    double value(const Vector& x) const override { return chart_loss(chart_, x); }
    Vector gradient(const Vector& x) const override { return chart_gradient(chart_, x); }
    Matrix hessian(const Vector& x) const override { return chart_hessian(chart_, x); }

private:
    const FixedPointChart& chart_;
};

struct TraceConfig {
    double delta_r = 1e-3;
    double r_min = 1e-7;
    double r_max = 10.0;
    double newton_tol = 1e-10;
    int max_newton_iters = 25;
    double cond_threshold = 1e12;
    double min_step = 1e-6;
    // Stop where the multiplier changes sign: the arc has reached another
    // critical point of the loss.
    bool stop_at_critical = true;

    void validate() const;
};

nlohmann::json to_json(const TraceConfig& cfg);
TraceConfig trace_config_from_json(const nlohmann::json& j, TraceConfig base = {});

enum class Termination { SingularJacobian, NewtonDiverged, ReachedRmax, StepStalled, CriticalPoint };
const char* to_string(Termination t);

struct ArcSample {
    double r;
    Vector xi;
    double lambda;
    double value;
};

struct ArcRecord {
    Vector center_xi;
    std::vector<ArcSample> samples;
    Termination termination = Termination::ReachedRmax;
    double terminal_radius = 0.0;
    std::string ambient;

    // Radius of the first event along the arc; infinite if r_max was reached.
    double event_radius() const {
        return termination == Termination::ReachedRmax ? std::numeric_limits<double>::infinity()
                                                       : terminal_radius;
    }
};

// Continuation of grad f(x) = 2 lambda (x - c), |x - c| = r from c along a unit
// Hessian eigenvector.
ArcRecord trace_arc(const Objective& f, const Vector& center, const Vector& direction,
                    const TraceConfig& cfg);
// Chart version: direction is a d x d matrix in the chart span.
ArcRecord trace_arc(const FixedPointChart& chart, const CriticalPointRecord& center,
                    const Matrix& direction, const TraceConfig& cfg);

enum class SphereMode { min, max };

struct SphereResult {
    Vector xi;
    double value;
    double lagrange_residual;
    int converged_starts;
};

SphereResult sphere_extremize(const Objective& f, const Vector& center, double r, SphereMode mode,
                              int n_starts, std::uint64_t seed);
SphereResult sphere_extremize(const FixedPointChart& chart, const CriticalPointRecord& center,
                              double r, SphereMode mode, int n_starts, std::uint64_t seed);

Vector tangent_direction(const ArcRecord& arc);
Matrix tangent_direction(const FixedPointChart& chart, const ArcRecord& arc);

struct DirectionCandidate {
    Matrix direction;   // unit d x d
    double eigenvalue;
    std::string level;  // chain chart the vector was found in
    std::string label;  // isotypic label relative to the centre's big block
};

struct MinimalDirection {
    Matrix direction;
    double eigenvalue;
    std::string level;
    int eigenspace_dim;
    std::vector<DirectionCandidate> candidates;  // filled when eigenspace_dim > 1
};

// Lowest eigenvector of the Hessian restricted to the ambient hook chart. A
// degenerate eigenspace is resolved by walking the chain of hooks from the
// centre's isotropy up to the ambient and taking the vector from the
// coarsest chart that already attains the minimum.
MinimalDirection minimal_direction(const CriticalPointRecord& rec, const YoungPartitionGroup& ambient);

struct OrientedArc {
    int sign;
    ArcRecord arc;
};

struct ArcCell {
    Family family = Family::C0I;
    int d = 0;
    YoungPartitionGroup ambient;
    double radius = std::numeric_limits<double>::quiet_NaN();
    std::string termination;
    double eigenvalue = 0.0;
    int eigenspace_dim = 0;
    std::string level;
    std::vector<OrientedArc> arcs;
    struct Candidate {
        std::string level, label;
        double eigenvalue;
        double radius;
    };
    std::vector<Candidate> candidates;
    std::string error;
};

// Traces both orientations of the minimal direction for every
// (family, hook with k singletons, d) cell; the cell radius is the earlier event.
std::vector<ArcCell> arc_radius_table(const std::vector<Family>& families,
                                      const std::vector<int>& hook_sizes,
                                      const std::vector<int>& ds, const TraceConfig& cfg,
                                      int jobs = 1);

ArcCell arc_cell(Family family, int d, int hook_size, const TraceConfig& cfg);

nlohmann::json to_json(const ArcRecord& arc);
nlohmann::json to_json(const ArcCell& cell, bool with_arcs = false);

} // namespace tangency
