#pragma once

#include "tangency/kernel_loss.hpp"
#include "tangency/symmetry_rep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tangency {

enum class Family { C0I, C0II, C1I, C1II };
enum class MinimumType { I, II };

const char* to_string(Family f);
const char* to_string(MinimumType t);
Family family_from_string(const std::string& name);
int family_p(Family f);
inline constexpr Family kAllFamilies[] = {Family::C0I, Family::C0II, Family::C1I, Family::C1II};

// Smallest d the atlas supports; below it the families may bifurcate.
inline constexpr int kMinDimension = 7;

struct PuiseuxTerm {
    double exponent;      // the term is coefficient * d^(-exponent)
    double coefficient;
    std::string closed_form;
};

struct PuiseuxApprox {
    std::vector<PuiseuxTerm> terms;
};

double eval_series(const PuiseuxApprox& series, int d);

struct SeriesEntry {
    std::string family;
    std::string coordinate;
    PuiseuxApprox series;
    std::string note;
};

// Coordinates xi_1.. of the type I families as tabulated series; the C1II rows
// are kept verbatim even though they repeat C1I.
const std::vector<SeriesEntry>& series_table();
const PuiseuxApprox& family_series(Family f, int coordinate);
nlohmann::json series_table_json();

// Loss restricted to a fixed-point chart, its gradient and its Hessian (the
// latter assembled from hvp on the orthonormal basis and symmetrized).
double chart_loss(const FixedPointChart& chart, const Vector& xi);
Vector chart_gradient(const FixedPointChart& chart, const Vector& xi);
Matrix chart_hessian(const FixedPointChart& chart, const Vector& xi, double h = 0.0);

struct Seed {
    FixedPointChart chart;
    Vector xi0;
};

Seed seed_minimum(Family f, int d);

struct CriticalPointRecord {
    Family family;
    int d;
    FixedPointChart chart;
    Vector xi;
    double loss_value;
    double grad_norm;
    MinimumType type_label;
    int iterations;

    Matrix W() const { return embed(chart, xi); }
};

CriticalPointRecord refine_critical(const FixedPointChart& chart, const Vector& xi0, Family family,
                                    double tol = 1e-11);

MinimumType classify_type(const CriticalPointRecord& rec);

// Leading terms of the loss at each family (zero for the global minimum).
double predicted_loss(Family f, int d);

// Seed, refine and validate a family member. C1II is rejected unless it
// classifies as type II with the expected isotropy and, for d >= 20, a loss
// near the predicted value.
CriticalPointRecord build_minimum(Family f, int d);

nlohmann::json to_json(const CriticalPointRecord& rec);

} // namespace tangency
