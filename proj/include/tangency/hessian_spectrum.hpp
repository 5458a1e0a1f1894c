#pragma once

#include "tangency/minima_atlas.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace tangency {

struct SpectrumEntry {
    double eigenvalue;
    int multiplicity;
    IsotypicLabel label;
};

struct SpectrumReport {
    int d = 0;
    std::vector<SpectrumEntry> entries;

    // All d^2 eigenvalues, ascending.
    std::vector<double> expanded() const;
    double min_eigenvalue() const;
};

std::vector<double> t_block_spectrum(const CriticalPointRecord& rec);
std::vector<double> s_block_spectrum(const CriticalPointRecord& rec);
double x_eigenvalue(const CriticalPointRecord& rec);
double y_eigenvalue(const CriticalPointRecord& rec);

// Symmetrized alpha_ij over the normalized s representatives, and its
// eigenvectors mapped back to d x d matrices (ascending eigenvalue order).
std::vector<Matrix> s_block_eigenvectors(const CriticalPointRecord& rec);

int multiplicity(IsotypicLabel label, int d, int p);

SpectrumReport full_spectrum(const CriticalPointRecord& rec);

// Dense d^2 x d^2 Hessian from hvp on elementary matrices. d <= 12.
std::vector<double> brute_spectrum(const Matrix& W);

// Two-term asymptotic eigenvalues per component, ascending within each label.
std::map<IsotypicLabel, std::vector<double>> predicted_spectrum(Family f, int d);

nlohmann::json to_json(const SpectrumReport& report);

} // namespace tangency
