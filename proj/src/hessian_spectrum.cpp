#include "tangency/hessian_spectrum.hpp"

#include "tangency/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tangency {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> ascending(const Vector& v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matrix> normalized_s_representatives(int d, int p) {
    std::vector<Matrix> reps;
    for (int c = 1; c <= representative_copies(IsotypicLabel::s, p); ++c) {
        Matrix R = representative(IsotypicLabel::s, c, d, p);
        const double n = R.norm();
        if (n < 1e-10) {
            throw RepresentativeDegenerate("s representative " + std::to_string(c) + " vanishes");
        }
        reps.push_back(R / n);
    }
    return reps;
}

Matrix s_alpha(const CriticalPointRecord& rec, const std::vector<Matrix>& reps) {
    const WeightMatrix W(rec.W());
    const int k = static_cast<int>(reps.size());
    Matrix alpha(k, k);
    for (int i = 0; i < k; ++i) {
        const Matrix Hr = hvp(W, reps[i]);
        for (int j = 0; j < k; ++j) {
            alpha(i, j) = Hr.cwiseProduct(reps[j]).sum();
        }
    }
    return 0.5 * (alpha + alpha.transpose());
}

double rayleigh(const CriticalPointRecord& rec, const Matrix& R) {
    const double nn = R.squaredNorm();
    if (nn < 1e-20) {
        throw RepresentativeDegenerate("representative vanishes");
    }
    return hvp(WeightMatrix(rec.W()), R).cwiseProduct(R).sum() / nn;
}

} // namespace

std::vector<double> SpectrumReport::expanded() const {
    std::vector<double> out;
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.eigenvalue);
    std::sort(out.begin(), out.end());
    return out;
}

double SpectrumReport::min_eigenvalue() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) m = std::min(m, e.eigenvalue);
    return m;
}

std::vector<double> t_block_spectrum(const CriticalPointRecord& rec) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(chart_hessian(rec.chart, rec.xi));
    return ascending(es.eigenvalues());
}

std::vector<double> s_block_spectrum(const CriticalPointRecord& rec) {
    const auto reps = normalized_s_representatives(rec.d, family_p(rec.family));
    Eigen::SelfAdjointEigenSolver<Matrix> es(s_alpha(rec, reps));
    return ascending(es.eigenvalues());
}

std::vector<Matrix> s_block_eigenvectors(const CriticalPointRecord& rec) {
    const auto reps = normalized_s_representatives(rec.d, family_p(rec.family));
    Eigen::SelfAdjointEigenSolver<Matrix> es(s_alpha(rec, reps));
    std::vector<Matrix> out;
    for (int k = 0; k < es.eigenvectors().cols(); ++k) {
        Matrix M = Matrix::Zero(rec.d, rec.d);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            M += es.eigenvectors()(static_cast<Eigen::Index>(i), k) * reps[i];
        }
        out.push_back(M);
    }
    return out;
}

double x_eigenvalue(const CriticalPointRecord& rec) {
    return rayleigh(rec, representative(IsotypicLabel::x, 1, rec.d, family_p(rec.family)));
}

double y_eigenvalue(const CriticalPointRecord& rec) {
    return rayleigh(rec, representative(IsotypicLabel::y, 1, rec.d, family_p(rec.family)));
}

int multiplicity(IsotypicLabel label, int d, int p) {
    const int m = d - p;
    switch (label) {
    case IsotypicLabel::t: return 1;
    case IsotypicLabel::s: return m - 1;
    case IsotypicLabel::x: return (m - 1) * (m - 2) / 2;
    case IsotypicLabel::y: return m * (m - 3) / 2;
    }
    return 0;
}

SpectrumReport full_spectrum(const CriticalPointRecord& rec) {
    const int d = rec.d;
    const int p = family_p(rec.family);
    SpectrumReport r;
    r.d = d;
    for (double v : t_block_spectrum(rec)) r.entries.push_back({v, 1, IsotypicLabel::t});
    const int ms = multiplicity(IsotypicLabel::s, d, p);
    for (double v : s_block_spectrum(rec)) r.entries.push_back({v, ms, IsotypicLabel::s});
    r.entries.push_back({x_eigenvalue(rec), multiplicity(IsotypicLabel::x, d, p), IsotypicLabel::x});
    r.entries.push_back({y_eigenvalue(rec), multiplicity(IsotypicLabel::y, d, p), IsotypicLabel::y});

    int total = 0;
    for (const auto& e : r.entries) total += e.multiplicity;
    if (total != d * d) {
        throw MultiplicityMismatch("multiplicities sum to " + std::to_string(total) + ", not " +
                                   std::to_string(d * d));
    }
    return r;
}

std::vector<double> brute_spectrum(const Matrix& Wm) {
    const int d = static_cast<int>(Wm.rows());
    if (d > 12) {
        throw TooLarge("dense Hessian is limited to d <= 12");
    }
    const WeightMatrix W(Wm);
    const int n = d * d;
    // Column-major flattening on both sides keeps H in one basis.
    Matrix Hs(n, n);
    for (int k = 0; k < n; ++k) {
        Matrix E = Matrix::Zero(d, d);
        E(k % d, k / d) = 1.0;
        const Matrix col = hvp(W, E);
        Hs.col(k) = Eigen::Map<const Vector>(col.data(), n);
    }
    Hs = 0.5 * (Hs + Hs.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(Hs, Eigen::EigenvaluesOnly);
    return ascending(es.eigenvalues());
}

std::map<IsotypicLabel, std::vector<double>> predicted_spectrum(Family f, int d) {
    const double pi = kPi, pi2 = pi * pi, pi3 = pi2 * pi, pi4 = pi3 * pi;
    const double sd = std::sqrt(double(d));
    const double q = (pi - 2) / (4 * pi);
    const double P = (pi + 2) / (4 * pi);
    const double big0 = d / (2 * pi) + (-pi2 - 4 + 6 * pi) / (4 * pi * (2 - pi));
    const double big1 = d / 4.0 + (-pi2 - 2 * pi + 4) / (4 * pi * (2 - pi));
    std::map<IsotypicLabel, std::vector<double>> r;
    switch (f) {
    case Family::C0I:
        r[IsotypicLabel::t] = {big0, big1};
        r[IsotypicLabel::s] = {q, 0.25 - 2 / (pi * sd), d / 4.0 + 0.25};
        r[IsotypicLabel::x] = {q - 1 / (pi * sd)};
        r[IsotypicLabel::y] = {P - 1 / (pi * sd)};
        break;
    case Family::C0II:
        r[IsotypicLabel::t] = {big0, big1};
        r[IsotypicLabel::s] = {q, 0.25 + (pi - 1) / (pi2 * d), d / 4.0 + 0.25};
        r[IsotypicLabel::x] = {q};
        r[IsotypicLabel::y] = {P};
        break;
    case Family::C1I:
        r[IsotypicLabel::t] = {q + 4 * (pi - 1) / (pi3 * d),
                               0.25 + (-50 * pi + 24 + pi3 + 10 * pi2) / (pi4 * d * d), big0,
                               d / 4.0 + 0.25, big1};
        r[IsotypicLabel::s] = {q + (2 - pi) / (2 * pi2 * d), q, 0.25 + (2 * pi - 3) / (pi2 * d),
                               P + 3 * (2 - pi) / (2 * pi2 * d), d / 4.0 + 0.25};
        r[IsotypicLabel::x] = {q - 1 / (pi * sd)};
        r[IsotypicLabel::y] = {P - 1 / (pi * sd)};
        break;
    case Family::C1II:
        r[IsotypicLabel::t] = {q + 2 * (pi - 2) / (pi2 * d), 0.25 + (2 * pi - 1) / (pi2 * d), big0,
                               d / 4.0 + 0.25, big1};
        r[IsotypicLabel::s] = {q - 1 / (pi2 * sd), q + (-pi3 / 2 - 8 - pi) / (pi4 * d),
                               0.25 + (-2 * pi2 - 8 + 7 * pi) / (pi3 * d), P - 1 / (pi2 * sd),
                               d / 4.0 + 0.25};
        r[IsotypicLabel::x] = {q - 1 / (pi * d)};
        r[IsotypicLabel::y] = {P};
        break;
    }
    for (auto& [label, v] : r) std::sort(v.begin(), v.end());
    return r;
}

nlohmann::json to_json(const SpectrumReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"eigenvalue", e.eigenvalue},
                           {"multiplicity", e.multiplicity},
                           {"label", to_string(e.label)}});
    }
    return {{"d", report.d}, {"entries", entries}};
}

} // namespace tangency
