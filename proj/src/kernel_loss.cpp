#include "tangency/kernel_loss.hpp"

#include "tangency/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tangency {

namespace {

constexpr double kPi = std::numbers::pi;

// Rows closer than this to antiparallel make the angle gradient blow up.
constexpr double kAntiparallelAngle = 1e-9;

Eigen::ArrayXd row_norms(const Matrix& W) {
    Eigen::ArrayXd n = W.rowwise().norm().array();
    for (Eigen::Index i = 0; i < n.size(); ++i) {
        if (!(n(i) > kNormEps)) {
            throw DegenerateVector("row " + std::to_string(i) + " has norm " +
                                   std::to_string(n(i)));
        }
    }
    return n;
}

Eigen::ArrayXXd clamped_acos(const Eigen::ArrayXXd& c) {
    return c.max(-1.0).min(1.0).acos();
}

} // namespace

WeightMatrix::WeightMatrix(Matrix entries) : w_(std::move(entries)) {
    if (w_.rows() != w_.cols()) {
        throw DimensionMismatch("weight matrix must be square");
    }
    if (w_.rows() < 4) {
        throw InvalidConfig("weight matrix needs d >= 4");
    }
    if (!w_.allFinite()) {
        throw InvalidConfig("weight matrix has non-finite entries");
    }
}

KernelAngle kernel_angle(const Vector& w, const Vector& v) {
    const double nw = w.norm();
    const double nv = v.norm();
    if (!(nw > kNormEps) || !(nv > kNormEps)) {
        throw DegenerateVector("kernel argument has vanishing norm");
    }
    const double c = std::clamp(w.dot(v) / (nw * nv), -1.0, 1.0);
    return {std::acos(c), nw * nv};
}

double kernel_phi(const Vector& w, const Vector& v) {
    const auto [theta, np] = kernel_angle(w, v);
    return np / kPi * (std::sin(theta) + (kPi - theta) * std::cos(theta));
}

double loss(const WeightMatrix& Wm) {
    const Matrix& W = Wm.entries();
    const int d = Wm.d();
    const Eigen::ArrayXd n = row_norms(W);

    const Eigen::ArrayXXd nn = n.matrix() * n.matrix().transpose();
    const Eigen::ArrayXXd th = clamped_acos((W * W.transpose()).array() / nn);
    const Eigen::ArrayXXd phi_ww = nn / kPi * (th.sin() + (kPi - th) * th.cos());

    // Teacher rows are unit vectors e_j, so the cosine is W_ij / |w_i|.
    const Eigen::ArrayXXd nt = n.replicate(1, d);
    const Eigen::ArrayXXd tt = clamped_acos(W.array() / nt);
    const Eigen::ArrayXXd phi_wt = nt / kPi * (tt.sin() + (kPi - tt) * tt.cos());

    Eigen::ArrayXXd phi_tt = Eigen::ArrayXXd::Constant(d, d, 1.0 / kPi);
    phi_tt.matrix().diagonal().setOnes();

    // k = phi / 2, so 1/2 [S_ww - 2 S_wt + S_tt] picks up another factor 1/2.
    // Summing entrywise differences keeps the cancellation local near W = I.
    return 0.25 * (phi_ww - 2.0 * phi_wt + phi_tt).sum();
}

Matrix grad_loss(const WeightMatrix& Wm) {
    const Matrix& W = Wm.entries();
    const Eigen::ArrayXd n = row_norms(W);
    const Matrix What = (W.array().colwise() / n).matrix();

    Eigen::ArrayXXd th = clamped_acos((What * What.transpose()).array());
    Eigen::ArrayXXd tt = clamped_acos(What.array());
    if ((th > kPi - kAntiparallelAngle).any() || (tt > kPi - kAntiparallelAngle).any()) {
        throw NearParallelRows("antiparallel rows make the angle gradient singular");
    }
    th.matrix().diagonal().setZero();

    // Student-student: row i collects sum_{j != i} (|w_j| sin t_ij w^_i + (pi - t_ij) w_j) / 2pi.
    Eigen::ArrayXXd P = kPi - th;
    P.matrix().diagonal().setZero();
    const Eigen::ArrayXd sn = (th.sin().rowwise() * n.transpose()).rowwise().sum();
    Matrix G = (What.array().colwise() * sn).matrix() + P.matrix() * W;

    // Student-teacher: |e_j| = 1 and the teacher matrix is I.
    const Eigen::ArrayXd st = tt.sin().rowwise().sum();
    G -= (What.array().colwise() * st).matrix() + (kPi - tt).matrix();

    G /= 2.0 * kPi;
    G += 0.5 * W;
    return G;
}

Matrix hvp(const WeightMatrix& Wm, const Matrix& V, double h) {
    const double vn = V.norm();
    if (!(vn > 0.0)) {
        throw InvalidConfig("hvp direction must be nonzero");
    }
    if (V.rows() != Wm.d() || V.cols() != Wm.d()) {
        throw DimensionMismatch("hvp direction has the wrong shape");
    }
    if (h <= 0.0) {
        h = 1e-6 * (1.0 + Wm.entries().norm()) / vn;
    }
    const Matrix gp = grad_loss(WeightMatrix(Wm.entries() + h * V));
    const Matrix gm = grad_loss(WeightMatrix(Wm.entries() - h * V));
    return (gp - gm) / (2.0 * h);
}

} // namespace tangency
