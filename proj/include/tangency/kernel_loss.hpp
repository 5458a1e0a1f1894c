#pragma once

#include <Eigen/Dense>

namespace tangency {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kNormEps = 1e-12;

// First-layer weights of the student; the teacher is the identity of the same size.
class WeightMatrix {
public:
    explicit WeightMatrix(Matrix entries);

    const Matrix& entries() const { return w_; }
    int d() const { return static_cast<int>(w_.rows()); }

private:
    Matrix w_;
};

struct KernelAngle {
    double theta;
    double norm_product;
};

KernelAngle kernel_angle(const Vector& w, const Vector& v);

// (1/pi)|w||v|(sin t + (pi - t) cos t). Twice the arc-cosine kernel E[relu relu].
double kernel_phi(const Vector& w, const Vector& v);

double loss(const WeightMatrix& W);
Matrix grad_loss(const WeightMatrix& W);

// Central difference of grad_loss along V. h <= 0 picks 1e-6 (1 + |W|) / |V|.
Matrix hvp(const WeightMatrix& W, const Matrix& V, double h = 0.0);

} // namespace tangency
