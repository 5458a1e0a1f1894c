#pragma once

#include "tangency/tangency_tracer.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace tangency::toy {

using Point = Eigen::Vector2d;

// h(x, y) = x^4 + x^2 y^2 + y^4 - 2x^2 - 2y^2, invariant under the eight
// signed coordinate permutations.
double h(const Point& p);
Point grad_h(const Point& p);
Eigen::Matrix2d hess_h(const Point& p);

// grad h(p) x (p - c); zero exactly where p is in the tangency set of c.
double tangency_residual(const Point& c, const Point& p);

struct CriticalPoint {
    Point p;
    std::string kind;  // max, saddle or min
    std::string id;
};

// The nine critical points: the origin, the four saddles (+-1, 0), (0, +-1)
// and the four minima (+-a, +-a) with a = sqrt(2/3).
std::vector<CriticalPoint> critical_points();

// The eight elements of the symmetry group as 2 x 2 signed permutation matrices.
std::vector<Eigen::Matrix2d> b2_group();

struct Grid {
    int resolution = 512;
    double extent = 2.0;
};

// Marching-squares zero contour of the residual with linear interpolation on
// [-extent, extent]^2, omitting a 1e-6 disk around c.
std::vector<Point> sample_tangency_set(const Point& c, const Grid& grid = {});

class ToyObjective : public Objective {
public:
    int dim() const override { return 2; }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    Matrix hessian(const Vector& x) const override;
};

void write_point_cloud_csv(std::ostream& os, const std::vector<Point>& pts, const std::string& id);

} // namespace tangency::toy
