#include "tangency/toy_b2.hpp"

#include "tangency/errors.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace tangency::toy {

double h(const Point& p) {
    const double x2 = p.x() * p.x(), y2 = p.y() * p.y();
    return x2 * x2 + x2 * y2 + y2 * y2 - 2.0 * x2 - 2.0 * y2;
}

Point grad_h(const Point& p) {
    const double x = p.x(), y = p.y();
    return {4 * x * x * x + 2 * x * y * y - 4 * x, 4 * y * y * y + 2 * x * x * y - 4 * y};
}

Eigen::Matrix2d hess_h(const Point& p) {
    const double x = p.x(), y = p.y();
    Eigen::Matrix2d H;
    H << 12 * x * x + 2 * y * y - 4, 4 * x * y, 4 * x * y, 12 * y * y + 2 * x * x - 4;
    return H;
}

double tangency_residual(const Point& c, const Point& p) {
    const Point u = p - c;
    if (u.norm() == 0.0) {
        throw CoincidentPoint("residual is undefined at the centre");
    }
    const Point g = grad_h(p);
    return g.x() * u.y() - g.y() * u.x();
}

std::vector<CriticalPoint> critical_points() {
    const double a = std::sqrt(2.0 / 3.0);
    return {
        {{0, 0}, "max", "max"},
        {{1, 0}, "saddle", "saddle+x"},
        {{-1, 0}, "saddle", "saddle-x"},
        {{0, 1}, "saddle", "saddle+y"},
        {{0, -1}, "saddle", "saddle-y"},
        {{a, a}, "min", "min++"},
        {{-a, a}, "min", "min-+"},
        {{-a, -a}, "min", "min--"},
        {{a, -a}, "min", "min+-"},
    };
}

std::vector<Eigen::Matrix2d> b2_group() {
    std::vector<Eigen::Matrix2d> g;
    for (int swap = 0; swap < 2; ++swap) {
        for (int sx : {1, -1}) {
            for (int sy : {1, -1}) {
                Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
                if (swap) {
                    M(0, 1) = sx;
                    M(1, 0) = sy;
                } else {
                    M(0, 0) = sx;
                    M(1, 1) = sy;
                }
                g.push_back(M);
            }
        }
    }
    return g;
}

std::vector<Point> sample_tangency_set(const Point& c, const Grid& grid) {
    if (grid.resolution < 64) {
        throw InvalidConfig("tangency grid needs resolution >= 64");
    }
    const int n = grid.resolution;
    const double lo = -grid.extent;
    const double step = 2.0 * grid.extent / n;
    auto coord = [&](int i) { return lo + i * step; };

    // Values on the (n+1)^2 vertices; the centre itself gets a zero residual.
    std::vector<double> f((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            const Point p(coord(i), coord(j));
            const Point u = p - c;
            const Point g = grad_h(p);
            f[j * (n + 1) + i] = g.x() * u.y() - g.y() * u.x();
        }
    }
    auto val = [&](int i, int j) { return f[j * (n + 1) + i]; };

    std::vector<Point> out;
    auto cross = [&](int i0, int j0, int i1, int j1) {
        const double a = val(i0, j0), b = val(i1, j1);
        if ((a > 0) == (b > 0) && a != 0.0 && b != 0.0) return;
        if (a == b) return;
        const double t = a / (a - b);
        const Point p(coord(i0) + t * (coord(i1) - coord(i0)), coord(j0) + t * (coord(j1) - coord(j0)));
        if ((p - c).norm() > 1e-6) out.push_back(p);
    };
    // Each cell edge is visited once: bottom and left edges of every cell, plus
    // the outer top and right boundaries.
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            if (i < n) cross(i, j, i + 1, j);
            if (j < n) cross(i, j, i, j + 1);
        }
    }
    return out;
}

double ToyObjective::value(const Vector& x) const { return h(Point(x(0), x(1))); }

Vector ToyObjective::gradient(const Vector& x) const { return grad_h(Point(x(0), x(1))); }

Matrix ToyObjective::hessian(const Vector& x) const { return hess_h(Point(x(0), x(1))); }

void write_point_cloud_csv(std::ostream& os, const std::vector<Point>& pts, const std::string& id) {
    os << std::setprecision(17);
    for (const auto& p : pts) os << p.x() << ',' << p.y() << ',' << id << '\n';
}

} // namespace tangency::toy
