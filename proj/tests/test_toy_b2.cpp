#include "tangency/errors.hpp"
#include "tangency/toy_b2.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

using namespace tangency;
using namespace tangency::toy;

namespace {

constexpr double kPi = std::numbers::pi;

double nearest(const std::vector<Point>& cloud, const Point& q) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : cloud) best = std::min(best, (p - q).norm());
    return best;
}

double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
    double h = 0;
    for (const auto& p : a) h = std::max(h, nearest(b, p));
    for (const auto& p : b) h = std::max(h, nearest(a, p));
    return h;
}

// Angle between a direction and the closest Hessian eigenvector (as lines).
double eigen_angle(const Eigen::Matrix2d& H, const Point& v) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(H);
    if (std::abs(es.eigenvalues()(0) - es.eigenvalues()(1)) < 1e-12) return 0.0;
    double best = kPi;
    for (int i = 0; i < 2; ++i) {
        const double c = std::abs(es.eigenvectors().col(i).dot(v.normalized()));
        best = std::min(best, std::acos(std::min(1.0, c)));
    }
    return best;
}

std::vector<Point> eigenvectors(const Point& c) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess_h(c));
    if (std::abs(es.eigenvalues()(0) - es.eigenvalues()(1)) < 1e-12) {
        const double s = std::sqrt(0.5);
        return {{1, 0}, {0, 1}, {s, s}, {s, -s}};
    }
    return {es.eigenvectors().col(0), es.eigenvectors().col(1)};
}

} // namespace

TEST_CASE("polynomial and derivatives") {
    CHECK(h({0, 0}) == 0.0);
    CHECK(hess_h({0, 0}) == Eigen::Matrix2d(Eigen::Vector2d(-4, -4).asDiagonal()));
    CHECK(grad_h({1, 0}).norm() == 0.0);
    const double a = std::sqrt(2.0 / 3.0);
    CHECK(grad_h({a, a}).norm() <= 1e-14);
    CHECK(h({a, a}) == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
    // The often-quoted sqrt(3/2) is not critical.
    const double b = std::sqrt(1.5);
    CHECK(grad_h({b, b}).norm() > 1.0);

    // Finite-difference oracle for the derivatives.
    const Point p(0.37, -1.21);
    const double e = 1e-6;
    for (int i = 0; i < 2; ++i) {
        Point dp = Point::Zero();
        dp(i) = e;
        CHECK(std::abs((h(p + dp) - h(p - dp)) / (2 * e) - grad_h(p)(i)) <= 1e-7);
        const Point col = (grad_h(p + dp) - grad_h(p - dp)) / (2 * e);
        CHECK((col - hess_h(p).col(i)).norm() <= 1e-7);
    }
}

TEST_CASE("critical points and the symmetry group") {
    const auto cps = critical_points();
    REQUIRE(cps.size() == 9);
    int mins = 0, saddles = 0;
    for (const auto& c : cps) {
        CHECK(grad_h(c.p).norm() <= 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess_h(c.p));
        const auto ev = es.eigenvalues();
        if (c.kind == "min") {
            ++mins;
            CHECK(ev(0) > 0);
        } else if (c.kind == "saddle") {
            ++saddles;
            CHECK(ev(0) * ev(1) < 0);
        } else {
            CHECK(ev(1) < 0);
        }
    }
    CHECK(mins == 4);
    CHECK(saddles == 4);

    const auto G = b2_group();
    REQUIRE(G.size() == 8);
    const Point p(0.3, -0.8);
    for (const auto& g : G) {
        CHECK(std::abs(h(g * p) - h(p)) <= 1e-14);
        CHECK((grad_h(g * p) - g * grad_h(p)).norm() <= 1e-14);
        CHECK((g.transpose() * g - Eigen::Matrix2d::Identity()).norm() == 0.0);
    }
}

TEST_CASE("tangency residual") {
    for (double t : {-1.7, -0.4, 0.25, 1.3}) {
        CHECK(tangency_residual({0, 0}, {t, 0}) == 0.0);
        CHECK(tangency_residual({0, 0}, {0, t}) == 0.0);
        CHECK(tangency_residual({0, 0}, {t, t}) == 0.0);
    }
    CHECK_THROWS_AS(tangency_residual({1, 0}, {1, 0}), CoincidentPoint);

    // Bisection along vertical segments brackets roots of the residual for c = (1, 0).
    const Point c(1, 0);
    int roots = 0;
    for (double x = -1.9; x < 1.9; x += 0.23) {
        const double y0 = 0.05, y1 = 1.9;
        const int n = 200;
        for (int k = 0; k < n; ++k) {
            double lo = y0 + (y1 - y0) * k / n, hi = y0 + (y1 - y0) * (k + 1) / n;
            double flo = tangency_residual(c, {x, lo}), fhi = tangency_residual(c, {x, hi});
            if ((flo > 0) == (fhi > 0)) continue;
            for (int it = 0; it < 200 && hi - lo > 0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                const double fm = tangency_residual(c, {x, mid});
                if ((fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            CHECK(std::abs(tangency_residual(c, {x, lo})) <= 1e-12);
            ++roots;
        }
    }
    CHECK(roots > 10);
}

TEST_CASE("tangency set of the origin contains axes and diagonals") {
    const Grid grid{256, 2.0};
    const auto cloud = sample_tangency_set({0, 0}, grid);
    const double cell = 2 * grid.extent / grid.resolution;
    for (double t = -1.9; t <= 1.9; t += 0.1) {
        if (std::abs(t) < 0.05) continue;
        CHECK(nearest(cloud, {t, 0}) <= cell);
        CHECK(nearest(cloud, {0, t}) <= cell);
        CHECK(nearest(cloud, {t, t}) <= cell);
        CHECK(nearest(cloud, {t, -t}) <= cell);
    }
    for (const auto& p : cloud) CHECK(p.norm() > 1e-6);
    CHECK_THROWS_AS(sample_tangency_set({0, 0}, Grid{32, 2.0}), InvalidConfig);
}

TEST_CASE("critical points lie in every tangency set") {
    for (const auto& c : critical_points()) {
        for (const auto& p : critical_points()) {
            if (p.id == c.id) continue;
            CHECK(std::abs(tangency_residual(c.p, p.p)) <= 1e-10);
        }
    }
}

TEST_CASE("tangency sets are equivariant") {
    const Grid grid{256, 2.0};
    const double cell = 2 * grid.extent / grid.resolution;
    const double a = std::sqrt(2.0 / 3.0);
    for (const Point c : {Point(1, 0), Point(a, a)}) {
        const auto base = sample_tangency_set(c, grid);
        for (const auto& g : b2_group()) {
            std::vector<Point> moved;
            for (const auto& p : base) moved.push_back(g * p);
            const auto direct = sample_tangency_set(g * c, grid);
            CHECK(hausdorff(moved, direct) <= 2 * cell);
        }
    }
}

TEST_CASE("tangency sets leave critical points along Hessian eigenvectors") {
    // Roots of the residual on a small circle about each centre.
    const double r = 1e-3;
    for (const auto& c : critical_points()) {
        const int n = 20000;
        int found = 0;
        double prev = tangency_residual(c.p, c.p + r * Point(1, 0));
        for (int k = 1; k <= n; ++k) {
            const double th = 2 * kPi * k / n;
            const Point q = c.p + r * Point(std::cos(th), std::sin(th));
            const double cur = tangency_residual(c.p, q);
            if ((cur > 0) != (prev > 0) || cur == 0.0) {
                ++found;
                INFO(c.id << " theta " << th);
                CHECK(eigen_angle(hess_h(c.p), q - c.p) <= 1e-2);
            }
            prev = cur;
        }
        CHECK(found >= 4);
    }
}

TEST_CASE("traced arcs start tangent to eigenvectors") {
    const ToyObjective f;
    TraceConfig cfg;
    cfg.r_max = 2e-3;
    for (const auto& c : critical_points()) {
        for (const Point& e : eigenvectors(c.p)) {
            for (int sgn : {1, -1}) {
                const ArcRecord arc = trace_arc(f, c.p, double(sgn) * e, cfg);
                REQUIRE(arc.samples.size() >= 3);
                const ArcSample* at = nullptr;
                for (const auto& s : arc.samples)
                    if (std::abs(s.r - 1e-3) <= 1e-6) at = &s;
                REQUIRE(at != nullptr);
                const Point v = (at->xi - c.p) / at->r;
                CHECK(eigen_angle(hess_h(c.p), v) <= 1e-2);
            }
        }
    }
}

TEST_CASE("arc from a minimum reaches the saddle orbit") {
    const ToyObjective f;
    TraceConfig cfg;
    cfg.r_max = 3.0;
    const double a = std::sqrt(2.0 / 3.0);
    const Point c(a, a);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess_h(c));
    const Point v = es.eigenvectors().col(0);
    for (int sgn : {1, -1}) {
        const ArcRecord arc = trace_arc(f, c, double(sgn) * v, cfg);
        const Point end = arc.samples.back().xi;
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& g : b2_group()) dist = std::min(dist, (end - g * Point(1, 0)).norm());
        INFO("terminal " << end.transpose() << " " << to_string(arc.termination));
        CHECK(dist <= 1e-3);
    }
}

TEST_CASE("point cloud CSV") {
    std::ostringstream os;
    write_point_cloud_csv(os, {Point(0.5, -0.25)}, "saddle+x");
    CHECK(os.str() == "0.5,-0.25,saddle+x\n");
}
