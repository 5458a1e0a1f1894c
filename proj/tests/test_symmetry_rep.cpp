#include "tangency/errors.hpp"
#include "tangency/symmetry_rep.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace tangency;

namespace {

constexpr IsotypicLabel kLabels[] = {IsotypicLabel::t, IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y};

Matrix random_matrix(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = g(rng);
    return M;
}

// Random element of the Young subgroup: shuffle inside each block.
std::vector<int> random_group_element(const YoungPartitionGroup& G, std::mt19937_64& rng) {
    std::vector<int> p(G.d());
    std::iota(p.begin(), p.end(), 0);
    for (int b = 0; b < G.block_count(); ++b) {
        std::shuffle(p.begin() + G.offset(b), p.begin() + G.offset(b) + G.blocks()[b], rng);
    }
    return p;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Projector onto an isotypic component of (M(d,d), S_d) by averaging
// chi(g) g.M over the whole group. chi is written in terms of the number of
// fixed points f and 2-cycles t2 of g.
Matrix group_average_projection(const Matrix& M, IsotypicLabel label) {
    const int d = static_cast<int>(M.rows());
    const auto perms = all_permutations(d);
    int dim = 1;
    switch (label) {
    case IsotypicLabel::t: dim = 1; break;
    case IsotypicLabel::s: dim = d - 1; break;
    case IsotypicLabel::x: dim = (d - 1) * (d - 2) / 2; break;
    case IsotypicLabel::y: dim = d * (d - 3) / 2; break;
    }
    Matrix acc = Matrix::Zero(d, d);
    for (const auto& p : perms) {
        int f = 0, t2 = 0;
        for (int i = 0; i < d; ++i) {
            if (p[i] == i) ++f;
            else if (p[p[i]] == i && i < p[i]) ++t2;
        }
        double chi = 0;
        switch (label) {
        case IsotypicLabel::t: chi = 1; break;
        case IsotypicLabel::s: chi = f - 1; break;
        case IsotypicLabel::x: chi = ((f - 1.0) * (f - 1.0) - (f + 2.0 * t2 - 1.0)) / 2.0; break;
        case IsotypicLabel::y: chi = f * (f - 3.0) / 2.0 + t2; break;
        }
        if (chi != 0) acc += chi * permute(M, p);
    }
    return acc * double(dim) / double(perms.size());
}

// Orbits of index pairs under the group, by brute-force closure.
int orbit_count(const YoungPartitionGroup& G) {
    const int d = G.d();
    std::vector<std::vector<int>> gens;
    for (int b = 0; b < G.block_count(); ++b) {
        for (int i = 1; i < G.blocks()[b]; ++i) {
            std::vector<int> p(d);
            std::iota(p.begin(), p.end(), 0);
            std::swap(p[G.offset(b)], p[G.offset(b) + i]);
            gens.push_back(p);
        }
    }
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (seen.count({i, j})) continue;
            ++orbits;
            std::vector<std::pair<int, int>> stack{{i, j}};
            seen.insert({i, j});
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                for (const auto& g : gens) {
                    std::pair<int, int> n{g[a], g[b]};
                    if (seen.insert(n).second) stack.push_back(n);
                }
            }
        }
    }
    return orbits;
}

int rank_of(const std::vector<Matrix>& ms, double tol = 1e-9) {
    if (ms.empty()) return 0;
    const int n = static_cast<int>(ms[0].size());
    Matrix A(n, static_cast<Eigen::Index>(ms.size()));
    for (std::size_t k = 0; k < ms.size(); ++k) {
        A.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Vector>(ms[k].data(), n);
    }
    Eigen::JacobiSVD<Matrix> svd(A);
    return static_cast<int>((svd.singularValues().array() > tol).count());
}

std::vector<Matrix> elementary(int d) {
    std::vector<Matrix> out;
    for (int k = 0; k < d * d; ++k) {
        Matrix E = Matrix::Zero(d, d);
        E(k % d, k / d) = 1.0;
        out.push_back(E);
    }
    return out;
}

} // namespace

TEST_CASE("chart dimensions") {
    CHECK(build_chart(5, YoungPartitionGroup({5})).N() == 2);
    CHECK(build_chart(7, YoungPartitionGroup({6, 1})).N() == 5);
    CHECK(build_chart(7, YoungPartitionGroup({4, 1, 1, 1})).N() == 17);
    for (int d : {6, 9}) {
        for (int k = 0; k <= 3; ++k) {
            const auto G = YoungPartitionGroup::hook(d, k);
            CHECK(build_chart(d, G).N() == k * k + 2 * k + 2);
            CHECK(build_chart(d, G).N() == orbit_count(G));
        }
    }
    const YoungPartitionGroup odd({3, 2, 2, 1});
    CHECK(build_chart(8, odd).N() == orbit_count(odd));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(YoungPartitionGroup({3, 0}), InvalidPartition);
    CHECK_THROWS_AS(YoungPartitionGroup(std::vector<int>{}), InvalidPartition);
    CHECK_THROWS_AS(build_chart(7, YoungPartitionGroup({5, 1})), InvalidPartition);
    CHECK(YoungPartitionGroup::hook(7, 2).to_string() == "(5,1,1)");
}

TEST_CASE("chart basis is orthonormal and group fixed") {
    std::mt19937_64 rng(1);
    for (const auto& G : {YoungPartitionGroup({7}), YoungPartitionGroup({6, 1}), YoungPartitionGroup({4, 1, 1, 1}),
                          YoungPartitionGroup({3, 3, 1})}) {
        const auto chart = build_chart(7, G);
        for (int a = 0; a < chart.N(); ++a) {
            for (int b = 0; b < chart.N(); ++b) {
                const double ip = chart.basis()[a].cwiseProduct(chart.basis()[b]).sum();
                CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-12);
            }
            for (int rep = 0; rep < 5; ++rep) {
                const auto g = random_group_element(G, rng);
                CHECK((permute(chart.basis()[a], g) - chart.basis()[a]).norm() <= 1e-12);
            }
        }
    }
}

TEST_CASE("embed and project") {
    std::mt19937_64 rng(2);
    const auto chart = build_chart(8, YoungPartitionGroup::hook(8, 2));
    CHECK(embed(chart, Vector::Zero(chart.N())).norm() == 0.0);
    for (int rep = 0; rep < 5; ++rep) {
        Vector xi = random_matrix(chart.N(), rng).col(0);
        CHECK(std::abs(embed(chart, xi).norm() - xi.norm()) <= 1e-12);
        CHECK((project(chart, embed(chart, xi)) - xi).norm() <= 1e-12);
        const Matrix M = random_matrix(8, rng);
        const Matrix PM = embed(chart, project(chart, M));
        CHECK((embed(chart, project(chart, PM)) - PM).norm() <= 1e-12);
    }
    CHECK_THROWS_AS(embed(chart, Vector::Zero(3)), DimensionMismatch);
    CHECK_THROWS_AS(project(chart, Matrix::Zero(5, 5)), DimensionMismatch);
}

TEST_CASE("the hook chart reproduces the five-parameter block form") {
    const int d = 7;
    const auto chart = build_chart(d, YoungPartitionGroup({6, 1}));
    const double x1 = -0.8, x2 = 0.2, x3 = 0.05, x4 = -0.1, x5 = 1.1;
    Matrix W = Matrix::Constant(d, d, 0.0);
    W.topLeftCorner(6, 6).setConstant(x2);
    W.topLeftCorner(6, 6).diagonal().setConstant(x1);
    W.topRightCorner(6, 1).setConstant(x3);
    W.bottomLeftCorner(1, 6).setConstant(x4);
    W(6, 6) = x5;
    const Vector xi = project(chart, W);
    CHECK((embed(chart, xi) - W).norm() <= 1e-12);
    // Coordinates are the parameters scaled by the orbit indicator norms.
    CHECK(xi(0) == doctest::Approx(x1 * std::sqrt(6.0)));
    CHECK(xi(1) == doctest::Approx(x2 * std::sqrt(30.0)));
    CHECK(xi(2) == doctest::Approx(x3 * std::sqrt(6.0)));
    CHECK(xi(3) == doctest::Approx(x4 * std::sqrt(6.0)));
    CHECK(xi(4) == doctest::Approx(x5));
}

TEST_CASE("full-group chart projection equals exact group averaging") {
    std::mt19937_64 rng(3);
    const int d = 5;
    const auto chart = build_chart(d, YoungPartitionGroup({d}));
    const auto perms = all_permutations(d);
    const Matrix M = random_matrix(d, rng);
    Matrix avg = Matrix::Zero(d, d);
    for (const auto& p : perms) avg += permute(M, p);
    avg /= double(perms.size());
    const Matrix PM = embed(chart, project(chart, M));
    CHECK((PM - avg).norm() <= 1e-12);
    Matrix off = M;
    off.diagonal().setZero();
    CHECK(PM(0, 0) == doctest::Approx(M.trace() / d));
    CHECK(PM(0, 1) == doctest::Approx(off.sum() / (d * (d - 1.0))));
}

TEST_CASE("isotypic projectors agree with character averaging over S_d") {
    std::mt19937_64 rng(4);
    for (int d : {4, 5, 6}) {
        for (int rep = 0; rep < 2; ++rep) {
            const Matrix M = random_matrix(d, rng);
            for (IsotypicLabel l : kLabels) {
                CHECK((isotypic_project(M, l) - group_average_projection(M, l)).cwiseAbs().maxCoeff() <= 1e-12);
            }
        }
    }
}

TEST_CASE("isotypic ranks at d = 6") {
    const std::map<IsotypicLabel, int> want{{IsotypicLabel::t, 2}, {IsotypicLabel::s, 15},
                                            {IsotypicLabel::x, 10}, {IsotypicLabel::y, 9}};
    for (IsotypicLabel l : kLabels) {
        std::vector<Matrix> ours, avg;
        for (const Matrix& E : elementary(6)) {
            ours.push_back(isotypic_project(E, l));
            avg.push_back(group_average_projection(E, l));
        }
        CHECK(rank_of(ours) == want.at(l));
        CHECK(rank_of(avg) == want.at(l));
    }
}

TEST_CASE("projector algebra, also relative to a smaller block") {
    std::mt19937_64 rng(5);
    for (auto [d, m] : {std::pair{9, 9}, std::pair{9, 8}, std::pair{10, 7}}) {
        const Matrix M = random_matrix(d, rng);
        const Matrix N = random_matrix(d, rng);
        Matrix sum = Matrix::Zero(d, d);
        for (IsotypicLabel a : kLabels) {
            const Matrix Pa = isotypic_project(M, a, m);
            sum += Pa;
            CHECK((isotypic_project(Pa, a, m) - Pa).norm() <= 1e-12);
            const double lhs = Pa.cwiseProduct(N).sum();
            const double rhs = M.cwiseProduct(isotypic_project(N, a, m)).sum();
            CHECK(std::abs(lhs - rhs) <= 1e-12);
            for (IsotypicLabel b : kLabels) {
                if (a == b) continue;
                CHECK(isotypic_project(Pa, b, m).norm() <= 1e-12);
            }
        }
        CHECK((sum - M).norm() <= 1e-12);
    }
}

TEST_CASE("projector equivariance") {
    std::mt19937_64 rng(6);
    const int d = 8;
    const Matrix M = random_matrix(d, rng);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> p(d);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        for (IsotypicLabel l : kLabels) {
            CHECK((isotypic_project(permute(M, p), l) - permute(isotypic_project(M, l), p)).norm() <= 1e-12);
        }
    }
}

TEST_CASE("simple members of the components") {
    const Matrix I = Matrix::Identity(6, 6);
    CHECK((isotypic_project(I, IsotypicLabel::t) - I).norm() <= 1e-12);
    for (IsotypicLabel l : {IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y}) {
        CHECK(isotypic_project(I, l).norm() <= 1e-12);
    }
    std::mt19937_64 rng(7);
    Matrix A = random_matrix(6, rng);
    A = A - A.transpose().eval();
    // Remove row sums while keeping skew symmetry.
    const Vector r = A.rowwise().sum() / 6.0;
    A -= r.replicate(1, 6) - r.transpose().replicate(6, 1);
    REQUIRE(A.rowwise().sum().norm() <= 1e-12);
    CHECK((isotypic_project(A, IsotypicLabel::x) - A).norm() <= 1e-12);
}

TEST_CASE("dimension identity") {
    for (int d = 4; d <= 40; ++d) {
        CHECK(2 + 3 * (d - 1) + (d - 1) * (d - 2) / 2 + d * (d - 3) / 2 == d * d);
    }
}

TEST_CASE("fixed-space intersections") {
    for (int d : {6, 9}) {
        auto dim_in = [&](IsotypicLabel l, int k) {
            const auto chart = build_chart(d, YoungPartitionGroup::hook(d, k));
            std::vector<Matrix> pr;
            for (const Matrix& B : chart.basis()) pr.push_back(isotypic_project(B, l));
            return rank_of(pr);
        };
        CHECK(dim_in(IsotypicLabel::x, 0) == 0);
        CHECK(dim_in(IsotypicLabel::x, 1) == 0);
        CHECK(dim_in(IsotypicLabel::x, 2) == 1);
        CHECK(dim_in(IsotypicLabel::y, 0) == 0);
        CHECK(dim_in(IsotypicLabel::y, 1) == 0);
        CHECK(dim_in(IsotypicLabel::y, 2) == 1);
        CHECK(dim_in(IsotypicLabel::s, 1) == 3);
        CHECK(dim_in(IsotypicLabel::t, 0) == 2);
    }
}

TEST_CASE("representatives") {
    Matrix s1 = representative(IsotypicLabel::s, 1, 4);
    Matrix want = Vector(Eigen::Vector4d(1, 1, 1, -3)).asDiagonal();
    CHECK((s1 - want).norm() == 0.0);

    const Matrix X = representative(IsotypicLabel::x, 1, 4);
    Matrix wx(4, 4);
    wx << 0, 0, -0.5, 0.5,
          0, 0, -0.5, 0.5,
          0.5, 0.5, 0, -1,
          -0.5, -0.5, 1, 0;
    CHECK((X - wx).norm() == 0.0);
    CHECK((X + X.transpose()).norm() == 0.0);

    for (int d : {6, 9}) {
        for (int p : {0, 1, 2}) {
            const int m = d - p;
            for (IsotypicLabel l : {IsotypicLabel::s, IsotypicLabel::x, IsotypicLabel::y}) {
                for (int c = 1; c <= representative_copies(l, p); ++c) {
                    const Matrix R = representative(l, c, d, p);
                    CHECK(R.norm() > 0.0);
                    CHECK((isotypic_project(R, l, m) - R).norm() <= 1e-12);
                }
            }
            // The s copies are mutually orthogonal.
            for (int a = 1; a <= 3 + 2 * p; ++a)
                for (int b = a + 1; b <= 3 + 2 * p; ++b)
                    CHECK(std::abs(representative(IsotypicLabel::s, a, d, p)
                                       .cwiseProduct(representative(IsotypicLabel::s, b, d, p))
                                       .sum()) <= 1e-12);
        }
        CHECK(detect_diagonal_isotropy(representative(IsotypicLabel::s, 2, d)) == YoungPartitionGroup::hook(d, 1));
        CHECK(detect_diagonal_isotropy(representative(IsotypicLabel::x, 1, d)) == YoungPartitionGroup::hook(d, 2));
        CHECK(detect_diagonal_isotropy(representative(IsotypicLabel::y, 1, d)) == YoungPartitionGroup({d - 2, 2}));
    }
    CHECK_THROWS_AS(representative(IsotypicLabel::t, 1, 6), UnsupportedLabel);
    CHECK_THROWS_AS(representative(IsotypicLabel::s, 4, 6), InvalidConfig);
}

TEST_CASE("isotropy detection") {
    CHECK(detect_diagonal_isotropy(Matrix::Identity(7, 7)) == YoungPartitionGroup({7}));
    const auto chart = build_chart(7, YoungPartitionGroup({6, 1}));
    Vector xi(5);
    xi << -2.1, 0.4, 0.13, -0.27, 0.9;
    CHECK(detect_diagonal_isotropy(embed(chart, xi)) == YoungPartitionGroup({6, 1}));
    // Blocks are reported by size even when the indices are scattered.
    std::vector<int> p{3, 0, 6, 1, 5, 2, 4};
    CHECK(detect_diagonal_isotropy(permute(embed(chart, xi), p)) == YoungPartitionGroup({6, 1}));
    CHECK(detect_diagonal_isotropy(representative(IsotypicLabel::x, 1, 7)) == YoungPartitionGroup({5, 1, 1}));
}
