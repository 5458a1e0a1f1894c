#include "tangency/symmetry_rep.hpp"

#include "tangency/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tangency {

YoungPartitionGroup::YoungPartitionGroup(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw InvalidPartition("partition has no blocks");
    }
    offsets_.reserve(blocks_.size());
    for (int a : blocks_) {
        if (a < 1) {
            throw InvalidPartition("block sizes must be positive");
        }
        offsets_.push_back(d_);
        d_ += a;
    }
}

YoungPartitionGroup YoungPartitionGroup::hook(int d, int k) {
    if (k < 0 || k >= d) {
        throw InvalidPartition("hook (" + std::to_string(d - k) + ", 1^" + std::to_string(k) +
                               ") is not a partition of " + std::to_string(d));
    }
    std::vector<int> b{d - k};
    b.insert(b.end(), k, 1);
    return YoungPartitionGroup(std::move(b));
}

std::string YoungPartitionGroup::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        os << (i ? "," : "") << blocks_[i];
    }
    os << ')';
    return os.str();
}

FixedPointChart::FixedPointChart(YoungPartitionGroup group, std::vector<Matrix> basis)
    : group_(std::move(group)), basis_(std::move(basis)) {}

const char* to_string(IsotypicLabel label) {
    switch (label) {
    case IsotypicLabel::t: return "t";
    case IsotypicLabel::s: return "s";
    case IsotypicLabel::x: return "x";
    case IsotypicLabel::y: return "y";
    }
    return "?";
}

IsotypicLabel label_from_string(const std::string& name) {
    if (name == "t") return IsotypicLabel::t;
    if (name == "s") return IsotypicLabel::s;
    if (name == "x") return IsotypicLabel::x;
    if (name == "y") return IsotypicLabel::y;
    throw UnsupportedLabel("unknown isotypic label '" + name + "'");
}

FixedPointChart build_chart(int d, const YoungPartitionGroup& group) {
    if (d < 4) {
        throw InvalidPartition("charts need d >= 4");
    }
    if (group.d() != d) {
        throw InvalidPartition("partition " + group.to_string() + " does not sum to " +
                               std::to_string(d));
    }
    // Orbits of index pairs: per block a diagonal and (if the block has two or
    // more indices) an off-diagonal orbit, per ordered pair of distinct blocks
    // one rectangle.
    std::vector<Matrix> basis;
    const int q = group.block_count();
    for (int b = 0; b < q; ++b) {
        const int ob = group.offset(b), ab = group.blocks()[b];
        for (int c = 0; c < q; ++c) {
            const int oc = group.offset(c), ac = group.blocks()[c];
            if (b == c) {
                Matrix D = Matrix::Zero(d, d);
                D.block(ob, ob, ab, ab).diagonal().setOnes();
                basis.push_back(D / std::sqrt(double(ab)));
                if (ab >= 2) {
                    Matrix O = Matrix::Zero(d, d);
                    O.block(ob, ob, ab, ab).setOnes();
                    O.block(ob, ob, ab, ab).diagonal().setZero();
                    basis.push_back(O / std::sqrt(double(ab) * (ab - 1)));
                }
            } else {
                Matrix R = Matrix::Zero(d, d);
                R.block(ob, oc, ab, ac).setOnes();
                basis.push_back(R / std::sqrt(double(ab) * ac));
            }
        }
    }
    return FixedPointChart(group, std::move(basis));
}

Matrix embed(const FixedPointChart& chart, const Vector& xi) {
    if (xi.size() != chart.N()) {
        throw DimensionMismatch("chart has " + std::to_string(chart.N()) + " coordinates, got " +
                                std::to_string(xi.size()));
    }
    Matrix M = Matrix::Zero(chart.d(), chart.d());
    for (int k = 0; k < chart.N(); ++k) {
        M += xi(k) * chart.basis()[k];
    }
    return M;
}

Vector project(const FixedPointChart& chart, const Matrix& M) {
    if (M.rows() != chart.d() || M.cols() != chart.d()) {
        throw DimensionMismatch("matrix does not match chart size " + std::to_string(chart.d()));
    }
    Vector xi(chart.N());
    for (int k = 0; k < chart.N(); ++k) {
        xi(k) = chart.basis()[k].cwiseProduct(M).sum();
    }
    return xi;
}

Matrix isotypic_project(const Matrix& M, IsotypicLabel label, int m) {
    const int d = static_cast<int>(M.rows());
    if (M.cols() != d) {
        throw DimensionMismatch("isotypic projection needs a square matrix");
    }
    if (m <= 0) m = d;
    if (m < 4 || m > d) {
        throw InvalidConfig("isotypic projection needs 4 <= m <= d");
    }
    const int p = d - m;
    const Matrix B = M.topLeftCorner(m, m);
    Matrix out = Matrix::Zero(d, d);
    auto big = out.topLeftCorner(m, m);

    const Vector diag = B.diagonal();
    const double dmean = diag.mean();
    Matrix O = B;
    O.diagonal().setZero();
    const Matrix S = 0.5 * (O + O.transpose());
    const Matrix A = 0.5 * (O - O.transpose());

    // Skew part: the row-sum carrying piece x_i - x_j belongs to s.
    const Vector ax = A.rowwise().sum() / double(m);
    Matrix A1 = ax.replicate(1, m) - ax.transpose().replicate(m, 1);

    // Symmetric off-diagonal part: constant piece (t), x_i + x_j piece (s), rest (y).
    const double smean = S.sum() / (double(m) * (m - 1));
    Matrix S1 = Matrix::Constant(m, m, smean);
    S1.diagonal().setZero();
    const Matrix Sp = S - S1;
    const Vector sx = Sp.rowwise().sum() / double(m - 2);
    Matrix S2 = sx.replicate(1, m) + sx.transpose().replicate(m, 1);
    S2.diagonal().setZero();

    switch (label) {
    case IsotypicLabel::t:
        big = S1;
        big.diagonal().setConstant(dmean);
        if (p > 0) {
            const Matrix C = M.topRightCorner(m, p);
            const Matrix R = M.bottomLeftCorner(p, m);
            out.topRightCorner(m, p) = C.colwise().mean().replicate(m, 1);
            out.bottomLeftCorner(p, m) = R.rowwise().mean().replicate(1, m);
            out.bottomRightCorner(p, p) = M.bottomRightCorner(p, p);
        }
        break;
    case IsotypicLabel::s:
        big = S2 + A1;
        big.diagonal() = (diag.array() - dmean).matrix();
        if (p > 0) {
            const Matrix C = M.topRightCorner(m, p);
            const Matrix R = M.bottomLeftCorner(p, m);
            out.topRightCorner(m, p) = C - C.colwise().mean().replicate(m, 1);
            out.bottomLeftCorner(p, m) = R - R.rowwise().mean().replicate(1, m);
        }
        break;
    case IsotypicLabel::x:
        big = A - A1;
        break;
    case IsotypicLabel::y:
        big = Sp - S2;
        break;
    }
    return out;
}

int representative_copies(IsotypicLabel label, int p) {
    switch (label) {
    case IsotypicLabel::s: return 3 + 2 * p;
    case IsotypicLabel::x:
    case IsotypicLabel::y: return 1;
    case IsotypicLabel::t: break;
    }
    throw UnsupportedLabel("the t component is spanned by the isotropy chart");
}

Matrix representative(IsotypicLabel label, int copy, int d, int p) {
    const int m = d - p;
    if (p < 0 || m < 4) {
        throw InvalidConfig("representatives need d - p >= 4");
    }
    const int copies = representative_copies(label, p);
    if (copy < 1 || copy > copies) {
        throw InvalidConfig(std::string("copy index out of range for label ") + to_string(label));
    }
    Matrix R = Matrix::Zero(d, d);
    if (label == IsotypicLabel::s) {
        Vector x = Vector::Ones(m);
        x(m - 1) = -(m - 1.0);
        if (copy == 1) {
            R.topLeftCorner(m, m).diagonal() = x;
        } else if (copy == 2 || copy == 3) {
            const double sgn = copy == 2 ? 1.0 : -1.0;
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    if (i != j) R(i, j) = x(i) + sgn * x(j);
                }
            }
        } else {
            const int q = (copy - 4) / 2;
            if ((copy - 4) % 2 == 0) {
                R.block(0, m + q, m, 1) = x;
            } else {
                R.block(m + q, 0, 1, m) = x.transpose();
            }
        }
        return R;
    }

    // Two distinguished indices n and n + 1 at the end of the m-block.
    const int n = m - 2;
    if (label == IsotypicLabel::x) {
        R.block(0, n, n, 1).setConstant(-1.0 / n);
        R.block(0, n + 1, n, 1).setConstant(1.0 / n);
        R.block(n, 0, 1, n).setConstant(1.0 / n);
        R.block(n + 1, 0, 1, n).setConstant(-1.0 / n);
        R(n, n + 1) = -1.0;
        R(n + 1, n) = 1.0;
    } else {
        R.topLeftCorner(n, n).setConstant(2.0 / (double(n) * (n - 1)));
        R.topLeftCorner(n, n).diagonal().setZero();
        R.block(0, n, n, 2).setConstant(-1.0 / n);
        R.block(n, 0, 2, n).setConstant(-1.0 / n);
        R(n, n + 1) = 1.0;
        R(n + 1, n) = 1.0;
    }
    return R;
}

namespace {

bool transposition_fixes(const Matrix& W, int i, int j, double tol) {
    const int d = static_cast<int>(W.rows());
    if (std::abs(W(i, i) - W(j, j)) > tol || std::abs(W(i, j) - W(j, i)) > tol) {
        return false;
    }
    for (int k = 0; k < d; ++k) {
        if (k == i || k == j) continue;
        if (std::abs(W(i, k) - W(j, k)) > tol || std::abs(W(k, i) - W(k, j)) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<int>> isotropy_classes(const Matrix& W, double tol) {
    const int d = static_cast<int>(W.rows());
    if (W.cols() != d) {
        throw DimensionMismatch("isotropy detection needs a square matrix");
    }
    // Transpositions compose: if (i j) and (j k) fix W so does (i k), so each
    // index only needs testing against one member of every existing class.
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < d; ++i) {
        bool placed = false;
        for (auto& c : classes) {
            if (transposition_fixes(W, c.front(), i, tol)) {
                c.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

YoungPartitionGroup detect_diagonal_isotropy(const Matrix& W, double tol) {
    std::vector<int> sizes;
    for (const auto& c : isotropy_classes(W, tol)) {
        sizes.push_back(static_cast<int>(c.size()));
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return YoungPartitionGroup(std::move(sizes));
}

Matrix permute(const Matrix& M, const std::vector<int>& perm) {
    const int d = static_cast<int>(M.rows());
    if (static_cast<int>(perm.size()) != d) {
        throw DimensionMismatch("permutation length does not match matrix");
    }
    Matrix out(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out(perm[i], perm[j]) = M(i, j);
        }
    }
    return out;
}

} // namespace tangency
