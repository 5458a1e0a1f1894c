#pragma once

#include "tangency/kernel_loss.hpp"

#include <string>
#include <vector>

namespace tangency {

// Diagonal Young subgroup Delta(S_a1 x ... x S_aq) acting on M(d,d) by
// simultaneous row and column permutation. Blocks are contiguous index ranges
// in the given order.
class YoungPartitionGroup {
public:
    YoungPartitionGroup() = default;
    explicit YoungPartitionGroup(std::vector<int> blocks);

    // (d - k, 1, ..., 1) with k singletons.
    static YoungPartitionGroup hook(int d, int k);

    const std::vector<int>& blocks() const { return blocks_; }
    int d() const { return d_; }
    int offset(int b) const { return offsets_[b]; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::string to_string() const;

    bool operator==(const YoungPartitionGroup& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<int> blocks_;
    std::vector<int> offsets_;
    int d_ = 0;
};

class FixedPointChart {
public:
    FixedPointChart(YoungPartitionGroup group, std::vector<Matrix> basis);

    const YoungPartitionGroup& group() const { return group_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    int N() const { return static_cast<int>(basis_.size()); }
    int d() const { return group_.d(); }

private:
    YoungPartitionGroup group_;
    std::vector<Matrix> basis_;
};

enum class IsotypicLabel { t, s, x, y };

const char* to_string(IsotypicLabel label);
IsotypicLabel label_from_string(const std::string& name);

FixedPointChart build_chart(int d, const YoungPartitionGroup& group);

Matrix embed(const FixedPointChart& chart, const Vector& xi);
Vector project(const FixedPointChart& chart, const Matrix& M);

// Orthogonal projection onto an isotypic component of M(d,d) under S_m acting
// on the first m indices (m = d is the full diagonal action). The remaining
// p = d - m indices are fixed; their rows and columns split into a
// block-mean part (t) and a mean-free part (s).
Matrix isotypic_project(const Matrix& M, IsotypicLabel label, int m = 0);

// Maximal-isotropy vectors of the s, x and y components of S_m, m = d - p.
// s has 3 + 2p copies: diagonal, symmetric and skew embeddings of
// (1, ..., 1, -(m-1)) in the m-block, then a column and a row copy for each
// fixed index.
Matrix representative(IsotypicLabel label, int copy, int d, int p = 0);
int representative_copies(IsotypicLabel label, int p);

// Equivalence classes of indices whose transpositions fix W within tol.
std::vector<std::vector<int>> isotropy_classes(const Matrix& W, double tol = 1e-8);
// Block sizes of the classes above, largest first.
YoungPartitionGroup detect_diagonal_isotropy(const Matrix& W, double tol = 1e-8);

// Returns P M P^T where P sends index i to perm[i].
Matrix permute(const Matrix& M, const std::vector<int>& perm);

} // namespace tangency
