#pragma once

#include <vector>

#include "dm/core.hpp"

namespace dm {

/// A symmetric matrix over GF(2), stored as one row bitmask per index.
/// Doubles as a looped simple graph: a set diagonal bit is a loop, a set
/// off-diagonal bit an edge.
class SymMatrixGF2 {
public:
    SymMatrixGF2() = default;

    /// Zero matrix of the given dimension.
    explicit SymMatrixGF2(int n) : rows_(static_cast<std::size_t>(check_dim(n)), 0) {}

    /// Throws std::invalid_argument when the rows are not symmetric or have
    /// bits beyond the dimension.
    static SymMatrixGF2 from_rows(std::vector<SubsetMask> rows);

    int dim() const noexcept { return static_cast<int>(rows_.size()); }

    bool get(int i, int j) const { return (rows_[i] >> j) & 1; }

    /// Sets a_ij and a_ji together, keeping the matrix symmetric.
    void set(int i, int j, bool value);

    SubsetMask row(int i) const { return rows_[i]; }

    bool operator==(const SymMatrixGF2&) const = default;

private:
    friend SymMatrixGF2 principal_submatrix(const SymMatrixGF2&, SubsetMask);

    static int check_dim(int n) {
        if (n < 0 || n > kMaxGroundSetSize)
            throw std::invalid_argument("matrix dimension must be in [0, 16]");
        return n;
    }

    std::vector<SubsetMask> rows_;
};

/// Rows and columns of `a` restricted to the indices in x, compacted in
/// order. The 0-dimensional submatrix a[{}] is nonsingular by convention.
SymMatrixGF2 principal_submatrix(const SymMatrixGF2& a, SubsetMask x);

/// GF(2) rank equals the dimension, via word-parallel row elimination.
bool is_nonsingular(const SymMatrixGF2& a);

/// The delta-matroid whose feasible sets are exactly the X with a[X]
/// nonsingular. Always normal.
DeltaMatroid dm_from_matrix(const SymMatrixGF2& a);

/// Connected components of the underlying graph, loops ignored, as masks
/// partitioning [0, n), ordered by lowest vertex.
std::vector<SubsetMask> components(const SymMatrixGF2& a);

/// Shape of one connected component. OddComplete covers loopless complete
/// graphs of odd order, including the isolated loopless vertex (order 1).
struct ComponentShape {
    enum class Kind { OddComplete, LoopedVertex, Other };

    Kind kind = Kind::Other;
    int order = 0;
    SubsetMask vertices = 0;

    bool operator==(const ComponentShape&) const = default;
};

/// Classifies a connected component of `a` (as returned by components()).
ComponentShape classify_component(const SymMatrixGF2& a, SubsetMask comp);

}  // namespace dm
