#include "dm/gf2.hpp"

namespace dm {

SymMatrixGF2 SymMatrixGF2::from_rows(std::vector<SubsetMask> rows) {
    const int n = check_dim(static_cast<int>(rows.size()));
    for (int i = 0; i < n; ++i) {
        if (rows[i] >= (SubsetMask{1} << n))
            throw std::invalid_argument("row has bits beyond the dimension");
        for (int j = i + 1; j < n; ++j)
            if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1))
                throw std::invalid_argument("rows are not symmetric");
    }
    SymMatrixGF2 a;
    a.rows_ = std::move(rows);
    return a;
}

void SymMatrixGF2::set(int i, int j, bool value) {
    if (value) {
        rows_[i] |= element_bit(j);
        rows_[j] |= element_bit(i);
    } else {
        rows_[i] &= ~element_bit(j);
        rows_[j] &= ~element_bit(i);
    }
}

SymMatrixGF2 principal_submatrix(const SymMatrixGF2& a, SubsetMask x) {
    SymMatrixGF2 out(std::popcount(x));
    int r = 0;
    SubsetMask rest = x;
    while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        out.rows_[r++] = compact_bits(a.row(i) & x, x);
    }
    return out;
}

bool is_nonsingular(const SymMatrixGF2& a) {
    const int n = a.dim();
    std::vector<SubsetMask> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[i] = a.row(i);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if ((rows[r] >> col) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < n; ++r)
            if ((rows[r] >> col) & 1) rows[r] ^= rows[rank];
        ++rank;
    }
    return true;
}

DeltaMatroid dm_from_matrix(const SymMatrixGF2& a) {
    FeasibleFamily family(a.dim());
    const SubsetMask end = SubsetMask{1} << a.dim();
    for (SubsetMask x = 0; x < end; ++x)
        if (is_nonsingular(principal_submatrix(a, x))) family.set(x);
    // Nonempty (the empty set is always feasible) and a delta-matroid by
    // Bouchet's representability theorem.
    return DeltaMatroid::unchecked(std::move(family));
}

std::vector<SubsetMask> components(const SymMatrixGF2& a) {
    const int n = a.dim();
    std::vector<SubsetMask> out;
    SubsetMask visited = 0;
    for (int i = 0; i < n; ++i) {
        if (visited & element_bit(i)) continue;
        SubsetMask comp = element_bit(i);
        for (;;) {
            SubsetMask grown = comp;
            SubsetMask rest = comp;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                grown |= a.row(v) & ~element_bit(v);  // loops do not connect
            }
            if (grown == comp) break;
            comp = grown;
        }
        visited |= comp;
        out.push_back(comp);
    }
    return out;
}

ComponentShape classify_component(const SymMatrixGF2& a, SubsetMask comp) {
    const int order = std::popcount(comp);
    ComponentShape shape{ComponentShape::Kind::Other, order, comp};
    if (order == 1) {
        const int v = std::countr_zero(comp);
        shape.kind = a.get(v, v) ? ComponentShape::Kind::LoopedVertex
                                 : ComponentShape::Kind::OddComplete;
        return shape;
    }
    if (order % 2 == 0) return shape;
    SubsetMask rest = comp;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (a.get(v, v)) return shape;                       // loop
        if ((a.row(v) & comp) != (comp ^ element_bit(v))) return shape;
    }
    shape.kind = ComponentShape::Kind::OddComplete;
    return shape;
}

}  // namespace dm
