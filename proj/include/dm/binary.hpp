#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dm/core.hpp"
#include "dm/gf2.hpp"

namespace dm {

/// Certificate that D is binary: dm_from_matrix(matrix) equals
/// twist(D, twist_set), with twist_set feasible in D.
struct RepresentationWitness {
    SubsetMask twist_set = 0;
    SymMatrixGF2 matrix;
};

/// A ground-set bijection as an image table: element i maps to image[i].
using Permutation = std::vector<ElementId>;

/// Certificate that a target is a minor: relabeling applied to
/// delete_set(twist(D, twist_set), deleted) yields the target.
struct MinorWitness {
    SubsetMask twist_set = 0;
    SubsetMask deleted = 0;
    Permutation relabeling;
};

/// The unique symmetric matrix consistent with a normal delta-matroid's
/// feasible sets of size <= 2: the diagonal from the singletons, the
/// off-diagonal entries forced by the 2x2 principal determinants.
/// Throws NotNormalError when the empty set is not feasible.
SymMatrixGF2 candidate_matrix(const DeltaMatroid& d);

/// True iff for every mask X the nonsingularity of a[X] matches the
/// feasibility of X in d.
bool verify_representation(const DeltaMatroid& d, const SymMatrixGF2& a);

/// Binary detection by construct-and-verify: for each feasible F in
/// ascending mask order, tests whether the candidate matrix of twist(d, F)
/// represents it. Restricting to feasible twists is sound: a matrix
/// delta-matroid is normal, and twist(d, A) is normal iff A is feasible.
std::optional<RepresentationWitness> is_binary_matrix_method(const DeltaMatroid& d);

/// All minors of d up to isomorphism, as (twist by X, delete A) over all
/// pairs of masks; every minor arises this way. Includes d itself.
/// Representatives are the first occurrence in (X, A) lexicographic order.
/// Throws CapacityError when the ground set exceeds 8 elements.
std::vector<DeltaMatroid> enumerate_minors(const DeltaMatroid& d);

/// A bijection carrying d1's family onto d2's, or nullopt. Backtracking
/// pruned by per-element invariant vectors (feasible-set counts by size);
/// returns the first image table in lexicographic order.
std::optional<Permutation> is_isomorphic(const DeltaMatroid& d1,
                                         const DeltaMatroid& d2);

/// First (X, A) pair in lexicographic order whose minor is isomorphic to
/// the target, or nullopt.
std::optional<MinorWitness> has_minor(const DeltaMatroid& d,
                                      const DeltaMatroid& target);

/// The five excluded minors characterizing binary delta-matroids,
/// validated on first use.
const std::array<DeltaMatroid, 5>& excluded_minors();

/// The two small nonbinary delta-matroids that occur as a minor of every
/// nonbinary delta-matroid: ({1,2}, {0,{1},{2}}) and
/// ({1,2,3}, {0,{1,2},{1,3}}).
const DeltaMatroid& d1();
const DeltaMatroid& d2();

struct ExcludedMinorHit {
    int index = 0;  // position in excluded_minors()
    MinorWitness witness;
};

/// Searches the five excluded minors in listed order; nullopt when d is
/// binary. Throws CapacityError when the ground set exceeds 8 elements.
std::optional<ExcludedMinorHit> find_excluded_minor(const DeltaMatroid& d);

/// Binary detection by excluded minors.
bool is_binary_excluded_minor(const DeltaMatroid& d);

}  // namespace dm
