#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dm {

/// An element of the ground set, 0-based. All I/O surfaces use 1-based
/// labels; the shift happens at the text boundary, never inside the core.
using ElementId = int;

/// A subset of the ground set as a bitmask: bit i set iff element i is in
/// the subset. Symmetric difference is XOR, the empty set is 0.
using SubsetMask = std::uint32_t;

/// Hard cap on ground-set size so a subset fits in one machine word and a
/// family bitset fits in 2^16 bits.
inline constexpr int kMaxGroundSetSize = 16;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A family with no feasible sets where one is required.
struct EmptyFamilyError : Error {
    EmptyFamilyError() : Error("family has no feasible sets") {}
    explicit EmptyFamilyError(const std::string& what) : Error(what) {}
};

/// Ground-set size or search budget exceeded.
struct CapacityError : Error {
    using Error::Error;
};

/// Operation requires the empty set to be feasible.
struct NotNormalError : Error {
    NotNormalError() : Error("delta-matroid is not normal") {}
};

/// A mask that was required to be feasible is not.
struct NotFeasibleError : Error {
    NotFeasibleError() : Error("subset is not feasible") {}
};

/// Counterexample certificate for the symmetric exchange axiom: for the
/// feasible pair (x, y) and pivot u in x^y, no v in x^y makes x^{u,v}
/// feasible.
struct ExchangeWitness {
    SubsetMask x = 0;
    SubsetMask y = 0;
    ElementId u = 0;

    bool operator==(const ExchangeWitness&) const = default;
};

struct ExchangeViolationError : Error {
    ExchangeWitness witness;

    explicit ExchangeViolationError(const ExchangeWitness& w)
        : Error("symmetric exchange axiom violated"), witness(w) {}
};

// ---------------------------------------------------------------------------
// Mask helpers
// ---------------------------------------------------------------------------

inline SubsetMask full_mask(int n) {
    return (SubsetMask{1} << n) - 1;
}

inline SubsetMask element_bit(ElementId e) {
    return SubsetMask{1} << e;
}

/// Gathers the bits of `m` selected by `keep` into the low positions,
/// preserving order. Used to relabel ground sets densely after deletions.
inline SubsetMask compact_bits(SubsetMask m, SubsetMask keep) {
    SubsetMask out = 0;
    int j = 0;
    while (keep) {
        SubsetMask low = keep & (SubsetMask{0} - keep);
        if (m & low) out |= SubsetMask{1} << j;
        keep ^= low;
        ++j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// FeasibleFamily
// ---------------------------------------------------------------------------

/// A collection of subsets of [0, n) stored as a bitset of length 2^n,
/// position m set iff the subset with mask m is in the family. A raw family
/// may be empty; a DeltaMatroid's may not.
class FeasibleFamily {
public:
    FeasibleFamily() : FeasibleFamily(0) {}

    explicit FeasibleFamily(int n) : n_(n) {
        if (n < 0 || n > kMaxGroundSetSize)
            throw CapacityError("ground-set size must be in [0, 16], got " +
                                std::to_string(n));
        words_.resize(word_count(n), 0);
    }

    static FeasibleFamily from_masks(int n, const std::vector<SubsetMask>& masks) {
        FeasibleFamily f(n);
        for (SubsetMask m : masks) f.set(m);
        return f;
    }

    /// Family from its bitset packed in one word; only for n <= 6.
    static FeasibleFamily from_word(int n, std::uint64_t word) {
        FeasibleFamily f(n);
        if (n > 6) throw CapacityError("from_word requires n <= 6");
        if (n < 6 && (word >> (std::uint64_t{1} << n)) != 0)
            throw Error("family word has bits beyond 2^n");
        f.words_[0] = word;
        return f;
    }

    int ground_size() const noexcept { return n_; }

    std::uint32_t subset_count() const noexcept { return std::uint32_t{1} << n_; }

    bool test(SubsetMask m) const {
        assert(m < subset_count());
        return (words_[m >> 6] >> (m & 63)) & 1;
    }

    void set(SubsetMask m) {
        check_range(m);
        words_[m >> 6] |= std::uint64_t{1} << (m & 63);
    }

    void reset(SubsetMask m) {
        check_range(m);
        words_[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Members in ascending mask order.
    std::vector<SubsetMask> masks() const {
        std::vector<SubsetMask> out;
        out.reserve(count());
        for_each([&](SubsetMask m) { out.push_back(m); });
        return out;
    }

    /// Visits members in ascending mask order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                fn(static_cast<SubsetMask>((wi << 6) + b));
            }
        }
    }

    /// The low 64 bits of the bitset; the whole family for n <= 6.
    std::uint64_t low_word() const noexcept { return words_[0]; }

    bool operator==(const FeasibleFamily&) const = default;

private:
    static std::size_t word_count(int n) {
        return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
    }

    void check_range(SubsetMask m) const {
        if (m >= subset_count())
            throw Error("subset mask " + std::to_string(m) +
                        " out of range for ground-set size " + std::to_string(n_));
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

/// A set system is a ground set [0, n) with a family of subsets; the family
/// carries the ground-set size, so no separate pair type is needed.
using SetSystem = FeasibleFamily;

// ---------------------------------------------------------------------------
// DeltaMatroid / Matroid
// ---------------------------------------------------------------------------

/// Checks the symmetric exchange axiom: for all X, Y in the family and
/// every u in X^Y there is a v in X^Y (v = u allowed) with X^{u,v} in the
/// family. Returns the first witness in (x, y, u) lexicographic order, or
/// nullopt when the axiom holds. Throws EmptyFamilyError on an empty family.
std::optional<ExchangeWitness> check_symmetric_exchange(const SetSystem& s);

/// A set system with a nonempty family satisfying symmetric exchange.
/// Immutable after construction; all operations below are pure functions.
class DeltaMatroid {
public:
    /// Validates eagerly: throws EmptyFamilyError or ExchangeViolationError.
    explicit DeltaMatroid(SetSystem s);

    /// Wraps a family known valid by a closure theorem (twists, deletions,
    /// contractions and direct sums of delta-matroids are delta-matroids).
    /// Debug builds re-run the exchange check.
    static DeltaMatroid unchecked(SetSystem s);

    int ground_size() const noexcept { return family_.ground_size(); }
    const FeasibleFamily& family() const noexcept { return family_; }

    bool operator==(const DeltaMatroid&) const = default;

private:
    struct unchecked_tag {};
    DeltaMatroid(unchecked_tag, SetSystem s);

    FeasibleFamily family_;
};

/// A delta-matroid whose feasible sets all have the same size (its bases).
class Matroid {
public:
    /// Throws std::invalid_argument when feasible-set sizes are not uniform.
    explicit Matroid(DeltaMatroid d);

    const DeltaMatroid& delta_matroid() const noexcept { return dm_; }
    int ground_size() const noexcept { return dm_.ground_size(); }
    const FeasibleFamily& family() const noexcept { return dm_.family(); }
    int rank_value() const noexcept { return rank_value_; }

    bool operator==(const Matroid&) const = default;

private:
    DeltaMatroid dm_;
    int rank_value_;
};

// ---------------------------------------------------------------------------
// Operation algebra
// ---------------------------------------------------------------------------

/// Replaces every feasible F by F ^ a.
DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a);

/// Keeps the members avoiding e and relabels elements above e down by one.
/// Throws EmptyFamilyError when every member contains e.
DeltaMatroid delete_element(const DeltaMatroid& d, ElementId e);

/// Keeps F \ {e} for members F containing e, relabeled. Throws
/// EmptyFamilyError when no member contains e.
DeltaMatroid contract(const DeltaMatroid& d, ElementId e);

/// Deletes every element of a (in any order; the result is order-free).
DeltaMatroid delete_set(const DeltaMatroid& d, SubsetMask a);

/// Contracts every element of a.
DeltaMatroid contract_set(const DeltaMatroid& d, SubsetMask a);

/// Deletes everything outside a; the result lives on [0, popcount(a)).
DeltaMatroid restrict_to(const DeltaMatroid& d, SubsetMask a);

/// Twist by the full ground set.
DeltaMatroid dual(const DeltaMatroid& d);

/// Disjoint union: d2's elements are shifted up by d1's ground-set size.
/// Throws CapacityError when the combined ground set exceeds the cap.
DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2);

/// Size difference between the largest and smallest feasible sets.
int width(const DeltaMatroid& d);

/// True iff the empty set is feasible.
bool is_normal(const DeltaMatroid& d);

/// True iff all feasible sets have the same size.
bool is_matroid(const DeltaMatroid& d);

/// The matroid of minimum-size (resp. maximum-size) feasible sets.
Matroid min_matroid(const DeltaMatroid& d);
Matroid max_matroid(const DeltaMatroid& d);

/// Members of size (min + i) when from_min, else (max - i). May be empty
/// and need not satisfy symmetric exchange; hence a raw family, not a
/// delta-matroid.
FeasibleFamily layer(const DeltaMatroid& d, bool from_min, int i);

/// Matroid rank of x: max over bases F of |x & F|.
int rank(const Matroid& m, SubsetMask x);

/// For feasible f0, a pair (f1, f2) with f1 in the min layer, f2 in the max
/// layer and f1 <= f0 <= f2, ties broken by smallest mask. Throws
/// NotFeasibleError when f0 is not feasible.
std::pair<SubsetMask, SubsetMask> envelope(const DeltaMatroid& d, SubsetMask f0);

}  // namespace dm
