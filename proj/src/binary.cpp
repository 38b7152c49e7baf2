#include "dm/binary.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dm {

namespace {

#ifndef NDEBUG
// Every symmetric n x n matrix over GF(2), one free bit per upper-triangle
// entry. Only used at debug-assert scale (n <= 3).
std::vector<SymMatrixGF2> all_symmetric_matrices(int n) {
    const int free_bits = n * (n + 1) / 2;
    std::vector<SymMatrixGF2> out;
    out.reserve(std::size_t{1} << free_bits);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << free_bits); ++bits) {
        SymMatrixGF2 a(n);
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a.set(i, j, (bits >> k++) & 1);
        out.push_back(a);
    }
    return out;
}
#endif

std::vector<std::vector<int>> element_profiles(const DeltaMatroid& d) {
    const int n = d.ground_size();
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    d.family().for_each([&](SubsetMask m) {
        const int pc = std::popcount(m);
        SubsetMask rest = m;
        while (rest) {
            const int e = std::countr_zero(rest);
            rest &= rest - 1;
            ++prof[e][pc];
        }
    });
    return prof;
}

struct IsoSearch {
    const FeasibleFamily& fa;
    const FeasibleFamily& fb;
    const std::vector<std::vector<int>>& pa;
    const std::vector<std::vector<int>>& pb;
    int n;
    Permutation img;
    SubsetMask used = 0;
    std::vector<SubsetMask> mapped;

    IsoSearch(const FeasibleFamily& a, const FeasibleFamily& b,
              const std::vector<std::vector<int>>& prof_a,
              const std::vector<std::vector<int>>& prof_b)
        : fa(a), fb(b), pa(prof_a), pb(prof_b), n(a.ground_size()),
          img(static_cast<std::size_t>(n), -1),
          mapped(std::size_t{1} << n, 0) {}

    bool run(int k) {
        if (k == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used & element_bit(v)) continue;
            if (pb[v] != pa[k]) continue;
            img[k] = v;
            used |= element_bit(v);
            const SubsetMask top = element_bit(k);
            bool ok = true;
            for (SubsetMask m = top; m < (top << 1); ++m) {
                mapped[m] = mapped[m ^ top] | element_bit(v);
                if (fa.test(m) != fb.test(mapped[m])) {
                    ok = false;
                    break;
                }
            }
            if (ok && run(k + 1)) return true;
            used &= ~element_bit(v);
        }
        return false;
    }
};

// Members of d avoiding the deleted elements, compacted; nullopt when none.
std::optional<DeltaMatroid> try_delete_set(const DeltaMatroid& d, SubsetMask a) {
    bool survivor = false;
    d.family().for_each([&](SubsetMask m) { survivor |= (m & a) == 0; });
    if (!survivor) return std::nullopt;
    return delete_set(d, a);
}

// Permutation- and twist-insensitive bucket key for minor deduplication:
// ground size, family size, size histogram, sorted element profiles.
std::vector<int> iso_signature(const DeltaMatroid& d) {
    const int n = d.ground_size();
    std::vector<int> key{n, static_cast<int>(d.family().count())};
    std::vector<int> hist(static_cast<std::size_t>(n) + 1, 0);
    d.family().for_each([&](SubsetMask m) { ++hist[std::popcount(m)]; });
    key.insert(key.end(), hist.begin(), hist.end());
    auto prof = element_profiles(d);
    std::sort(prof.begin(), prof.end());
    for (const auto& p : prof) key.insert(key.end(), p.begin(), p.end());
    return key;
}

}  // namespace

SymMatrixGF2 candidate_matrix(const DeltaMatroid& d) {
    if (!is_normal(d)) throw NotNormalError();
    const int n = d.ground_size();
    SymMatrixGF2 a(n);
    for (int e = 0; e < n; ++e) a.set(e, e, d.family().test(element_bit(e)));
    for (int e = 0; e < n; ++e) {
        for (int f = e + 1; f < n; ++f) {
            const bool pair_feasible =
                d.family().test(element_bit(e) | element_bit(f));
            // det a[{e,f}] = a_ee*a_ff + a_ef over GF(2) must match
            // feasibility of {e,f}.
            a.set(e, f, pair_feasible ^ (a.get(e, e) && a.get(f, f)));
        }
    }
    return a;
}

bool verify_representation(const DeltaMatroid& d, const SymMatrixGF2& a) {
    if (a.dim() != d.ground_size())
        throw std::invalid_argument("matrix dimension does not match ground set");
    const SubsetMask end = SubsetMask{1} << a.dim();
    for (SubsetMask x = 0; x < end; ++x)
        if (is_nonsingular(principal_submatrix(a, x)) != d.family().test(x))
            return false;
    return true;
}

std::optional<RepresentationWitness> is_binary_matrix_method(const DeltaMatroid& d) {
    for (SubsetMask f : d.family().masks()) {
        const DeltaMatroid t = twist(d, f);
        SymMatrixGF2 a = candidate_matrix(t);
        if (verify_representation(t, a))
            return RepresentationWitness{f, std::move(a)};
    }
#ifndef NDEBUG
    // Feasible twists suffice: a matrix delta-matroid is normal and
    // twist(d, A) is normal iff A is feasible. Cross-check at toy scale.
    if (d.ground_size() <= 3) {
        for (SubsetMask x = 0; x < (SubsetMask{1} << d.ground_size()); ++x) {
            const DeltaMatroid t = twist(d, x);
            for (const SymMatrixGF2& a : all_symmetric_matrices(d.ground_size()))
                assert(!verify_representation(t, a));
        }
    }
#endif
    return std::nullopt;
}

std::optional<Permutation> is_isomorphic(const DeltaMatroid& d1,
                                         const DeltaMatroid& d2) {
    if (d1.ground_size() != d2.ground_size()) return std::nullopt;
    if (d1.family().count() != d2.family().count()) return std::nullopt;
    if (d1.family().test(0) != d2.family().test(0)) return std::nullopt;
    const auto pa = element_profiles(d1);
    const auto pb = element_profiles(d2);
    auto sorted_a = pa;
    auto sorted_b = pb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    IsoSearch search(d1.family(), d2.family(), pa, pb);
    if (search.run(0)) return search.img;
    return std::nullopt;
}

std::vector<DeltaMatroid> enumerate_minors(const DeltaMatroid& d) {
    const int n = d.ground_size();
    if (n > 8) throw CapacityError("minor enumeration supports n <= 8");
    std::vector<DeltaMatroid> reps;
    std::set<std::pair<int, std::vector<SubsetMask>>> raw_seen;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    const SubsetMask end = SubsetMask{1} << n;
    for (SubsetMask x = 0; x < end; ++x) {
        const DeltaMatroid t = twist(d, x);
        for (SubsetMask a = 0; a < end; ++a) {
            const auto minor = try_delete_set(t, a);
            if (!minor) continue;
            if (!raw_seen.insert({minor->ground_size(), minor->family().masks()})
                     .second)
                continue;
            auto& bucket = buckets[iso_signature(*minor)];
            const bool duplicate =
                std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
                    return is_isomorphic(reps[i], *minor).has_value();
                });
            if (duplicate) continue;
            bucket.push_back(reps.size());
            reps.push_back(*minor);
        }
    }
    return reps;
}

std::optional<MinorWitness> has_minor(const DeltaMatroid& d,
                                      const DeltaMatroid& target) {
    const int n = d.ground_size();
    if (n > 8) throw CapacityError("minor search supports n <= 8");
    if (target.ground_size() > n) return std::nullopt;
    const int drop = n - target.ground_size();
    const SubsetMask end = SubsetMask{1} << n;
    for (SubsetMask x = 0; x < end; ++x) {
        const DeltaMatroid t = twist(d, x);
        for (SubsetMask a = 0; a < end; ++a) {
            if (std::popcount(a) != drop) continue;
            const auto minor = try_delete_set(t, a);
            if (!minor) continue;
            if (auto perm = is_isomorphic(*minor, target))
                return MinorWitness{x, a, std::move(*perm)};
        }
    }
    return std::nullopt;
}

namespace {

DeltaMatroid from_masks(int n, std::initializer_list<SubsetMask> masks) {
    return DeltaMatroid(FeasibleFamily::from_masks(n, masks));
}

}  // namespace

const std::array<DeltaMatroid, 5>& excluded_minors() {
    static const std::array<DeltaMatroid, 5> minors{
        from_masks(3, {0, 3, 5, 6, 7}),
        from_masks(3, {0, 1, 2, 3, 4, 5, 6}),
        from_masks(3, {0, 2, 3, 4, 5, 7}),
        from_masks(4, {0, 3, 5, 6, 9, 10, 12}),
        from_masks(4, {0, 3, 6, 9, 12, 15}),
    };
    return minors;
}

const DeltaMatroid& d1() {
    static const DeltaMatroid d = from_masks(2, {0, 1, 2});
    return d;
}

const DeltaMatroid& d2() {
    static const DeltaMatroid d = from_masks(3, {0, 3, 5});
    return d;
}

std::optional<ExcludedMinorHit> find_excluded_minor(const DeltaMatroid& d) {
    const auto& targets = excluded_minors();
    for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
        if (auto witness = has_minor(d, targets[i]))
            return ExcludedMinorHit{i, std::move(*witness)};
    }
    return std::nullopt;
}

bool is_binary_excluded_minor(const DeltaMatroid& d) {
    return !find_excluded_minor(d).has_value();
}

}  // namespace dm
