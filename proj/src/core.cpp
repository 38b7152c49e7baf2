#include "dm/core.hpp"

#include <algorithm>
#include <limits>

namespace dm {

namespace {

void require_mask(const DeltaMatroid& d, SubsetMask a) {
    if (a >= (SubsetMask{1} << d.ground_size()))
        throw std::out_of_range("subset mask out of range for ground-set size " +
                                std::to_string(d.ground_size()));
}

void require_element(const DeltaMatroid& d, ElementId e) {
    if (e < 0 || e >= d.ground_size())
        throw std::out_of_range("element index out of range");
}

}  // namespace

std::optional<ExchangeWitness> check_symmetric_exchange(const SetSystem& s) {
    if (s.empty()) throw EmptyFamilyError();
    const std::vector<SubsetMask> members = s.masks();
    for (SubsetMask x : members) {
        for (SubsetMask y : members) {
            SubsetMask diff = x ^ y;
            SubsetMask pivots = diff;
            while (pivots) {
                const int u = std::countr_zero(pivots);
                pivots &= pivots - 1;
                bool repaired = false;
                SubsetMask vs = diff;
                while (vs) {
                    const int v = std::countr_zero(vs);
                    vs &= vs - 1;
                    // {u,v} is a set: v == u flips a single element.
                    const SubsetMask flip =
                        element_bit(u) | (v == u ? 0 : element_bit(v));
                    if (s.test(x ^ flip)) {
                        repaired = true;
                        break;
                    }
                }
                if (!repaired) return ExchangeWitness{x, y, u};
            }
        }
    }
    return std::nullopt;
}

DeltaMatroid::DeltaMatroid(SetSystem s) : family_(std::move(s)) {
    if (auto w = check_symmetric_exchange(family_))
        throw ExchangeViolationError(*w);
}

DeltaMatroid::DeltaMatroid(unchecked_tag, SetSystem s) : family_(std::move(s)) {
    // Re-validate closure-theorem outputs in debug builds; skipped for huge
    // families where the quadratic check is impractical.
    assert(family_.count() > 4096 || !check_symmetric_exchange(family_));
}

DeltaMatroid DeltaMatroid::unchecked(SetSystem s) {
    if (s.empty()) throw EmptyFamilyError();
    return DeltaMatroid(unchecked_tag{}, std::move(s));
}

Matroid::Matroid(DeltaMatroid d) : dm_(std::move(d)), rank_value_(0) {
    int size = -1;
    dm_.family().for_each([&](SubsetMask m) {
        const int pc = std::popcount(m);
        if (size < 0) size = pc;
        if (pc != size)
            throw std::invalid_argument("feasible sets are not all the same size");
    });
    rank_value_ = size;
}

DeltaMatroid twist(const DeltaMatroid& d, SubsetMask a) {
    require_mask(d, a);
    FeasibleFamily out(d.ground_size());
    d.family().for_each([&](SubsetMask m) { out.set(m ^ a); });
    return DeltaMatroid::unchecked(std::move(out));
}

DeltaMatroid delete_element(const DeltaMatroid& d, ElementId e) {
    require_element(d, e);
    return delete_set(d, element_bit(e));
}

DeltaMatroid contract(const DeltaMatroid& d, ElementId e) {
    require_element(d, e);
    return contract_set(d, element_bit(e));
}

DeltaMatroid delete_set(const DeltaMatroid& d, SubsetMask a) {
    require_mask(d, a);
    const SubsetMask keep = full_mask(d.ground_size()) & ~a;
    FeasibleFamily out(d.ground_size() - std::popcount(a));
    d.family().for_each([&](SubsetMask m) {
        if ((m & a) == 0) out.set(compact_bits(m, keep));
    });
    if (out.empty())
        throw EmptyFamilyError("every feasible set meets the deleted elements");
    return DeltaMatroid::unchecked(std::move(out));
}

DeltaMatroid contract_set(const DeltaMatroid& d, SubsetMask a) {
    require_mask(d, a);
    const SubsetMask keep = full_mask(d.ground_size()) & ~a;
    FeasibleFamily out(d.ground_size() - std::popcount(a));
    d.family().for_each([&](SubsetMask m) {
        if ((m & a) == a) out.set(compact_bits(m & keep, keep));
    });
    if (out.empty())
        throw EmptyFamilyError("no feasible set contains the contracted elements");
    return DeltaMatroid::unchecked(std::move(out));
}

DeltaMatroid restrict_to(const DeltaMatroid& d, SubsetMask a) {
    require_mask(d, a);
    return delete_set(d, full_mask(d.ground_size()) & ~a);
}

DeltaMatroid dual(const DeltaMatroid& d) {
    return twist(d, full_mask(d.ground_size()));
}

DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2) {
    const int n1 = d1.ground_size();
    const int n = n1 + d2.ground_size();
    if (n > kMaxGroundSetSize)
        throw CapacityError("direct sum exceeds the ground-set cap of 16");
    FeasibleFamily out(n);
    d1.family().for_each([&](SubsetMask m1) {
        d2.family().for_each(
            [&](SubsetMask m2) { out.set(m1 | (m2 << n1)); });
    });
    return DeltaMatroid::unchecked(std::move(out));
}

int width(const DeltaMatroid& d) {
    int lo = std::numeric_limits<int>::max();
    int hi = 0;
    d.family().for_each([&](SubsetMask m) {
        const int pc = std::popcount(m);
        lo = std::min(lo, pc);
        hi = std::max(hi, pc);
    });
    return hi - lo;
}

bool is_normal(const DeltaMatroid& d) {
    return d.family().test(0);
}

bool is_matroid(const DeltaMatroid& d) {
    return width(d) == 0;
}

namespace {

Matroid extreme_matroid(const DeltaMatroid& d, bool take_min) {
    int best = take_min ? std::numeric_limits<int>::max() : -1;
    d.family().for_each([&](SubsetMask m) {
        const int pc = std::popcount(m);
        best = take_min ? std::min(best, pc) : std::max(best, pc);
    });
    FeasibleFamily out(d.ground_size());
    d.family().for_each([&](SubsetMask m) {
        if (std::popcount(m) == best) out.set(m);
    });
    // The extreme layers satisfy symmetric exchange; intermediate layers
    // in general do not.
    return Matroid(DeltaMatroid::unchecked(std::move(out)));
}

}  // namespace

Matroid min_matroid(const DeltaMatroid& d) { return extreme_matroid(d, true); }

Matroid max_matroid(const DeltaMatroid& d) { return extreme_matroid(d, false); }

FeasibleFamily layer(const DeltaMatroid& d, bool from_min, int i) {
    if (i < 0) throw std::invalid_argument("layer index must be >= 0");
    int lo = std::numeric_limits<int>::max();
    int hi = 0;
    d.family().for_each([&](SubsetMask m) {
        const int pc = std::popcount(m);
        lo = std::min(lo, pc);
        hi = std::max(hi, pc);
    });
    const int want = from_min ? lo + i : hi - i;
    FeasibleFamily out(d.ground_size());
    d.family().for_each([&](SubsetMask m) {
        if (std::popcount(m) == want) out.set(m);
    });
    return out;
}

int rank(const Matroid& m, SubsetMask x) {
    if (x >= (SubsetMask{1} << m.ground_size()))
        throw std::out_of_range("subset mask out of range");
    int best = 0;
    m.family().for_each([&](SubsetMask f) {
        best = std::max(best, std::popcount(x & f));
    });
    return best;
}

std::pair<SubsetMask, SubsetMask> envelope(const DeltaMatroid& d, SubsetMask f0) {
    require_mask(d, f0);
    if (!d.family().test(f0)) throw NotFeasibleError();
    const FeasibleFamily lo = layer(d, true, 0);
    const FeasibleFamily hi = layer(d, false, 0);
    std::optional<SubsetMask> f1, f2;
    lo.for_each([&](SubsetMask m) {
        if (!f1 && (m & f0) == m) f1 = m;
    });
    hi.for_each([&](SubsetMask m) {
        if (!f2 && (m & f0) == f0) f2 = m;
    });
    // Existence is guaranteed for any delta-matroid and feasible f0.
    assert(f1 && f2);
    if (!f1 || !f2) throw Error("envelope: no containing extreme members found");
    return {*f1, *f2};
}

}  // namespace dm
