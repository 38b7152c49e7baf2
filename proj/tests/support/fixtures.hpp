#pragma once

// Shared helpers for the test suites: fixture construction from 1-based
// label lists, plus brute-force oracles kept deliberately independent of
// the library's bitset kernels (sets of sorted int vectors, no masks).

#include <algorithm>
#include <set>
#include <vector>

#include "dm/core.hpp"

namespace dmtest {

inline dm::SubsetMask mask_of(const std::vector<int>& labels) {
    dm::SubsetMask m = 0;
    for (int label : labels) m |= dm::element_bit(label - 1);
    return m;
}

inline dm::SetSystem make_system(int n, const std::vector<std::vector<int>>& sets) {
    dm::FeasibleFamily family(n);
    for (const auto& s : sets) family.set(mask_of(s));
    return family;
}

inline dm::DeltaMatroid make_dm(int n, const std::vector<std::vector<int>>& sets) {
    return dm::DeltaMatroid(make_system(n, sets));
}

inline std::vector<std::vector<int>> sets_of(const dm::DeltaMatroid& d) {
    std::vector<std::vector<int>> out;
    d.family().for_each([&](dm::SubsetMask m) {
        std::vector<int> s;
        for (int e = 0; e < d.ground_size(); ++e)
            if (m & dm::element_bit(e)) s.push_back(e + 1);
        out.push_back(std::move(s));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

using OracleSet = std::set<int>;
using OracleFamily = std::set<OracleSet>;

inline OracleSet oracle_symdiff(const OracleSet& a, const OracleSet& b) {
    OracleSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.begin()));
    return out;
}

inline OracleFamily oracle_family(const std::vector<std::vector<int>>& sets) {
    OracleFamily fam;
    for (const auto& s : sets) fam.insert(OracleSet(s.begin(), s.end()));
    return fam;
}

inline OracleFamily oracle_family(const dm::DeltaMatroid& d) {
    OracleFamily fam;
    for (const auto& s : sets_of(d)) fam.insert(OracleSet(s.begin(), s.end()));
    return fam;
}

// Quadruple loop straight from the axiom text: every pair of feasible sets,
// every pivot in the symmetric difference, some repair lands in the family.
inline bool oracle_exchange_ok(const OracleFamily& fam) {
    for (const auto& x : fam) {
        for (const auto& y : fam) {
            const OracleSet diff = oracle_symdiff(x, y);
            for (int u : diff) {
                bool repaired = false;
                for (int v : diff) {
                    OracleSet pair{u, v};
                    if (fam.count(oracle_symdiff(x, pair))) {
                        repaired = true;
                        break;
                    }
                }
                if (!repaired) return false;
            }
        }
    }
    return true;
}

inline int oracle_matroid_rank(const OracleFamily& bases, const OracleSet& x) {
    int best = 0;
    for (const auto& f : bases) {
        OracleSet both;
        std::set_intersection(x.begin(), x.end(), f.begin(), f.end(),
                              std::inserter(both, both.begin()));
        best = std::max(best, static_cast<int>(both.size()));
    }
    return best;
}

}  // namespace dmtest
