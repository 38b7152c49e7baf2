// Acceptance suite: every shipping criterion as one pass/fail line.
//
//   dm_acceptance [--skip-census5] [--jobs N]
//
// The n=5 census criterion takes the longest (seconds to minutes depending
// on the machine); --skip-census5 drops it for quick runs.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dm/binary.hpp"
#include "dm/census.hpp"
#include "dm/core.hpp"
#include "dm/gf2.hpp"
#include "dm/textio.hpp"
#include "dm/twistpoly.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_dm.hpp"

using namespace dm;

namespace {

int g_jobs = 0;

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::size_t binary_count(const std::vector<CensusRecord>& records) {
    std::size_t count = 0;
    for (const auto& rec : records) count += rec.binary ? 1 : 0;
    return count;
}

// --- criterion 1: census table for n = 2, 3, 4, under 60 seconds ----------

void criterion_census_table() {
    const auto start = std::chrono::steady_clock::now();
    const int expected_total[] = {5, 16, 90};
    const int expected_binary[] = {5, 13, 40};
    for (int n = 2; n <= 4; ++n) {
        const auto records = enumerate_classes(n);
        require(static_cast<int>(records.size()) == expected_total[n - 2],
                "census " + std::to_string(n) + " found " +
                    std::to_string(records.size()) + " classes, expected " +
                    std::to_string(expected_total[n - 2]));
        require(static_cast<int>(binary_count(records)) == expected_binary[n - 2],
                "census " + std::to_string(n) + " binary count mismatch");
    }
    require(seconds_since(start) < 60.0, "census 2..4 exceeded 60 seconds");
}

// --- criterion 2: census for n = 5 -----------------------------------------

void criterion_census_n5() {
    const auto start = std::chrono::steady_clock::now();
    const auto records = enumerate_classes(5, g_jobs);
    require(records.size() == 2902, "census 5 found " +
                                        std::to_string(records.size()) +
                                        " classes, expected 2902");
    require(binary_count(records) == 141, "census 5 binary count mismatch");
    require(seconds_since(start) < 7200.0, "census 5 exceeded two hours");
}

// --- criterion 3: closed-form twist monomials -------------------------------

void criterion_closed_forms() {
    for (int k = 1; k <= 3; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const TwistPolynomial p = twist_polynomial(make_odd_complete(k));
        TwistPolynomial expected;
        expected.add(2 * k, std::uint64_t{1} << (2 * k + 1));
        require(p == expected, "odd-complete k=" + std::to_string(k) +
                                   " polynomial is " + to_string(p));
        require(seconds_since(start) < 1.0, "odd-complete polynomial too slow");
    }
    for (int n = 1; n <= 6; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const TwistPolynomial p = twist_polynomial(make_free(n));
        TwistPolynomial expected;
        expected.add(n, std::uint64_t{1} << n);
        require(p == expected,
                "free n=" + std::to_string(n) + " polynomial is " + to_string(p));
        require(seconds_since(start) < 1.0, "free polynomial too slow");
    }
}

// --- criterion 4: the five excluded minors ----------------------------------

void criterion_excluded_minors() {
    const auto& minors = excluded_minors();
    for (const DeltaMatroid& m : minors) {
        require(!is_binary_matrix_method(m), "excluded minor passed the matrix method");
        require(!is_binary_excluded_minor(m), "excluded minor passed the minor method");
    }

    // The reduction of each to d1 or d2, with the exact twist/restriction
    // pairs, and a search witness that reconstructs the target.
    struct Reduction {
        int index;
        SubsetMask twist_set;
        SubsetMask keep;
        const DeltaMatroid& target;
    };
    const Reduction reductions[] = {
        {0, 0b111, 0b011, d1()},  {1, 0b100, 0b011, d1()},
        {2, 0, 0b110, d1()},      {3, 0b1001, 0b0111, d2()},
        {4, 0, 0b1011, d2()},
    };
    for (const Reduction& r : reductions) {
        const DeltaMatroid reduced =
            restrict_to(twist(minors[static_cast<std::size_t>(r.index)], r.twist_set),
                        r.keep);
        require(reduced == r.target,
                "reduction of excluded minor " + std::to_string(r.index + 1) +
                    " does not match");
        const auto witness =
            has_minor(minors[static_cast<std::size_t>(r.index)], r.target);
        require(witness.has_value(), "no search witness for excluded minor " +
                                         std::to_string(r.index + 1));
    }
}

// --- criterion 5: Theorems 1 and 2 over every class with n <= 4 ------------

void criterion_monomial_classification() {
    for (int n = 1; n <= 4; ++n) {
        for (const CensusRecord& rec : enumerate_classes(n)) {
            const DeltaMatroid d = decode(rec.code);
            const bool monomial = is_twist_monomial(d);
            if (monomial) {
                require(is_binary_matrix_method(d).has_value(),
                        "monomial class " + rec.code.str() + " not binary (matrix)");
                require(is_binary_excluded_minor(d),
                        "monomial class " + rec.code.str() + " not binary (minor)");
            }
            // Census representatives are normal, so the characterization and
            // the graph-shape condition must both match exactly.
            const auto partition = characterize_monomial(d);
            require(partition.has_value() == monomial,
                    "characterization disagrees on " + rec.code.str());
            if (partition)
                require(partition->matches(d),
                        "partition does not reproduce " + rec.code.str());

            const SymMatrixGF2 a = candidate_matrix(d);
            bool graph_condition = verify_representation(d, a);
            if (graph_condition)
                for (SubsetMask comp : components(a))
                    graph_condition &= classify_component(a, comp).kind !=
                                       ComponentShape::Kind::Other;
            require(graph_condition == monomial,
                    "graph condition disagrees on " + rec.code.str());
        }
    }
}

// --- criterion 6: the two binary-detection methods agree --------------------

void criterion_method_agreement() {
    for (int n = 1; n <= 4; ++n) {
        for (const CensusRecord& rec : enumerate_classes(n)) {
            const DeltaMatroid d = decode(rec.code);
            require(is_binary_matrix_method(d).has_value() ==
                        is_binary_excluded_minor(d),
                    "methods disagree on " + rec.code.str());
        }
    }
    dmtest::RandomDm gen(0xac6);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = gen.uniform_int(1, 5);
        const DeltaMatroid d = gen.any(n);
        require(is_binary_matrix_method(d).has_value() == is_binary_excluded_minor(d),
                "methods disagree on a random delta-matroid, iteration " +
                    std::to_string(iter));
    }
}

// --- criterion 7: randomized property suites, 1000 cases each ---------------

void criterion_properties() {
    constexpr int kCases = 1000;

    dmtest::RandomDm gen(0x70b1);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n = gen.uniform_int(1, 6);
        const DeltaMatroid d = gen.any(n);
        const SubsetMask a = gen.random_mask(n), b = gen.random_mask(n);
        require(twist(twist(d, a), a) == d, "twist involution failed");
        require(twist(twist(d, a), b) == twist(d, a ^ b), "twist composition failed");
    }

    gen = dmtest::RandomDm(0x70b2);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n = gen.uniform_int(1, 6);
        const DeltaMatroid d = gen.any(n);
        const ElementId e = gen.uniform_int(0, n - 1);
        const DeltaMatroid t = twist(d, element_bit(e));
        bool has_e = false, avoids_e = false;
        d.family().for_each([&](SubsetMask m) {
            ((m >> e) & 1 ? has_e : avoids_e) = true;
        });
        // Each side is defined iff the other is, and then they agree.
        if (has_e) {
            require(delete_element(t, e) == contract(d, e), "D*e\\e != D/e");
        } else {
            bool both_throw = false;
            try {
                contract(d, e);
            } catch (const EmptyFamilyError&) {
                try {
                    delete_element(t, e);
                } catch (const EmptyFamilyError&) {
                    both_throw = true;
                }
            }
            require(both_throw, "definedness of D/e and D*e\\e disagrees");
        }
        if (avoids_e) {
            require(contract(t, e) == delete_element(d, e), "D*e/e != D\\e");
        } else {
            bool both_throw = false;
            try {
                delete_element(d, e);
            } catch (const EmptyFamilyError&) {
                try {
                    contract(t, e);
                } catch (const EmptyFamilyError&) {
                    both_throw = true;
                }
            }
            require(both_throw, "definedness of D\\e and D*e/e disagrees");
        }
        require(has_e || avoids_e, "family empty");
    }

    gen = dmtest::RandomDm(0x70b3);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n = gen.uniform_int(1, 6);
        const DeltaMatroid d = gen.any(n);
        const TwistPolynomial p = twist_polynomial(d);
        require(twist_polynomial(twist(d, gen.random_mask(n))) == p,
                "twist polynomial not twist-invariant");
        require(p.coefficient_sum() == std::uint64_t{1} << n,
                "coefficient sum is not 2^n");
        // Random relabeling by a cycle and a transposition generator mix.
        dmtest::Word w = dmtest::word_of(d);
        for (int s = 0; s + 1 < n; ++s)
            if (gen.uniform_int(0, 1)) w = dmtest::word_swap(n, w, s, s + 1);
        if (n <= 6) {
            const DeltaMatroid relabeled =
                DeltaMatroid::unchecked(FeasibleFamily::from_word(n, w));
            require(twist_polynomial(relabeled) == p,
                    "twist polynomial not isomorphism-invariant");
        }
    }

    gen = dmtest::RandomDm(0x70b4);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n1 = gen.uniform_int(1, 7);
        const int n2 = gen.uniform_int(1, 8 - n1);
        const DeltaMatroid a = gen.any(n1), b = gen.any(n2);
        require(twist_polynomial(direct_sum(a, b)) ==
                    multiply(twist_polynomial(a), twist_polynomial(b)),
                "twist polynomial not multiplicative");
    }

    gen = dmtest::RandomDm(0x70b5);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n = gen.uniform_int(1, 6);
        const DeltaMatroid d = gen.any(n);
        for (SubsetMask f0 : d.family().masks()) {
            const auto [f1, f2] = envelope(d, f0);
            require((f1 & f0) == f1 && (f0 & f2) == f0, "envelope chain broken");
            require(layer(d, true, 0).test(f1) && layer(d, false, 0).test(f2),
                    "envelope endpoints not extreme");
        }
    }

    gen = dmtest::RandomDm(0x70b6);
    for (int iter = 0; iter < kCases; ++iter) {
        const int n = gen.uniform_int(1, 6);
        const DeltaMatroid d = gen.any(n);
        const Matroid m = gen.uniform_int(0, 1) ? max_matroid(d) : min_matroid(d);
        const SubsetMask x = gen.random_mask(n), y = gen.random_mask(n);
        require(rank(m, x | y) + rank(m, x & y) <= rank(m, x) + rank(m, y),
                "rank submodularity failed");
    }
}

// --- criterion 8: oracle agreement ------------------------------------------

void criterion_oracles() {
    for (int n = 0; n <= 4; ++n) {
        for (const SymMatrixGF2& a : dmtest::all_symmetric_matrices(n)) {
            require(is_nonsingular(a) == dmtest::det_oracle(a),
                    "elimination disagrees with the determinant oracle");
            const DeltaMatroid d = dm_from_matrix(a);
            require(!check_symmetric_exchange(d.family()),
                    "matrix delta-matroid fails exchange");
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (const CensusRecord& rec : enumerate_classes(n)) {
            const DeltaMatroid d = decode(rec.code);
            require(is_binary_matrix_method(d).has_value() ==
                        dmtest::binary_by_matrix_search(d),
                    "candidate method disagrees with exhaustive matrix search");
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const auto orbits = dmtest::oracle_orbits(n);
        const auto records = enumerate_classes(n);
        require(orbits.size() == records.size(),
                "orbit count differs from census class count at n=" +
                    std::to_string(n));
        std::set<std::string> census_codes, orbit_codes;
        for (const auto& rec : records) census_codes.insert(rec.code.str());
        for (const auto& orbit : orbits) {
            std::set<std::string> in_orbit;
            for (dmtest::Word w : orbit) {
                if (!(w & 1)) continue;
                in_orbit.insert(
                    canonical_code(DeltaMatroid(FeasibleFamily::from_word(n, w)))
                        .str());
            }
            require(in_orbit.size() == 1, "orbit is split across codes");
            orbit_codes.insert(*in_orbit.begin());
        }
        require(orbit_codes == census_codes, "orbit classes differ from census");
    }
}

// --- criterion 9: format round-trips ----------------------------------------

void criterion_round_trips() {
    std::vector<DeltaMatroid> fixtures{d1(), d2(), make_odd_complete(1),
                                       make_odd_complete(2)};
    for (const DeltaMatroid& m : excluded_minors()) fixtures.push_back(m);
    for (int n = 1; n <= 6; ++n) fixtures.push_back(make_free(n));
    for (int n = 1; n <= 4; ++n)
        for (const CensusRecord& rec : enumerate_classes(n))
            fixtures.push_back(decode(rec.code));
    for (const DeltaMatroid& d : fixtures) {
        require(parse_dm(format_dm(d, DmFormat::Block)) == d, "block round-trip");
        require(parse_dm(format_dm(d, DmFormat::Compact)) == d, "compact round-trip");
    }
}

struct Criterion {
    std::string name;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    bool skip_census5 = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-census5") == 0) skip_census5 = true;
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            g_jobs = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria{
        {"1-census-table-n2-4", criterion_census_table},
        {"2-census-n5", criterion_census_n5},
        {"3-closed-form-monomials", criterion_closed_forms},
        {"4-excluded-minors", criterion_excluded_minors},
        {"5-monomial-classification", criterion_monomial_classification},
        {"6-method-agreement", criterion_method_agreement},
        {"7-property-suites", criterion_properties},
        {"8-oracles", criterion_oracles},
        {"9-format-round-trips", criterion_round_trips},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (skip_census5 && c.name == "2-census-n5") {
            std::cout << "SKIP " << c.name << " (--skip-census5)\n";
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body();
            std::cout << "PASS " << c.name << " (" << seconds_since(start)
                      << "s)\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << c.name << ": " << e.what() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
