#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "dm/binary.hpp"
#include "dm/census.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_dm.hpp"

using namespace dm;
using dmtest::make_dm;

TEST_CASE("canonical code of d1") {
    // Normal representatives: the three feasible twists, closed under the
    // swap permutation.
    std::set<dmtest::Word> closure;
    for (const int f : {0, 1, 2}) {
        const dmtest::Word t = dmtest::word_twist(2, dmtest::word_of(d1()), f);
        closure.insert(t);
        closure.insert(dmtest::word_swap(2, t, 0, 1));
    }
    CHECK(closure == std::set<dmtest::Word>{0x7, 0xb, 0xd});

    const CanonicalCode code = canonical_code(d1());
    CHECK(code.word == 0x7);
    CHECK(code.str() == "2:07");
    for (SubsetMask a = 0; a < 4; ++a)
        CHECK(canonical_code(twist(d1(), a)) == code);
}

TEST_CASE("one-element delta-matroids share a class") {
    const CanonicalCode lone = canonical_code(make_dm(1, {{}}));
    CHECK(lone.str() == "1:01");
    CHECK(canonical_code(make_dm(1, {{1}})) == lone);
}

TEST_CASE("canonical codes are idempotent class invariants") {
    dmtest::RandomDm gen(0xcafe);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = gen.uniform_int(1, 4);
        const DeltaMatroid d = gen.any(n);
        const CanonicalCode code = canonical_code(d);
        CHECK(canonical_code(decode(code)) == code);  // fixed point
        CHECK(canonical_code(twist(d, gen.random_mask(n))) == code);
        const int i = gen.uniform_int(0, n - 1), j = gen.uniform_int(0, n - 1);
        const DeltaMatroid relabeled =
            DeltaMatroid::unchecked(FeasibleFamily::from_word(
                n, dmtest::word_swap(n, dmtest::word_of(d), i, j)));
        CHECK(canonical_code(relabeled) == code);
        CHECK(is_normal(decode(code)));
    }
    CHECK_THROWS_AS(
        canonical_code(DeltaMatroid(FeasibleFamily::from_masks(7, {0}))),
        CapacityError);
}

TEST_CASE("census counts match for small ground sets") {
    const auto n2 = enumerate_classes(2);
    CHECK(n2.size() == 5);
    CHECK(std::count_if(n2.begin(), n2.end(),
                        [](const CensusRecord& r) { return r.binary; }) == 5);

    const auto n3 = enumerate_classes(3);
    CHECK(n3.size() == 16);
    CHECK(std::count_if(n3.begin(), n3.end(),
                        [](const CensusRecord& r) { return r.binary; }) == 13);

    const auto n4 = enumerate_classes(4);
    CHECK(n4.size() == 90);
    CHECK(std::count_if(n4.begin(), n4.end(),
                        [](const CensusRecord& r) { return r.binary; }) == 40);

    CHECK(enumerate_classes(1).size() == 2);
    CHECK_THROWS_AS(enumerate_classes(0), CapacityError);
    CHECK_THROWS_AS(enumerate_classes(6), CapacityError);
}

TEST_CASE("census classes decode to valid delta-matroids with consistent fields") {
    for (int n = 1; n <= 4; ++n) {
        for (const CensusRecord& rec : enumerate_classes(n)) {
            const DeltaMatroid d = decode(rec.code);
            CHECK_FALSE(check_symmetric_exchange(d.family()));
            CHECK(is_normal(d));
            CHECK(rec.family_size == static_cast<int>(d.family().count()));
            CHECK(rec.width == width(d));
            CHECK(rec.binary == is_binary_matrix_method(d).has_value());
            CHECK(rec.twist_poly == twist_polynomial(d));
            CHECK(rec.monomial == is_twist_monomial(d));
        }
    }
}

TEST_CASE("census agrees with the independent orbit partition up to n = 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto orbits = dmtest::oracle_orbits(n);
        const auto records = enumerate_classes(n);
        CHECK(orbits.size() == records.size());

        std::set<std::string> census_codes;
        for (const auto& rec : records) census_codes.insert(rec.code.str());
        std::set<std::string> orbit_codes;
        for (const auto& orbit : orbits) {
            std::set<std::string> codes_in_orbit;
            for (dmtest::Word w : orbit) {
                if (!(w & 1)) continue;  // canonical codes need normal members
                const DeltaMatroid d =
                    DeltaMatroid(FeasibleFamily::from_word(n, w));
                codes_in_orbit.insert(canonical_code(d).str());
            }
            CHECK(codes_in_orbit.size() == 1);  // one code per class
            orbit_codes.insert(*codes_in_orbit.begin());
        }
        CHECK(orbit_codes == census_codes);
    }
}

TEST_CASE("both enumeration routes agree") {
    for (int n = 2; n <= 4; ++n) {
        const auto brute = census_detail::canonical_words_brute(n);
        CHECK(census_detail::canonical_words_search(n, 1) == brute);
        CHECK(census_detail::canonical_words_search(n, 3) == brute);
    }
}

TEST_CASE("catalog round-trip") {
    const auto records = enumerate_classes(3);
    std::ostringstream out;
    write_catalog(records, out);
    std::istringstream in(out.str());
    const auto back = read_catalog(in);
    CHECK(back == records);

    std::ostringstream again;
    write_catalog(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("header-only catalog") {
    std::ostringstream out;
    write_catalog({}, out);
    CHECK(out.str() == "dm-census v1 n=0\n");
    std::istringstream in(out.str());
    CHECK(read_catalog(in).empty());
}

TEST_CASE("malformed catalogs are rejected with line numbers") {
    const auto expect_reject = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_catalog(in);
            FAIL("expected MalformedLineError for: " << text);
        } catch (const MalformedLineError& e) {
            CHECK(e.line == line);
        }
    };
    expect_reject("bogus header\n", 1);
    // A family bit at position 4 is out of range for n = 2.
    expect_reject("dm-census v1 n=2\n2:17 |F|=4 w=1 binary=1 monomial=0 poly=4*z\n", 2);
    expect_reject("dm-census v1 n=2\n3:07 |F|=3 w=1 binary=1 monomial=0 poly=2*z\n", 2);
    expect_reject("dm-census v1 n=2\n2:07 |F|=4 w=1 binary=1 monomial=0 poly=2*z\n", 2);
    expect_reject("dm-census v1 n=2\n2:0x |F|=3 w=1 binary=1 monomial=0 poly=2*z\n", 2);
    expect_reject("dm-census v1 n=2\n2:07 |F|=3 w=1 binary=7 monomial=0 poly=2*z\n", 2);
    expect_reject("dm-census v1 n=2\n2:06 |F|=2 w=0 binary=1 monomial=1 poly=4\n", 2);
    expect_reject(
        "dm-census v1 n=2\n2:07 |F|=3 w=1 binary=1 monomial=0 poly=2*z + 2*z^2\n"
        "2:07 |F|=3 w=1 binary=1 monomial=0 poly=oops\n",
        3);
}
