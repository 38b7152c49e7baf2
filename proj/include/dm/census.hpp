#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "dm/core.hpp"
#include "dm/twistpoly.hpp"

namespace dm {

/// Deterministic identifier of an equivalence class under ground-set
/// permutations and twists: the numerically smallest family bitset word
/// over all normal representatives of the class. Rendered as "n:<hex>"
/// with the bitset packed into little-endian bytes, lowercase hex.
struct CanonicalCode {
    int n = 0;
    std::uint64_t word = 0;

    std::string hex() const;
    std::string str() const;

    auto operator<=>(const CanonicalCode&) const = default;
};

/// Minimizes the family bitstring over all feasible twists and all
/// ground-set permutations. Throws CapacityError for n > 6.
CanonicalCode canonical_code(const DeltaMatroid& d);

/// The normal delta-matroid a code denotes; validates eagerly.
DeltaMatroid decode(const CanonicalCode& code);

struct CensusRecord {
    CanonicalCode code;
    int family_size = 0;
    int width = 0;
    bool binary = false;
    TwistPolynomial twist_poly;
    bool monomial = false;

    bool operator==(const CensusRecord&) const = default;
};

/// One record per equivalence class of delta-matroids on n elements,
/// ordered by canonical code. Supported for 1 <= n <= 5; n = 5 is
/// long-running. jobs = 0 uses the hardware concurrency.
std::vector<CensusRecord> enumerate_classes(int n, int jobs = 0);

/// Line-oriented catalog: header "dm-census v1 n=<n>", then one record
/// per line. UTF-8, LF line endings.
void write_catalog(const std::vector<CensusRecord>& records, std::ostream& out);

struct MalformedLineError : Error {
    int line = 0;

    MalformedLineError(int line_number, const std::string& reason)
        : Error("catalog line " + std::to_string(line_number) + ": " + reason),
          line(line_number) {}
};

/// Inverse of write_catalog. Throws MalformedLineError with the offending
/// line number when the file is corrupt.
std::vector<CensusRecord> read_catalog(std::istream& in);

namespace census_detail {

/// Canonical family words by exhaustive scan of all normal families
/// (n <= 4) and by the pruned depth-first search (n <= 5). The two routes
/// agree where both apply; enumerate_classes uses the scan up to n = 4 and
/// the search at n = 5.
std::set<std::uint64_t> canonical_words_brute(int n);
std::set<std::uint64_t> canonical_words_search(int n, int jobs);

}  // namespace census_detail

}  // namespace dm
