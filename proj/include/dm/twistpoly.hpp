#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dm/core.hpp"

namespace dm {

/// Generating polynomial of twist widths: coefficient of z^w counts the
/// subsets A with width(twist(D, A)) = w. Coefficients sum to 2^n.
class TwistPolynomial {
public:
    TwistPolynomial() = default;

    void add(int exponent, std::uint64_t count) {
        if (count) coeffs_[exponent] += count;
    }

    std::uint64_t coeff(int exponent) const {
        const auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    /// Exponent -> coefficient, ascending, zero coefficients absent.
    const std::map<int, std::uint64_t>& terms() const { return coeffs_; }

    bool is_monomial() const { return coeffs_.size() == 1; }

    std::uint64_t coefficient_sum() const {
        std::uint64_t s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    bool operator==(const TwistPolynomial&) const = default;

private:
    std::map<int, std::uint64_t> coeffs_;
};

TwistPolynomial multiply(const TwistPolynomial& a, const TwistPolynomial& b);

/// Text form: ascending exponents joined by " + ", terms rendered as
/// "c" (exponent 0), "c*z" (exponent 1) or "c*z^e".
std::string to_string(const TwistPolynomial& p);

/// Inverse of to_string. Throws Error on malformed text.
TwistPolynomial parse_polynomial(const std::string& text);

/// Enumerates all 2^n twists and tallies their widths.
TwistPolynomial twist_polynomial(const DeltaMatroid& d);

/// True iff all twists share one width.
bool is_twist_monomial(const DeltaMatroid& d);

/// Ground-set partition certifying a normal twist monomial: a set F is
/// feasible iff it meets every odd block in an even number of elements;
/// the free part is unconstrained.
struct MonomialPartition {
    SubsetMask free_part = 0;
    std::vector<SubsetMask> odd_blocks;

    bool matches(const DeltaMatroid& d) const;

    bool operator==(const MonomialPartition&) const = default;
};

/// For a normal delta-matroid, the partition showing it is a direct sum of
/// odd-complete-graph blocks and free elements, or nullopt when no such
/// structure exists (equivalently, when the twist polynomial is not a
/// monomial). Throws NotNormalError.
std::optional<MonomialPartition> characterize_monomial(const DeltaMatroid& d);

/// The delta-matroid of even-size subsets of a (2k+1)-element ground set;
/// represented by the complete graph on 2k+1 vertices.
DeltaMatroid make_odd_complete(int k);

/// The delta-matroid with every subset of an n-element ground set feasible;
/// represented by n looped vertices.
DeltaMatroid make_free(int n);

}  // namespace dm
