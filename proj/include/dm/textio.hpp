#pragma once

#include <string>
#include <string_view>

#include "dm/core.hpp"
#include "dm/gf2.hpp"

namespace dm {

struct SyntaxError : Error {
    int line = 0;

    SyntaxError(int line_number, const std::string& reason)
        : Error("line " + std::to_string(line_number) + ": " + reason),
          line(line_number) {}
};

enum class DmFormat { Block, Compact };

/// Parses either format without validating the delta-matroid axioms:
/// the block format
///
///     n 3
///     F -
///     F 1 2
///     F 1 3
///
/// with 1-based labels and "-" for the empty set, or the compact format
/// "n:<hex>" with the family bitset in little-endian bytes.
/// Throws SyntaxError.
SetSystem parse_set_system(std::string_view text);

/// parse_set_system followed by eager validation; throws SyntaxError,
/// EmptyFamilyError or ExchangeViolationError.
DeltaMatroid parse_dm(std::string_view text);

/// Inverse of parse_dm for both styles. Block style lists feasible sets in
/// ascending mask order and ends with a newline; compact style is a single
/// token without one.
std::string format_dm(const DeltaMatroid& d, DmFormat style);

/// Hex of the family bitset, little-endian bytes, lowercase, padded to
/// whole bytes.
std::string encode_family_hex(const FeasibleFamily& family);

/// A set argument: comma-separated 1-based labels, "0" for the empty set.
SubsetMask parse_set_arg(std::string_view text, int n);

/// Inverse of parse_set_arg.
std::string format_set_arg(SubsetMask m);

/// 1-based element-list rendering of one subset, "-" for the empty set.
std::string format_subset(SubsetMask m);

/// Looped-simple-graph text: one "loops: i j k" line, then one "i j" line
/// per edge, 1-based, ascending.
std::string render_graph(const SymMatrixGF2& a);

/// Inverse of render_graph for a known vertex count.
SymMatrixGF2 parse_graph(std::string_view text, int n);

}  // namespace dm
