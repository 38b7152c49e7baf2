#include "dm/twistpoly.hpp"

#include <algorithm>
#include <charconv>

#include "dm/binary.hpp"
#include "dm/gf2.hpp"

namespace dm {

TwistPolynomial multiply(const TwistPolynomial& a, const TwistPolynomial& b) {
    TwistPolynomial out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add(ea + eb, ca * cb);
    return out;
}

std::string to_string(const TwistPolynomial& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c);
        if (e == 1)
            out += "*z";
        else if (e > 1)
            out += "*z^" + std::to_string(e);
    }
    return out;
}

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(std::string("malformed polynomial ") + what + ": '" +
                    std::string(s) + "'");
    return value;
}

}  // namespace

TwistPolynomial parse_polynomial(const std::string& text) {
    TwistPolynomial p;
    std::string_view rest = text;
    int last_exponent = -1;
    while (!rest.empty()) {
        const std::size_t plus = rest.find(" + ");
        std::string_view term = rest.substr(0, plus);
        rest = plus == std::string_view::npos ? std::string_view{}
                                              : rest.substr(plus + 3);
        if (plus != std::string_view::npos && rest.empty())
            throw Error("polynomial text ends with a dangling '+'");
        std::uint64_t coeff = 0;
        int exponent = 0;
        if (const std::size_t star = term.find('*'); star == std::string_view::npos) {
            coeff = parse_uint(term, "coefficient");
        } else {
            coeff = parse_uint(term.substr(0, star), "coefficient");
            const std::string_view var = term.substr(star + 1);
            if (var == "z")
                exponent = 1;
            else if (var.substr(0, 2) == "z^")
                exponent = static_cast<int>(parse_uint(var.substr(2), "exponent"));
            else
                throw Error("malformed polynomial term: '" + std::string(term) + "'");
        }
        if (coeff == 0 || exponent <= last_exponent)
            throw Error("polynomial terms must be ascending with positive coefficients");
        last_exponent = exponent;
        p.add(exponent, coeff);
    }
    return p;
}

TwistPolynomial twist_polynomial(const DeltaMatroid& d) {
    const std::vector<SubsetMask> members = d.family().masks();
    TwistPolynomial p;
    const SubsetMask end = SubsetMask{1} << d.ground_size();
    for (SubsetMask a = 0; a < end; ++a) {
        int lo = d.ground_size() + 1;
        int hi = -1;
        for (SubsetMask m : members) {
            const int pc = std::popcount(m ^ a);
            lo = std::min(lo, pc);
            hi = std::max(hi, pc);
        }
        p.add(hi - lo, 1);
    }
    return p;
}

bool is_twist_monomial(const DeltaMatroid& d) {
    return twist_polynomial(d).is_monomial();
}

bool MonomialPartition::matches(const DeltaMatroid& d) const {
    const SubsetMask end = SubsetMask{1} << d.ground_size();
    for (SubsetMask f = 0; f < end; ++f) {
        bool even_in_blocks = true;
        for (SubsetMask b : odd_blocks)
            even_in_blocks &= std::popcount(f & b) % 2 == 0;
        if (d.family().test(f) != even_in_blocks) return false;
    }
    return true;
}

std::optional<MonomialPartition> characterize_monomial(const DeltaMatroid& d) {
    if (!is_normal(d)) throw NotNormalError();
    // A normal delta-matroid of this form is fixed by feasible twists, so a
    // representation exists at the identity twist whenever one exists at all.
    const SymMatrixGF2 a = candidate_matrix(d);
    std::optional<MonomialPartition> result;
    if (verify_representation(d, a)) {
        MonomialPartition part;
        bool shapely = true;
        for (SubsetMask comp : components(a)) {
            const ComponentShape shape = classify_component(a, comp);
            if (shape.kind == ComponentShape::Kind::LoopedVertex)
                part.free_part |= comp;
            else if (shape.kind == ComponentShape::Kind::OddComplete)
                part.odd_blocks.push_back(comp);
            else
                shapely = false;
        }
        if (shapely) result = std::move(part);
    }
#ifndef NDEBUG
    if (result) assert(result->matches(d));
    if (!result && d.ground_size() <= 4) {
        // Identity-twist check is complete: no other feasible twist may
        // produce an all-good graph when the identity one does not.
        for (SubsetMask f : d.family().masks()) {
            const DeltaMatroid t = twist(d, f);
            const SymMatrixGF2 at = candidate_matrix(t);
            if (!verify_representation(t, at)) continue;
            bool all_good = true;
            for (SubsetMask comp : components(at))
                all_good &= classify_component(at, comp).kind !=
                            ComponentShape::Kind::Other;
            assert(!all_good);
        }
    }
#endif
    return result;
}

DeltaMatroid make_odd_complete(int k) {
    if (k < 1) throw std::invalid_argument("odd-complete order parameter must be >= 1");
    const int n = 2 * k + 1;
    if (n > kMaxGroundSetSize)
        throw CapacityError("odd-complete ground set exceeds the cap of 16");
    FeasibleFamily family(n);
    for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
        if (std::popcount(m) % 2 == 0) family.set(m);
    return DeltaMatroid::unchecked(std::move(family));
}

DeltaMatroid make_free(int n) {
    if (n < 0 || n > kMaxGroundSetSize)
        throw CapacityError("free ground set must have 0 to 16 elements");
    FeasibleFamily family(n);
    for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m) family.set(m);
    return DeltaMatroid::unchecked(std::move(family));
}

}  // namespace dm
