#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dm/binary.hpp"
#include "dm/census.hpp"
#include "dm/core.hpp"
#include "dm/gf2.hpp"
#include "dm/textio.hpp"
#include "dm/twistpoly.hpp"

namespace py = pybind11;

namespace {

dm::SubsetMask mask_from_labels(const std::vector<int>& labels, int n) {
    dm::SubsetMask m = 0;
    for (int label : labels) {
        if (label < 1 || label > n)
            throw py::value_error("element label out of range [1, n]");
        m |= dm::element_bit(label - 1);
    }
    return m;
}

std::vector<int> labels_from_mask(dm::SubsetMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

dm::DeltaMatroid build(int n, const std::vector<std::vector<int>>& sets) {
    dm::FeasibleFamily family(n);
    for (const auto& s : sets) family.set(mask_from_labels(s, n));
    return dm::DeltaMatroid(std::move(family));
}

py::object graph_of(const dm::SymMatrixGF2& a) {
    std::vector<int> loops;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a.dim(); ++i) {
        if (a.get(i, i)) loops.push_back(i + 1);
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.get(i, j)) edges.emplace_back(i + 1, j + 1);
    }
    return py::make_tuple(loops, edges);
}

py::dict poly_dict(const dm::TwistPolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = py::int_(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "delta-matroid operation algebra, twist polynomials, binary "
              "detection and census enumeration";

    py::class_<dm::DeltaMatroid>(m, "DeltaMatroid")
        .def(py::init(&build), py::arg("n"), py::arg("feasible_sets"),
             "Build from 1-based feasible sets; validates the symmetric "
             "exchange axiom.")
        .def_static(
            "from_code",
            [](const std::string& text) { return dm::parse_dm(text); },
            "Parse the block format or a compact 'n:<hex>' code.")
        .def_property_readonly("n", &dm::DeltaMatroid::ground_size)
        .def("feasible_sets",
             [](const dm::DeltaMatroid& d) {
                 std::vector<std::vector<int>> out;
                 d.family().for_each(
                     [&](dm::SubsetMask m) { out.push_back(labels_from_mask(m)); });
                 return out;
             })
        .def("code",
             [](const dm::DeltaMatroid& d) {
                 return dm::format_dm(d, dm::DmFormat::Compact);
             })
        .def("block",
             [](const dm::DeltaMatroid& d) {
                 return dm::format_dm(d, dm::DmFormat::Block);
             })
        .def("twist",
             [](const dm::DeltaMatroid& d, const std::vector<int>& a) {
                 return dm::twist(d, mask_from_labels(a, d.ground_size()));
             })
        .def("delete_element",
             [](const dm::DeltaMatroid& d, int e) {
                 return dm::delete_element(d, e - 1);
             })
        .def("contract",
             [](const dm::DeltaMatroid& d, int e) { return dm::contract(d, e - 1); })
        .def("restrict",
             [](const dm::DeltaMatroid& d, const std::vector<int>& keep) {
                 return dm::restrict_to(d, mask_from_labels(keep, d.ground_size()));
             })
        .def("dual", [](const dm::DeltaMatroid& d) { return dm::dual(d); })
        .def("direct_sum",
             [](const dm::DeltaMatroid& a, const dm::DeltaMatroid& b) {
                 return dm::direct_sum(a, b);
             })
        .def("width", [](const dm::DeltaMatroid& d) { return dm::width(d); })
        .def("is_normal", [](const dm::DeltaMatroid& d) { return dm::is_normal(d); })
        .def("is_matroid",
             [](const dm::DeltaMatroid& d) { return dm::is_matroid(d); })
        .def("twist_polynomial",
             [](const dm::DeltaMatroid& d) {
                 return poly_dict(dm::twist_polynomial(d));
             })
        .def("twist_polynomial_str",
             [](const dm::DeltaMatroid& d) {
                 return dm::to_string(dm::twist_polynomial(d));
             })
        .def("is_twist_monomial",
             [](const dm::DeltaMatroid& d) { return dm::is_twist_monomial(d); })
        .def("characterize_monomial",
             [](const dm::DeltaMatroid& d) -> py::object {
                 const auto part = dm::characterize_monomial(d);
                 if (!part) return py::none();
                 std::vector<std::vector<int>> blocks;
                 for (dm::SubsetMask b : part->odd_blocks)
                     blocks.push_back(labels_from_mask(b));
                 return py::make_tuple(labels_from_mask(part->free_part), blocks);
             })
        .def("is_binary",
             [](const dm::DeltaMatroid& d, const std::string& method) {
                 if (method == "matrix")
                     return dm::is_binary_matrix_method(d).has_value();
                 if (method == "minor") return dm::is_binary_excluded_minor(d);
                 if (method == "both") {
                     const bool a = dm::is_binary_matrix_method(d).has_value();
                     const bool b = dm::is_binary_excluded_minor(d);
                     if (a != b)
                         throw std::logic_error("binary-detection methods disagree");
                     return a;
                 }
                 throw py::value_error("method must be matrix, minor or both");
             },
             py::arg("method") = "matrix")
        .def("binary_witness",
             [](const dm::DeltaMatroid& d) -> py::object {
                 const auto w = dm::is_binary_matrix_method(d);
                 if (!w) return py::none();
                 return py::make_tuple(labels_from_mask(w->twist_set),
                                       graph_of(w->matrix));
             })
        .def("canonical_code",
             [](const dm::DeltaMatroid& d) { return dm::canonical_code(d).str(); })
        .def("minors",
             [](const dm::DeltaMatroid& d) { return dm::enumerate_minors(d); })
        .def("has_minor",
             [](const dm::DeltaMatroid& d, const dm::DeltaMatroid& target)
                 -> py::object {
                 const auto w = dm::has_minor(d, target);
                 if (!w) return py::none();
                 std::vector<int> relabeling;
                 for (int image : w->relabeling) relabeling.push_back(image + 1);
                 return py::make_tuple(labels_from_mask(w->twist_set),
                                       labels_from_mask(w->deleted), relabeling);
             })
        .def("is_isomorphic",
             [](const dm::DeltaMatroid& a, const dm::DeltaMatroid& b) -> py::object {
                 const auto perm = dm::is_isomorphic(a, b);
                 if (!perm) return py::none();
                 std::vector<int> out;
                 for (int image : *perm) out.push_back(image + 1);
                 return py::cast(out);
             })
        .def("__eq__", [](const dm::DeltaMatroid& a,
                          const dm::DeltaMatroid& b) { return a == b; })
        .def("__repr__", [](const dm::DeltaMatroid& d) {
            return "DeltaMatroid(" + dm::format_dm(d, dm::DmFormat::Compact) + ")";
        });

    m.def("make_odd_complete", &dm::make_odd_complete, py::arg("k"));
    m.def("make_free", &dm::make_free, py::arg("n"));
    m.def("d1", &dm::d1, py::return_value_policy::copy);
    m.def("d2", &dm::d2, py::return_value_policy::copy);
    m.def("excluded_minors", [] {
        const auto& minors = dm::excluded_minors();
        return std::vector<dm::DeltaMatroid>(minors.begin(), minors.end());
    });
    m.def(
        "from_graph",
        [](int n, const std::vector<int>& loops,
           const std::vector<std::pair<int, int>>& edges) {
            dm::SymMatrixGF2 a(n);
            for (int v : loops) {
                if (v < 1 || v > n) throw py::value_error("loop vertex out of range");
                a.set(v - 1, v - 1, true);
            }
            for (const auto& [u, v] : edges) {
                if (u < 1 || u > n || v < 1 || v > n || u == v)
                    throw py::value_error("bad edge");
                a.set(u - 1, v - 1, true);
            }
            return dm_from_matrix(a);
        },
        py::arg("n"), py::arg("loops") = std::vector<int>{},
        py::arg("edges") = std::vector<std::pair<int, int>>{},
        "Delta-matroid of a looped simple graph on vertices 1..n.");
    m.def(
        "census",
        [](int n, int jobs) {
            py::list out;
            for (const dm::CensusRecord& rec : dm::enumerate_classes(n, jobs)) {
                py::dict row;
                row["code"] = rec.code.str();
                row["family_size"] = rec.family_size;
                row["width"] = rec.width;
                row["binary"] = rec.binary;
                row["monomial"] = rec.monomial;
                row["poly"] = poly_dict(rec.twist_poly);
                out.append(std::move(row));
            }
            return out;
        },
        py::arg("n"), py::arg("jobs") = 0,
        "Equivalence classes up to twists and isomorphism.");
}
