// Command-line surface over the delta-matroid library.
//
// Exit codes: 0 = affirmative / success, 1 = negative verdict (not binary,
// not a monomial, exchange violation), 2 = input error, 3 = disagreement
// between the two binary-detection methods (unreachable in a correct build).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dm/binary.hpp"
#include "dm/census.hpp"
#include "dm/core.hpp"
#include "dm/gf2.hpp"
#include "dm/textio.hpp"
#include "dm/twistpoly.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitMethodDisagreement = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dm::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

dm::DeltaMatroid load_dm(const std::string& path) {
    return dm::parse_dm(read_file(path));
}

void print_dm(const dm::DeltaMatroid& d) {
    std::cout << dm::format_dm(d, dm::DmFormat::Block);
}

int run_check(const std::string& path) {
    const dm::SetSystem s = dm::parse_set_system(read_file(path));
    if (const auto witness = dm::check_symmetric_exchange(s)) {
        std::cout << "violation x=" << dm::format_set_arg(witness->x)
                  << " y=" << dm::format_set_arg(witness->y)
                  << " u=" << witness->u + 1 << "\n";
        return kExitNegative;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int run_op(const std::string& which, const std::string& args,
           const std::string& path) {
    const dm::DeltaMatroid d = load_dm(path);
    if (which == "dual") {
        print_dm(dm::dual(d));
        return kExitOk;
    }
    if (args.empty()) throw dm::Error("op " + which + " requires --args");
    const dm::SubsetMask a = dm::parse_set_arg(args, d.ground_size());
    if (which == "twist")
        print_dm(dm::twist(d, a));
    else if (which == "delete")
        print_dm(dm::delete_set(d, a));
    else if (which == "contract")
        print_dm(dm::contract_set(d, a));
    else if (which == "restrict")
        print_dm(dm::restrict_to(d, a));
    else
        throw dm::Error("unknown operation '" + which + "'");
    return kExitOk;
}

int run_binary(const std::string& method, const std::string& path) {
    const dm::DeltaMatroid d = load_dm(path);
    bool verdict = false;
    if (method == "matrix") {
        verdict = dm::is_binary_matrix_method(d).has_value();
    } else if (method == "minor") {
        verdict = dm::is_binary_excluded_minor(d);
    } else if (method == "both") {
        const bool by_matrix = dm::is_binary_matrix_method(d).has_value();
        const bool by_minor = dm::is_binary_excluded_minor(d);
        if (by_matrix != by_minor) {
            std::cerr << "method disagreement: matrix says "
                      << (by_matrix ? "binary" : "not-binary")
                      << ", excluded-minor says "
                      << (by_minor ? "binary" : "not-binary") << "\n";
            return kExitMethodDisagreement;
        }
        verdict = by_matrix;
    } else {
        throw dm::Error("unknown method '" + method + "'");
    }
    std::cout << (verdict ? "binary" : "not-binary") << "\n";
    return verdict ? kExitOk : kExitNegative;
}

int run_graph(const std::string& path) {
    const dm::DeltaMatroid d = load_dm(path);
    const auto witness = dm::is_binary_matrix_method(d);
    if (!witness) {
        std::cout << "NOT-BINARY\n";
        return kExitNegative;
    }
    std::cout << "twist=" << dm::format_set_arg(witness->twist_set) << "\n"
              << dm::render_graph(witness->matrix);
    return kExitOk;
}

int run_minors(const std::string& path) {
    const dm::DeltaMatroid d = load_dm(path);
    for (const dm::DeltaMatroid& minor : dm::enumerate_minors(d))
        std::cout << dm::format_dm(minor, dm::DmFormat::Compact) << "\n";
    return kExitOk;
}

int run_find_minor(const std::string& path, const std::string& target_path) {
    const dm::DeltaMatroid d = load_dm(path);
    const dm::DeltaMatroid target = load_dm(target_path);
    const auto witness = dm::has_minor(d, target);
    if (!witness) {
        std::cout << "none\n";
        return kExitNegative;
    }
    std::cout << "twist=" << dm::format_set_arg(witness->twist_set)
              << " delete=" << dm::format_set_arg(witness->deleted) << " map=";
    for (std::size_t i = 0; i < witness->relabeling.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << witness->relabeling[i] + 1;
    }
    if (witness->relabeling.empty()) std::cout << '-';
    std::cout << "\n";
    return kExitOk;
}

int run_census(int n, const std::string& out_path, int jobs) {
    const std::vector<dm::CensusRecord> records = dm::enumerate_classes(n, jobs);
    std::size_t binary_count = 0;
    for (const auto& rec : records) binary_count += rec.binary ? 1 : 0;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw dm::Error("cannot open '" + out_path + "' for writing");
        dm::write_catalog(records, out);
    }
    std::cout << "classes=" << records.size() << " binary=" << binary_count << "\n";
    return kExitOk;
}

int run_gen(const std::string& family, int value) {
    if (family == "odd-complete")
        print_dm(dm::make_odd_complete(value));
    else if (family == "free")
        print_dm(dm::make_free(value));
    else
        throw dm::Error("unknown generator '" + family + "'");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta-matroid operations, twist polynomials, binary "
                 "detection and census enumeration"};
    app.require_subcommand(1);

    std::string file, file2, args, method = "matrix", out_path, gen_family;
    std::string op_name;
    int census_n = 0, jobs = 0, gen_value = 0;

    auto* check = app.add_subcommand("check", "validate the symmetric exchange axiom");
    check->add_option("file", file)->required();

    auto* op = app.add_subcommand("op", "apply twist/delete/contract/restrict/dual");
    op->add_option("operation", op_name)
        ->required()
        ->check(CLI::IsMember({"twist", "delete", "contract", "restrict", "dual"}));
    op->add_option("--args", args, "1-based comma-separated set, 0 for the empty set");
    op->add_option("file", file)->required();

    auto* sum = app.add_subcommand("sum", "direct sum of two delta-matroids");
    sum->add_option("file1", file)->required();
    sum->add_option("file2", file2)->required();

    auto* width_cmd = app.add_subcommand("width", "width of a delta-matroid");
    width_cmd->add_option("file", file)->required();

    auto* poly = app.add_subcommand("poly", "twist polynomial");
    poly->add_option("file", file)->required();

    auto* monomial = app.add_subcommand("monomial", "is the twist polynomial a monomial");
    monomial->add_option("file", file)->required();

    auto* binary = app.add_subcommand("binary", "is the delta-matroid binary");
    binary->add_option("--method", method)
        ->check(CLI::IsMember({"matrix", "minor", "both"}));
    binary->add_option("file", file)->required();

    auto* graph = app.add_subcommand("graph", "witness looped simple graph");
    graph->add_option("file", file)->required();

    auto* minors = app.add_subcommand("minors", "all minors up to isomorphism");
    minors->add_option("file", file)->required();

    auto* find_minor = app.add_subcommand("find-minor", "search for a minor");
    find_minor->add_option("file", file)->required();
    find_minor->add_option("target", file2)->required();

    auto* census = app.add_subcommand("census", "enumerate classes up to twist and isomorphism");
    census->add_option("n", census_n)->required();
    census->add_option("--out", out_path, "write a catalog file");
    census->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    auto* gen = app.add_subcommand("gen", "generate a named family");
    gen->add_option("family", gen_family)
        ->required()
        ->check(CLI::IsMember({"odd-complete", "free"}));
    gen->add_option("value", gen_value)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(file);
        if (op->parsed()) return run_op(op_name, args, file);
        if (sum->parsed()) {
            print_dm(dm::direct_sum(load_dm(file), load_dm(file2)));
            return kExitOk;
        }
        if (width_cmd->parsed()) {
            std::cout << dm::width(load_dm(file)) << "\n";
            return kExitOk;
        }
        if (poly->parsed()) {
            std::cout << dm::to_string(dm::twist_polynomial(load_dm(file))) << "\n";
            return kExitOk;
        }
        if (monomial->parsed()) {
            const bool mono = dm::is_twist_monomial(load_dm(file));
            std::cout << (mono ? "monomial" : "not-monomial") << "\n";
            return mono ? kExitOk : kExitNegative;
        }
        if (binary->parsed()) return run_binary(method, file);
        if (graph->parsed()) return run_graph(file);
        if (minors->parsed()) return run_minors(file);
        if (find_minor->parsed()) return run_find_minor(file, file2);
        if (census->parsed()) return run_census(census_n, out_path, jobs);
        if (gen->parsed()) return run_gen(gen_family, gen_value);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
