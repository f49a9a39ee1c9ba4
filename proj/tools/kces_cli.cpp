// kces: construct depth-k completely entangled subspaces, decide
// unextendibility of product-vector sets, and evaluate the dimension and
// cardinality formulas, all in exact rational arithmetic.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kces/json_io.hpp"

namespace {

using namespace kces;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const Json& j, const std::optional<std::string>& out_path) {
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out)
            throw std::invalid_argument("cannot write file: " + *out_path);
        out << dump(j);
    } else {
        std::cout << dump(j);
    }
}

std::vector<Rational> parse_nodes(const std::string& csv) {
    std::vector<Rational> nodes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        nodes.push_back(rational_from_string(item));
    return nodes;
}

std::string shape_to_string(const Composition& c) {
    std::string s;
    for (long p : c.parts)
        s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

struct Options {
    long d = 0, n = 0, k = 0;
    long count = 0;
    std::string nodes_csv;
    std::string in_path, out_path, name;
    int level = 0;
    int row = 0;
    bool json = false;
};

int run_dims(const Options& o) {
    const Scenario s(o.d, o.n, o.k);
    const Int dim = max_kces_dim(s);
    const Composition shape = optimal_partition_shape(s);
    const Int spanning = min_spanning_count(s);
    if (o.json) {
        Json j{{"d", s.d},
               {"n", s.n},
               {"k", s.k},
               {"max_kces_dim", dim.get_str()},
               {"optimal_partition_shape", shape.parts},
               {"min_spanning_count", spanning.get_str()}};
        std::cout << dump(j);
    } else {
        std::cout << "max k-CES dim: " << dim.get_str() << "\n"
                  << "optimal partition shape: " << shape_to_string(shape) << "\n"
                  << "min spanning count: " << spanning.get_str() << "\n";
    }
    return 0;
}

int run_bounds(const Options& o) {
    const Scenario s(o.d, o.n, o.k);
    const Int trivial = min_upb_trivial(s);
    const Int pigeon = pigeonhole_bound(s);
    const CombinedBound combined = combined_lower_bound(s);
    if (o.json) {
        Json j{{"d", s.d},
               {"n", s.n},
               {"k", s.k},
               {"trivial_bound", trivial.get_str()},
               {"pigeonhole_bound", pigeon.get_str()},
               {"combined_bound", combined.value.get_str()},
               {"pigeonhole_strict", combined.pigeonhole_strict}};
        std::cout << dump(j);
    } else {
        std::cout << "trivial bound: " << trivial.get_str() << "\n"
                  << "pigeonhole bound: " << pigeon.get_str() << "\n"
                  << "combined bound: " << combined.value.get_str()
                  << (combined.pigeonhole_strict ? " (pigeonhole strict)" : " (pigeonhole not strict)")
                  << "\n";
    }
    return 0;
}

int run_construct(const Options& o) {
    const Scenario s(o.d, o.n, o.k);
    std::optional<std::vector<Rational>> nodes;
    if (!o.nodes_csv.empty())
        nodes = parse_nodes(o.nodes_csv);
    const long count = o.count > 0 ? o.count
                                   : static_cast<long>(min_spanning_count(s).get_si());
    const KcesResult result = build_kces(s, count, std::move(nodes));
    emit(to_json(result), o.out_path.empty() ? std::nullopt
                                             : std::make_optional(o.out_path));
    return 0;
}

int run_verify(const Options& o) {
    const Json j = read_json_file(o.in_path);
    const ProductSet set = product_set_from_json(j);
    const Verdict verdict = verify_level(set, o.level);
    std::cout << dump(to_json(verdict));
    return 0;
}

int run_depth(const Options& o) {
    const Json j = read_json_file(o.in_path);
    RVector v;
    std::vector<long> dims;
    if (j.contains("basis")) {
        const SubspaceBasis b = subspace_basis_from_json(j);
        if (o.row < 0 || static_cast<std::size_t>(o.row) >= b.basis.rows)
            throw std::invalid_argument("row index out of range");
        v = b.basis.row(static_cast<std::size_t>(o.row));
        dims = b.dims;
    } else if (j.contains("vector")) {
        dims.clear();
        for (const auto& e : j.at("dims"))
            dims.push_back(e.get<long>());
        for (const auto& e : j.at("vector"))
            v.push_back(rational_from_string(e.get<std::string>()));
    } else {
        throw std::invalid_argument("depth input needs a \"basis\" or a \"vector\" field");
    }
    const DepthResult result = vector_depth(v, dims);
    Json out{{"depth", result.depth}, {"finest_partition", to_json(result.finest)}};
    std::cout << dump(out);
    return 0;
}

int run_catalog(const Options& o) {
    const CatalogEntry entry = catalog(o.name);
    const Json j = std::holds_alternative<ProductSet>(entry)
                       ? to_json(std::get<ProductSet>(entry))
                       : to_json(std::get<SubspaceBasis>(entry));
    emit(j, o.out_path.empty() ? std::nullopt : std::make_optional(o.out_path));
    return 0;
}

int run_ppt_state(const Options& o) {
    const Json j = read_json_file(o.in_path);
    const ProductSet set = product_set_from_json(j);
    const PptState state = ppt_state_from_set(set);
    emit(to_json(state), o.out_path.empty() ? std::nullopt
                                            : std::make_optional(o.out_path));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for depth-k completely entangled subspaces"};
    app.require_subcommand(1);

    if (const char* threads = std::getenv("KCES_THREADS")) {
        // Accepted as an upper bound on worker threads; the current
        // implementation is single-threaded, so any positive value is valid.
        char* end = nullptr;
        const long v = std::strtol(threads, &end, 10);
        if (end == threads || *end != '\0' || v < 1) {
            std::cerr << "error: KCES_THREADS must be a positive integer\n";
            return 2;
        }
    }

    Options o;

    auto add_scenario = [&](CLI::App* cmd) {
        cmd->add_option("--d", o.d, "local dimension (>= 2)")->required();
        cmd->add_option("--n", o.n, "party count (>= 3)")->required();
        cmd->add_option("--k", o.k, "depth threshold (2 <= k <= n)")->required();
    };

    CLI::App* dims = app.add_subcommand("dims", "dimension formulas for a scenario");
    add_scenario(dims);
    dims->add_flag("--json", o.json, "JSON output");

    CLI::App* bounds = app.add_subcommand("bounds", "cardinality bounds for a scenario");
    add_scenario(bounds);
    bounds->add_flag("--json", o.json, "JSON output");

    CLI::App* construct = app.add_subcommand("construct", "build a k-CES from Vandermonde vectors");
    add_scenario(construct);
    construct->add_option("--count", o.count, "number of spanning vectors (default: minimum)");
    construct->add_option("--nodes", o.nodes_csv, "comma-separated increasing positive nodes");
    construct->add_option("--out", o.out_path, "output file (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "level-j unextendibility of a product set");
    verify->add_option("--in", o.in_path, "ProductSet JSON file")->required();
    verify->add_option("--level", o.level, "producibility level j")->required();

    CLI::App* depth = app.add_subcommand("depth", "entanglement depth of a vector");
    depth->add_option("--in", o.in_path, "SubspaceBasis or raw-vector JSON file")->required();
    depth->add_option("--row", o.row, "basis row index (default 0)");

    CLI::App* cat = app.add_subcommand("catalog", "emit a named product set or basis");
    cat->add_option("--name", o.name, "shifts | k4 | k4bar | k5 | shor | ghzN")->required();
    cat->add_option("--out", o.out_path, "output file (default: stdout)");

    CLI::App* ppt = app.add_subcommand("ppt-state", "orthocomplement state with PPT verdicts");
    ppt->add_option("--in", o.in_path, "ProductSet JSON file")->required();
    ppt->add_option("--out", o.out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dims->parsed())
            return run_dims(o);
        if (bounds->parsed())
            return run_bounds(o);
        if (construct->parsed())
            return run_construct(o);
        if (verify->parsed())
            return run_verify(o);
        if (depth->parsed())
            return run_depth(o);
        if (cat->parsed())
            return run_catalog(o);
        if (ppt->parsed())
            return run_ppt_state(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
