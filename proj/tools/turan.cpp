#include <turan/constructions.hpp>
#include <turan/error.hpp>
#include <turan/extremal.hpp>
#include <turan/homomorphism.hpp>
#include <turan/io.hpp>
#include <turan/lagrangian.hpp>
#include <turan/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace turan;

// ---------------------------------------------------------------------------
// Argument helpers
// ---------------------------------------------------------------------------

// A graph argument is, in order of precedence: a readable file holding the
// canonical JSON document, a catalog name, or digit shorthand such as
// "1;2;123" (loop edges inferred from repeated digits).
RGraph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graph(buffer.str());
    }
    for (const CatalogEntry& entry : catalog())
        if (entry.name == arg) return entry.graph;
    bool repeats = false;
    for (std::size_t i = 1; i < arg.size(); ++i)
        if (std::isdigit(static_cast<unsigned char>(arg[i])) && arg[i] == arg[i - 1])
            repeats = true;
    return graph_from_shorthand(arg, 0, repeats);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError,
                 std::string(what) + " wants a comma-separated integer list, got \"" + text + "\"");
        }
    }
    if (out.empty())
        fail(ErrorKind::ParseError, std::string(what) + " wants a non-empty integer list");
    return out;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) out.push_back(token);
    }
    return out;
}

ForbiddenFamily load_family(const std::string& listing) {
    std::vector<RGraph> members;
    for (const std::string& part : split_commas(listing)) members.push_back(load_graph(part));
    return make_family(std::move(members));
}

std::string format_map(const VertexMap& map) {
    std::string out;
    for (int v = 1; v <= map.source_n; ++v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v) + "->" + std::to_string(map.assignment[v - 1]);
    }
    return out;
}

std::string sig20(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.20g", v);
    return buf;
}

nlohmann::json root3_json(const Root3& v) {
    return {{"rational_part", v.rational_part().to_string()},
            {"sqrt3_coefficient", v.root_part().to_string()},
            {"decimal", v.to_double()},
            {"text", v.to_string()}};
}

HomFlavor parse_flavor(const std::string& name) {
    if (name == "lax") return HomFlavor::Lax;
    if (name == "edge-injective") return HomFlavor::EdgeInjective;
    if (name == "multiset") return HomFlavor::Multiset;
    fail(ErrorKind::ParseError, "unknown homomorphism flavor \"" + name +
                                    "\" (expected lax, edge-injective, or multiset)");
}

// ---------------------------------------------------------------------------
// Subcommand bodies (each returns the process exit code)
// ---------------------------------------------------------------------------

int cmd_catalog(const std::string& name) {
    if (!name.empty()) {
        std::cout << serialize_graph(catalog_entry(name).graph) << "\n";
        return 0;
    }
    std::size_t width = 0;
    for (const CatalogEntry& entry : catalog()) width = std::max(width, entry.name.size());
    for (const CatalogEntry& entry : catalog()) {
        std::cout << entry.name << std::string(width - entry.name.size() + 2, ' ')
                  << serialize_graph(entry.graph);
        if (entry.known_density) std::cout << "  density " << entry.known_density->to_string();
        std::cout << "\n";
    }
    return 0;
}

int cmd_lagrangian(const std::string& arg, double tol, int oracle_res, bool as_json) {
    LagrangianOptions opts;
    opts.tolerance = tol;
    opts.oracle_resolution = oracle_res;
    LagrangianResult res = lagrangian(load_graph(arg), opts);
    if (as_json) {
        nlohmann::json doc;
        doc["value"] = res.value;
        doc["value_text"] = sig20(res.value);
        doc["maximizer"] = nlohmann::json::array();
        for (int i = 0; i < res.maximizer.size(); ++i) doc["maximizer"].push_back(res.maximizer(i));
        doc["support"] = res.support;
        doc["kkt_residual"] = res.kkt_residual;
        doc["cross_checked"] = res.cross_checked;
        if (res.cross_checked) {
            doc["oracle_value"] = res.oracle_value.to_double();
            doc["oracle_value_exact"] = res.oracle_value.to_string();
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "value         " << sig20(res.value) << "\n";
    std::cout << "maximizer    ";
    for (int i = 0; i < res.maximizer.size(); ++i) std::cout << " " << sig20(res.maximizer(i));
    std::cout << "\n";
    std::cout << "support      ";
    for (int v : res.support) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "kkt_residual  " << sig20(res.kkt_residual) << "\n";
    if (res.cross_checked) {
        std::cout << "oracle_value  " << sig20(res.oracle_value.to_double()) << " = "
                  << res.oracle_value.to_string() << "\n";
    }
    return 0;
}

int cmd_pi_n(const std::string& forbid, int n, bool heuristic, double budget) {
    ForbiddenFamily family = load_family(forbid);
    ExtremalResult res = heuristic
                             ? heuristic_pi_n(family, n, static_cast<long long>(budget))
                             : exact_pi_n(family, n);
    if (res.lower_bound_only)
        std::cerr << "note: heuristic search; the value is a lower bound\n";
    std::cout << res.value.to_string() << "\n";
    std::cout << serialize_graph(res.witness) << "\n";
    return 0;
}

int cmd_classify(const std::string& arg) {
    PiClassification c = classify_pi_13(load_graph(arg));
    nlohmann::json doc;
    switch (c.kind) {
        case PiClassification::Kind::Exact: doc["kind"] = "exact"; break;
        case PiClassification::Kind::Interval: doc["kind"] = "interval"; break;
        case PiClassification::Kind::UnknownWithBounds: doc["kind"] = "unknown-with-bounds"; break;
    }
    if (c.kind == PiClassification::Kind::Exact) {
        doc["value"] = root3_json(c.value);
    } else {
        doc["lower"] = root3_json(c.lower);
        doc["upper"] = root3_json(c.upper);
    }
    doc["evidence"] = nlohmann::json::array();
    for (const Evidence& ev : c.evidence) {
        nlohmann::json item = {{"rule", ev.rule}, {"detail", ev.detail}};
        if (ev.map) item["map"] = ev.map->assignment;
        doc["evidence"].push_back(item);
    }
    if (!c.conjecture_note.empty()) doc["conjecture_note"] = c.conjecture_note;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_degenerate13(const std::string& arg) {
    DegeneracyResult res = is_degenerate_13(load_graph(arg));
    if (res.degenerate) {
        std::cout << "YES";
        if (res.witness) std::cout << "  " << format_map(*res.witness);
        std::cout << "\n";
    } else {
        std::cout << "NO\n";
    }
    return 0;
}

int cmd_reproduce(const std::string& only, bool as_json) {
    ReproduceReport report = only.empty() ? reproduce() : reproduce(split_commas(only));
    if (as_json)
        std::cout << to_json(report) << "\n";
    else
        std::cout << to_text(report);
    return report.all_pass() ? 0 : 1;
}

int cmd_trend(const std::vector<std::string>& forbids, int n_min, int n_max,
              const std::string& csv_path) {
    std::vector<LabeledFamily> families;
    for (const std::string& spec : forbids) families.push_back({spec, load_family(spec)});
    std::string csv = trend_csv(families, n_min, n_max);
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) fail(ErrorKind::ParseError, "cannot open \"" + csv_path + "\" for writing");
        out << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turan-type computations on non-uniform hypergraphs"};
    app.require_subcommand(1);

    // Graph arguments accept a JSON document file, a catalog name, or digit
    // shorthand like "1;2;123".
    std::string arg_a, arg_b, flavor = "edge-injective", sizes, types, name;
    std::string forbid, only, csv_path;
    std::vector<std::string> forbids;
    int t = 1, n = 0, n_min = 4, n_max = 6, oracle_res = 0;
    double tol = 1e-9, budget = 1e6;
    bool as_json = false, heuristic = false, exact = false;

    CLI::App* product_cmd = app.add_subcommand("product", "Cross product of two graphs");
    product_cmd->add_option("A", arg_a, "first factor")->required();
    product_cmd->add_option("B", arg_b, "second factor")->required();

    CLI::App* blowup_cmd = app.add_subcommand("blowup", "Replace each vertex by a class");
    blowup_cmd->add_option("G", arg_a, "graph to blow up")->required();
    blowup_cmd->add_option("--sizes", sizes, "comma-separated class sizes, one per vertex")
        ->required();

    CLI::App* suspend_cmd =
        app.add_subcommand("suspend", "Join fresh apex vertices to every edge");
    suspend_cmd->add_option("G", arg_a, "graph to suspend")->required();
    suspend_cmd->add_option("-t", t, "number of apex vertices (default 1)");

    CLI::App* tsuspend_cmd = app.add_subcommand(
        "tsuspend", "Partial suspension: one apex joined to the larger edges only");
    tsuspend_cmd->add_option("G", arg_a, "graph with cardinalities {1,t}")->required();

    CLI::App* chain_cmd = app.add_subcommand("chain", "Nested-prefix chain for a cardinality set");
    chain_cmd->add_option("--types", types, "comma-separated cardinalities, e.g. 1,3")->required();

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "List or print named graphs");
    catalog_cmd->add_option("name", name, "entry name (omit to list all)");

    CLI::App* hom_cmd = app.add_subcommand("hom", "Search for a homomorphism G -> H");
    hom_cmd->add_option("G", arg_a, "source graph")->required();
    hom_cmd->add_option("H", arg_b, "target graph")->required();
    hom_cmd->add_option("--flavor", flavor, "lax | edge-injective | multiset");

    CLI::App* contains_cmd = app.add_subcommand("contains", "Does G contain a copy of H?");
    contains_cmd->add_option("G", arg_a, "host graph")->required();
    contains_cmd->add_option("H", arg_b, "subgraph to find")->required();

    CLI::App* iso_cmd = app.add_subcommand("iso", "Are two graphs isomorphic?");
    iso_cmd->add_option("G", arg_a, "first graph")->required();
    iso_cmd->add_option("H", arg_b, "second graph")->required();

    CLI::App* lagr_cmd =
        app.add_subcommand("lagrangian", "Maximize the weight polynomial over the simplex");
    lagr_cmd->add_option("P", arg_a, "pattern (loop edges allowed)")->required();
    lagr_cmd->add_option("--tol", tol, "accepted optimizer-vs-oracle gap (default 1e-9)");
    lagr_cmd->add_option("--oracle-res", oracle_res, "grid oracle resolution (0 = automatic)");
    lagr_cmd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* pin_cmd = app.add_subcommand("pi-n", "Largest density of a family-free host");
    pin_cmd->add_option("--forbid", forbid, "comma-separated forbidden graphs")->required();
    pin_cmd->add_option("-n", n, "number of host vertices")->required();
    pin_cmd->add_flag("--exact", exact, "exact search (default)");
    pin_cmd->add_flag("--heuristic", heuristic, "stochastic lower bound instead of exact search");
    pin_cmd->add_option("--budget", budget, "heuristic budget in freeness checks (default 1e6)");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Limiting density of a {1,3}-graph, as JSON");
    classify_cmd->add_option("H", arg_a, "graph with cardinalities inside {1,3}")->required();

    CLI::App* degen_cmd =
        app.add_subcommand("degenerate13", "Least-possible-density test for a {1,3}-graph");
    degen_cmd->add_option("H", arg_a, "graph with cardinalities inside {1,3}")->required();

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "Non-trivial least-density graph for a cardinality set");
    witness_cmd->add_option("--types", types, "comma-separated cardinalities, e.g. 2,4")
        ->required();

    CLI::App* repro_cmd =
        app.add_subcommand("reproduce", "Recompute every documented constant with pass/fail rows");
    repro_cmd->add_option("--only", only, "comma-separated claim ids (default: all)");
    repro_cmd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* trend_cmd = app.add_subcommand("trend", "CSV of exact densities over a range of n");
    trend_cmd->add_option("--forbid", forbids,
                          "one family per flag occurrence, members comma-separated");
    trend_cmd->add_option("--n-min", n_min, "first n (default 4)");
    trend_cmd->add_option("--n-max", n_max, "last n (default 6)");
    trend_cmd->add_option("--csv", csv_path, "write to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (product_cmd->parsed()) {
            std::cout << serialize_graph(product(load_graph(arg_a), load_graph(arg_b))) << "\n";
            return 0;
        }
        if (blowup_cmd->parsed()) {
            std::cout << serialize_graph(
                             blow_up(load_graph(arg_a), parse_int_list(sizes, "--sizes")))
                      << "\n";
            return 0;
        }
        if (suspend_cmd->parsed()) {
            std::cout << serialize_graph(suspension(load_graph(arg_a), t)) << "\n";
            return 0;
        }
        if (tsuspend_cmd->parsed()) {
            std::cout << serialize_graph(partial_suspension(load_graph(arg_a))) << "\n";
            return 0;
        }
        if (chain_cmd->parsed()) {
            std::cout << serialize_graph(chain(parse_int_list(types, "--types"))) << "\n";
            return 0;
        }
        if (catalog_cmd->parsed()) return cmd_catalog(name);
        if (hom_cmd->parsed()) {
            std::optional<VertexMap> map =
                find_homomorphism(load_graph(arg_a), load_graph(arg_b), parse_flavor(flavor));
            if (!map) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << format_map(*map) << "\n";
            return 0;
        }
        if (contains_cmd->parsed()) {
            std::optional<VertexMap> map =
                contains_subgraph(load_graph(arg_a), load_graph(arg_b));
            if (!map) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << format_map(*map) << "\n";
            return 0;
        }
        if (iso_cmd->parsed()) {
            if (isomorphic(load_graph(arg_a), load_graph(arg_b))) {
                std::cout << "ISOMORPHIC\n";
                return 0;
            }
            std::cout << "NOT ISOMORPHIC\n";
            return 1;
        }
        if (lagr_cmd->parsed()) return cmd_lagrangian(arg_a, tol, oracle_res, as_json);
        if (pin_cmd->parsed()) {
            if (exact && heuristic)
                fail(ErrorKind::ParseError, "--exact and --heuristic exclude each other");
            return cmd_pi_n(forbid, n, heuristic, budget);
        }
        if (classify_cmd->parsed()) return cmd_classify(arg_a);
        if (degen_cmd->parsed()) return cmd_degenerate13(arg_a);
        if (witness_cmd->parsed()) {
            std::cout << serialize_graph(
                             nontrivial_degenerate_witness(parse_int_list(types, "--types")))
                      << "\n";
            return 0;
        }
        if (repro_cmd->parsed()) return cmd_reproduce(only, as_json);
        if (trend_cmd->parsed()) return cmd_trend(forbids, n_min, n_max, csv_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::TooLarge:
            case ErrorKind::BudgetExceeded:
            case ErrorKind::Overflow:
                return 3;
            case ErrorKind::ConvergenceFailure:
            case ErrorKind::InvariantViolation:
                return 4;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
