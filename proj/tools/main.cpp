// Command line front end: compute / simulate / classify / search / verify-known.
//
// Exit codes: 0 success, 1 usage or parse error, 2 size-guard violation,
// 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "forestprob/collision.hpp"
#include "forestprob/errors.hpp"
#include "forestprob/family.hpp"
#include "forestprob/formulas.hpp"
#include "forestprob/graph.hpp"
#include "forestprob/process.hpp"
#include "forestprob/report.hpp"
#include "forestprob/version.hpp"

namespace {

using namespace forestprob;

struct GraphSource {
    std::string file;
    std::string family;
    std::string format = "auto";  // auto | edgelist | graph6

    bool from_family() const { return !family.empty(); }
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
    auto* file = cmd->add_option("--file", src.file,
                                 "Graph file (edge list, or graph6 with a .g6 extension)");
    auto* family = cmd->add_option(
        "--family", src.family,
        "Family spec: star:n, triangle, gs:a,b,c, gsplus:a,b,c, paw:a, di:a, k4:a, "
        "k:n, kst:s,t");
    cmd->add_option("--format", src.format, "File format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
        ->needs(file);
    file->excludes(family);
    family->excludes(file);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const GraphSource& src, std::optional<FamilySpec>& family_out) {
    if (src.from_family()) {
        family_out = FamilySpec::parse(src.family);
        return construct_family(*family_out);
    }
    if (src.file.empty()) throw ParseError("need --file or --family");
    const std::string text = read_file(src.file);
    std::string format = src.format;
    if (format == "auto") {
        const bool g6_ext = src.file.size() >= 3 &&
                            src.file.compare(src.file.size() - 3, 3, ".g6") == 0;
        format = g6_ext ? "graph6" : "edgelist";
    }
    return format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
}

nlohmann::json input_echo(const GraphSource& src, const Graph& g) {
    nlohmann::json in;
    if (src.from_family()) in["family"] = src.family;
    else in["file"] = src.file;
    in["n"] = g.n;
    in["m"] = g.edge_count();
    return in;
}

nlohmann::json json_document(const std::string& command) {
    return {{"tool", {{"name", "forestprob"}, {"version", kVersion}}},
            {"command", command}};
}

void emit_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string inline_exact(const TreeDistribution& dist) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, p] : dist.probs()) {
        if (!first) out << ", ";
        out << k << ": " << fraction_string(p);
        first = false;
    }
    return out.str();
}

std::string inline_decimal(const TreeDistribution& dist) {
    std::ostringstream out;
    out << std::setprecision(12);
    bool first = true;
    for (const auto& [k, p] : dist.probs()) {
        if (!first) out << ", ";
        out << k << ": " << to_double(p);
        first = false;
    }
    return out.str();
}

nlohmann::json decimal_json(const TreeDistribution& dist) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, p] : dist.probs()) out[std::to_string(k)] = to_double(p);
    return out;
}

void print_mc(const McEstimate& est, bool json, nlohmann::json doc) {
    if (json) {
        doc["simulation"] = mc_estimate_json(est);
        emit_json(doc);
        return;
    }
    std::cout << "trials: " << est.trials << "  seed: " << est.seed
              << "  workers: " << est.workers << "\n";
    std::cout << std::setprecision(12);
    for (const auto& [k, count] : est.counts) {
        auto [p, se] = estimate_with_stderr(est, k);
        std::cout << k << ": " << p << " +- " << se << " (" << count << "/" << est.trials
                  << ")\n";
    }
}

// The formula route needs a family: the one given on the command line, or for
// files whatever classify() recognizes.
FamilySpec formula_family(const std::optional<FamilySpec>& family, const Graph& g) {
    if (family) return *family;
    auto cls = classify(g);
    if (cls.unclassified())
        throw SpecError("formula engine needs a recognized family (" + cls.describe() +
                        ")");
    return *cls.family;
}

struct ComputeArgs {
    GraphSource src;
    std::string engine = "auto";
    long long trials = 100000;
    std::uint64_t seed = 0;
    int workers = 1;
    bool force = false;
    bool json = false;
};

int run_compute(const ComputeArgs& args) {
    std::optional<FamilySpec> family;
    const Graph g = load_graph(args.src, family);
    const EngineOptions opts{args.force, args.workers};

    std::string engine = args.engine;
    if (engine == "auto") {
        if (family) {
            // The canonical form routes aliases to a trustworthy formula
            // (e.g. kst:2,2 -> gs:0,2,0); only K_{s,t} with s >= 3 is left,
            // whose catalogued formula is broken, so the dp takes over.
            const FamilySpec canon = canonical(*family);
            if (canon.kind == FamilyKind::CompleteBipartite) {
                engine = "dp";
            } else {
                engine = "formula";
                family = canon;
            }
        } else {
            // classify rejects isolated vertices; such graphs just skip the
            // formula route.
            std::optional<FamilySpec> recognized;
            if (!g.has_isolated_vertex()) {
                auto cls = classify(g);
                if (!cls.unclassified()) recognized = cls.family;
            }
            if (recognized) {
                engine = "formula";
                family = recognized;
            } else if (g.n <= kSubsetDpMaxVertices) {
                engine = "dp";
            } else {
                engine = "brute";
            }
        }
    }

    nlohmann::json doc = json_document("compute");
    doc["input"] = input_echo(args.src, g);
    doc["workers"] = args.workers;

    if (engine == "mc") {
        auto est = monte_carlo(g, args.trials, args.seed, args.workers);
        doc["engine"] = "mc";
        print_mc(est, args.json, std::move(doc));
        return 0;
    }

    TreeDistribution dist;
    bool formula_unnormalized = false;
    if (engine == "brute") {
        dist = exact_bruteforce(g, opts);
    } else if (engine == "dp") {
        dist = exact_subset_dp(g, opts);
    } else {  // formula
        const FamilySpec spec = formula_family(family, g);
        dist = formulas::family_distribution(spec);
        formula_unnormalized = dist.total() != 1;
    }

    if (args.json) {
        doc["engine"] = engine;
        doc["distribution"] = distribution_json(dist);
        doc["decimal"] = decimal_json(dist);
        if (engine == "formula") doc["formula_normalized"] = !formula_unnormalized;
        emit_json(doc);
    } else {
        std::cout << "engine: " << engine << "\n";
        std::cout << "exact: " << inline_exact(dist) << "\n";
        std::cout << "decimal: " << inline_decimal(dist) << "\n";
        if (formula_unnormalized)
            std::cout << "note: the catalogued formula for this family does not normalize; "
                         "probabilities sum to "
                      << fraction_string(dist.total()) << " (dp is the oracle)\n";
    }
    return 0;
}

struct SimulateArgs {
    GraphSource src;
    long long trials = 100000;
    std::uint64_t seed = 0;
    int workers = 1;
    bool json = false;
};

int run_simulate(const SimulateArgs& args) {
    std::optional<FamilySpec> family;
    const Graph g = load_graph(args.src, family);
    auto est = monte_carlo(g, args.trials, args.seed, args.workers);
    nlohmann::json doc = json_document("simulate");
    doc["input"] = input_echo(args.src, g);
    print_mc(est, args.json, std::move(doc));
    return 0;
}

int run_classify(const GraphSource& src, bool json) {
    std::optional<FamilySpec> family;
    const Graph g = load_graph(src, family);
    const auto cls = classify(g);
    if (json) {
        nlohmann::json doc = json_document("classify");
        doc["input"] = input_echo(src, g);
        doc["classification"] = cls.describe();
        doc["matching_cap3"] = cls.matching_cap3;
        if (cls.family) {
            doc["family"] = {{"kind", kind_name(cls.family->kind)},
                             {"params", cls.family->params}};
        } else {
            doc["family"] = nullptr;
        }
        emit_json(doc);
    } else {
        std::cout << cls.describe() << "\n";
    }
    return 0;
}

struct SearchArgs {
    std::string family;
    int max_vertices = 500;
    std::string engine = "formula";
    int workers = 1;
    std::string out;
    bool json = false;
};

int run_search(const SearchArgs& args) {
    const auto family = parse_sweep_family(args.family);
    const auto engine =
        args.engine == "dp" ? ProfileEngine::Dp : ProfileEngine::Formula;
    const auto report = sweep(family, args.max_vertices, engine, args.workers);

    std::string rendered;
    if (args.json) {
        nlohmann::json doc = json_document("search");
        doc["report"] = collision_report_json(report);
        rendered = doc.dump(2) + "\n";
    } else {
        rendered = collision_report_text(report);
    }
    if (args.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + args.out + "'");
        out << rendered;
        std::cout << "wrote report to " << args.out << "\n";
    }
    return 0;
}

int run_verify_known(int max_t, bool json) {
    const auto summary = verify_known(max_t);
    if (json) {
        nlohmann::json doc = json_document("verify-known");
        doc["max_t"] = max_t;
        doc["summary"] = verify_summary_json(summary);
        emit_json(doc);
    } else {
        std::cout << verify_summary_text(summary);
    }
    return summary.all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-count distributions of the random-edge-ordering forest process"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Exact or simulated tree distribution");
    add_source_options(compute, compute_args.src);
    compute->add_option("--engine", compute_args.engine, "auto, brute, dp, mc or formula")
        ->check(CLI::IsMember({"auto", "brute", "dp", "mc", "formula"}));
    compute->add_option("--trials", compute_args.trials, "Trials for --engine mc");
    compute->add_option("--seed", compute_args.seed, "Seed for --engine mc");
    compute->add_option("--workers", compute_args.workers, "Worker threads");
    compute->add_flag("--force", compute_args.force, "Override size guards");
    compute->add_flag("--json", compute_args.json, "Machine-readable output");

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo tree-count estimates");
    add_source_options(simulate, simulate_args.src);
    simulate->add_option("--trials", simulate_args.trials, "Number of random orderings");
    simulate->add_option("--seed", simulate_args.seed, "Base seed");
    simulate->add_option("--workers", simulate_args.workers, "Worker threads");
    simulate->add_flag("--json", simulate_args.json, "Machine-readable output");

    GraphSource classify_src;
    bool classify_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Match a graph against the catalogue");
    add_source_options(classify_cmd, classify_src);
    classify_cmd->add_flag("--json", classify_json, "Machine-readable output");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Sweep a family for equal-profile groups");
    search->add_option("--family", search_args.family, "gs, gsplus, paw, di, k4 or all")
        ->required();
    search->add_option("--max-vertices", search_args.max_vertices, "Vertex-count bound");
    search->add_option("--engine", search_args.engine, "formula or dp")
        ->check(CLI::IsMember({"formula", "dp"}));
    search->add_option("--workers", search_args.workers, "Worker threads");
    search->add_option("--out", search_args.out, "Write the report to a file");
    search->add_flag("--json", search_args.json, "Machine-readable output");

    int verify_max_t = 10;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify-known", "Check the known profile identities");
    verify->add_option("--max-t", verify_max_t, "Parameter bound for the families");
    verify->add_flag("--json", verify_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 1;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (simulate->parsed()) return run_simulate(simulate_args);
        if (classify_cmd->parsed()) return run_classify(classify_src, classify_json);
        if (search->parsed()) return run_search(search_args);
        if (verify->parsed()) return run_verify_known(verify_max_t, verify_json);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
