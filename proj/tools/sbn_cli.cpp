// Command-line front end: solve, construct, audit, recognize, reproduce.
//
// Exit codes: 0 success, 1 violation / failed check / non-member,
// 2 input error, 3 solver cap exceeded (solve only).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbn/sbn.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;

struct Source {
    std::string file;  // empty = stdin

    std::istream& open() {
        if (file.empty() || file == "-") return std::cin;
        stream = std::make_unique<std::ifstream>(file);
        if (!*stream) throw sbn::input_error("cannot open '" + file + "'");
        return *stream;
    }

    std::unique_ptr<std::ifstream> stream;
};

std::vector<sbn::Graph> read_graphs(Source& source, const std::string& format) {
    std::istream& in = source.open();
    if (format == "edgelist") return {sbn::edge_list_decode(in)};
    std::vector<sbn::Graph> out;
    for (auto& item : sbn::read_graph6_stream(in)) out.push_back(std::move(item.graph));
    if (out.empty()) throw sbn::input_error("no graph in input");
    return out;
}

std::string emit(const sbn::Graph& g, const std::string& format) {
    return format == "edgelist" ? sbn::edge_list_encode(g) : sbn::graph6_encode(g) + "\n";
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string mode;
    std::string algorithm = "bb";
    std::string input = "g6";
    Source source;
    int cap = 0;
};

int run_solve(SolveArgs& a) {
    const auto mode = a.mode == "sbf" ? sbn::Mode::closed_neighborhood : sbn::Mode::open_neighborhood;
    const auto algorithm = a.algorithm == "brute" ? sbn::Algorithm::brute_force : sbn::Algorithm::branch_and_bound;
    const int cap = a.cap > 0 ? a.cap
                              : (algorithm == sbn::Algorithm::brute_force ? sbn::brute_force_default_cap
                                                                          : sbn::branch_and_bound_default_cap);
    const auto graphs = read_graphs(a.source, a.input);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        const auto r = sbn::solve(g, mode, algorithm, cap);
        if (i) std::cout << '\n';
        std::cout << "graph: " << sbn::graph6_encode(g) << '\n'
                  << "n: " << g.order() << '\n'
                  << (mode == sbn::Mode::closed_neighborhood ? "beta_s: " : "beta_D: ") << r.value << '\n'
                  << "witness: " << r.witness.str() << '\n'
                  << "verified: " << (sbn::verify_witness(g, mode, r.witness, r.value) ? "yes" : "NO") << '\n'
                  << "nodes: " << r.nodes_explored << '\n'
                  << "elapsed_ms: " << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string kind;
    int p = 1;
    int q = 0;
    int n = 0;
    std::string extra;
    std::string spec;
    std::string g1;
    std::string g2;
    std::string emit = "g6";
    bool assignment = false;
};

int run_construct(ConstructArgs& a) {
    sbn::Graph g;
    std::optional<sbn::SignAssignment> f;
    const auto extra = a.extra.empty() ? std::vector<sbn::Edge>{} : sbn::parse_edge_pairs(a.extra);
    try {
        if (!a.spec.empty()) {
            const auto params = sbn::parse_family_params(a.spec);
            g = sbn::family_member(params);
            f = sbn::core_negative_assignment(g.order(), params.p);
        } else if (a.kind == "lambda" || a.kind == "omega") {
            const sbn::FamilyParams params{a.kind == "lambda" ? sbn::Family::lambda : sbn::Family::omega, a.p, extra};
            g = sbn::family_member(params);
            f = sbn::core_negative_assignment(g.order(), a.p);
        } else if (a.kind == "t12") {
            auto ce = sbn::counterexample_t12(a.p);
            g = std::move(ce.graph);
            f = std::move(ce.assignment);
        } else if (a.kind == "corona") {
            if (a.g1.empty() || a.g2.empty()) throw sbn::input_error("corona needs --g1 and --g2 (graph6)");
            g = sbn::corona(sbn::graph6_decode(a.g1), sbn::graph6_decode(a.g2));
        } else if (a.kind == "kpq") {
            g = sbn::complete_bipartite(a.p, a.q > 0 ? a.q : a.p);
        } else if (a.kind == "path") {
            g = sbn::path(a.n > 0 ? a.n : a.p);
        } else if (a.kind == "cycle") {
            g = sbn::cycle(a.n > 0 ? a.n : a.p);
        } else if (a.kind == "bistar") {
            g = sbn::bistar();
            f = sbn::core_negative_assignment(g.order(), 1);
        }
        if (!extra.empty() && a.kind != "lambda" && a.kind != "omega") g = sbn::with_edges(g, extra);
    } catch (const std::invalid_argument& e) {
        throw sbn::input_error(e.what());
    }
    std::cout << emit(g, a.emit);
    if (a.assignment) {
        if (!f) throw sbn::input_error("no distinguished assignment for '" + a.kind + "'");
        std::cout << f->str() << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
    std::string param;
    int max_n = 0;
    int min_degree = -1;
    bool triangle_free = false;
    bool bipartite = false;
    std::string from_g6;
    std::string format = "json";
    unsigned threads = 0;
    int cap = sbn::branch_and_bound_default_cap;
};

int run_audit(AuditArgs& a) {
    sbn::AuditOptions options;
    options.param = a.param == "bs" ? sbn::Mode::closed_neighborhood : sbn::Mode::open_neighborhood;
    options.threads = a.threads;
    options.solver_cap = a.cap;
    sbn::CorpusFilter filter{1, a.triangle_free, a.min_degree < 0 ? 0 : a.min_degree, a.bipartite};

    std::vector<sbn::Graph> graphs;
    if (!a.from_g6.empty()) {
        Source source{a.from_g6, nullptr};
        for (auto& g : sbn::ingest_graph6(source.open(), &filter)) {
            if (a.max_n <= 0 || g.order() <= a.max_n) graphs.push_back(std::move(g));
        }
    } else {
        if (a.max_n < 1) throw sbn::input_error("--max-n is required without --from-g6");
        graphs = sbn::enumerate_graphs_up_to(a.max_n, filter);
    }
    const auto result = sbn::audit_corpus(graphs, options);
    if (a.format == "csv") {
        std::cout << sbn::render_csv(result);
        std::cerr << sbn::to_json(result.summary).dump() << '\n';
    } else {
        std::cout << sbn::render_json(result, options.param);
    }
    return result.summary.clean() ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- recognize

struct RecognizeArgs {
    std::string family;
    std::string input = "g6";
    Source source;
};

int run_recognize(RecognizeArgs& a) {
    const auto family = a.family == "lambda" ? sbn::Family::lambda : sbn::Family::omega;
    bool all = true;
    for (const auto& g : read_graphs(a.source, a.input)) {
        const auto v = sbn::recognize_family(g, family);
        std::cout << sbn::graph6_encode(g) << ' ';
        if (v.is_member) {
            std::cout << "member p=" << v.p << " core=";
            for (std::size_t i = 0; i < v.core.size(); ++i) std::cout << (i ? "," : "") << v.core[i];
            std::cout << " min_degree=" << v.min_degree << '\n';
        } else {
            all = false;
            std::cout << "not-member: " << v.reason << '\n';
        }
    }
    return all ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::string section = "all";
    std::string format = "text";
};

int run_reproduce(ReproduceArgs& a) {
    const auto report = sbn::reproduce(sbn::parse_section(a.section));
    std::cout << (a.format == "json" ? sbn::render_json(report) : sbn::render_text(report));
    return report.all_pass() ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact signed bad number / negative decision number toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute beta_s (sbf) or beta_D (bf) exactly");
    solve_cmd->add_option("--mode", solve.mode, "sbf = closed neighborhoods, bf = open neighborhoods")
        ->required()
        ->check(CLI::IsMember({"sbf", "bf"}));
    solve_cmd->add_option("--algorithm", solve.algorithm, "bb or brute")->check(CLI::IsMember({"bb", "brute"}));
    solve_cmd->add_option("--input", solve.input, "g6 (one graph per line) or edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
    solve_cmd->add_option("--file", solve.source.file, "input file (default stdin)");
    solve_cmd->add_option("--cap", solve.cap, "maximum order (default 40 for bb, 24 for brute)");

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Build a named graph");
    construct_cmd->footer("kinds: lambda, omega (family members, p >= 1, optional --extra pendant edges),\n"
                          "t12 (earlier beta_D bound counterexample), corona (--g1 --g2 graph6), kpq (--p --q),\n"
                          "path/cycle (--n), bistar. --spec accepts \"lambda p=2 extra=(4,10),(5,11)\".");
    construct_cmd->add_option("kind", construct.kind)
        ->check(CLI::IsMember({"lambda", "omega", "t12", "corona", "kpq", "path", "cycle", "bistar"}));
    construct_cmd->add_option("--p", construct.p, "family parameter / first part size");
    construct_cmd->add_option("--q", construct.q, "second part size for kpq");
    construct_cmd->add_option("--n", construct.n, "order for path/cycle");
    construct_cmd->add_option("--extra", construct.extra, "extra edges, e.g. (4,10),(5,11)");
    construct_cmd->add_option("--spec", construct.spec, "family text form, e.g. \"omega p=1 extra=(2,4),(3,5)\"");
    construct_cmd->add_option("--g1", construct.g1, "corona base graph (graph6)");
    construct_cmd->add_option("--g2", construct.g2, "corona attached graph (graph6)");
    construct_cmd->add_option("--emit", construct.emit, "g6 or edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
    construct_cmd->add_flag("--assignment", construct.assignment, "also print the core -1 assignment");

    AuditArgs audit;
    auto* audit_cmd = app.add_subcommand("audit", "Check the triangle-free bound over a corpus");
    audit_cmd->add_option("--param", audit.param, "bs or bd")->required()->check(CLI::IsMember({"bs", "bd"}));
    audit_cmd->add_option("--max-n", audit.max_n, "largest order to enumerate (<= 9)");
    audit_cmd->add_option("--min-degree", audit.min_degree, "minimum degree filter");
    audit_cmd->add_flag("--triangle-free", audit.triangle_free, "only triangle-free graphs");
    audit_cmd->add_flag("--bipartite", audit.bipartite, "only bipartite graphs");
    audit_cmd->add_option("--from-g6", audit.from_g6, "read the corpus from a graph6 file instead of enumerating");
    audit_cmd->add_option("--format", audit.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    audit_cmd->add_option("--threads", audit.threads, "worker threads (default: hardware concurrency)");
    audit_cmd->add_option("--cap", audit.cap, "solver order cap; larger graphs are reported as skipped");

    RecognizeArgs recognize;
    auto* recognize_cmd = app.add_subcommand("recognize", "Decide membership in an extremal family");
    recognize_cmd->add_option("family", recognize.family)->required()->check(CLI::IsMember({"lambda", "omega"}));
    recognize_cmd->add_option("--input", recognize.input, "g6 or edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
    recognize_cmd->add_option("--file", recognize.source.file, "input file (default stdin)");

    ReproduceArgs reproduce;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute the reference values, counterexamples and sweeps");
    reproduce_cmd->add_option("--section", reproduce.section)
        ->check(CLI::IsMember({"counterexamples", "remark", "mantel", "families", "all"}));
    reproduce_cmd->add_option("--format", reproduce.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*solve_cmd) return run_solve(solve);
        if (*construct_cmd) {
            if (construct.kind.empty() && construct.spec.empty()) throw sbn::input_error("construct needs a kind or --spec");
            return run_construct(construct);
        }
        if (*audit_cmd) return run_audit(audit);
        if (*recognize_cmd) return run_recognize(recognize);
        if (*reproduce_cmd) return run_reproduce(reproduce);
    } catch (const sbn::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return *solve_cmd ? exit_cap : exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
