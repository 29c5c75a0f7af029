#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hhparam.hpp"

namespace {

using namespace hhparam;
using nlohmann::json;

struct RunConfig {
    std::string input_path;
    std::string g6;
    std::string class_spec = "bip";
    std::string kind = "ed";
    int k = 0;
    int s = 2;
    std::string format = "text";
    int threads = 1;
    std::uint64_t seed = 1;
    std::string x;
    std::string family;
    std::vector<double> family_args;
    std::string out_path;
};

Graph load_graph(const RunConfig &cfg) {
    if (!cfg.g6.empty() && !cfg.input_path.empty())
        throw parse_error(parse_error::kind::syntax, "give either a file or --g6, not both");
    if (!cfg.g6.empty()) return parse_graph6(cfg.g6);
    if (cfg.input_path.empty()) throw parse_error(parse_error::kind::syntax, "no input graph (file or --g6)");
    std::ifstream f(cfg.input_path);
    if (!f) throw parse_error(parse_error::kind::syntax, "cannot open '" + cfg.input_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_graph_text(buf.str());
}

WitnessKind parse_kind(const std::string &s) { return s == "tw" ? WitnessKind::tw : WitnessKind::ed; }

VertexSet parse_vertex_list(const std::string &text, int n) {
    VertexSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw parse_error(parse_error::kind::syntax, "bad vertex '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw parse_error(parse_error::kind::syntax, "bad vertex '" + item + "'");
        if (v < 0 || v >= n) throw parse_error(parse_error::kind::endpoint_out_of_range, "vertex " + item + " out of range");
        out.insert(v);
    }
    return out;
}

void print_witness_text(const Graph &g, const Witness &w) {
    std::cout << "witness: " << w.x.to_string() << "\n"
              << "value: " << w.value << "\n"
              << "torso: " << encode_graph6(w.torso.graph) << "\n"
              << "neighborhood_bound: " << (satisfies_neighborhood_bound(g, w) ? "ok" : "violated") << "\n";
}

int cmd_compute(const RunConfig &cfg) {
    const Graph g = load_graph(cfg);
    const ClassOracle oracle = oracle_from_spec(cfg.class_spec);
    SolveOptions opt;
    opt.threads = cfg.threads;
    const SolveResult r = solve(g, cfg.k, cfg.s, parse_kind(cfg.kind), oracle, opt);
    if (cfg.format == "json") {
        json out = {
            {"class", oracle.name()},
            {"kind", cfg.kind},
            {"k", cfg.k},
            {"s", cfg.s},
            {"decision", r.decision()},
            {"branch", to_string(r.branch)},
            {"unbreakable", to_string(r.unbreakable)},
            {"counters",
             {{"weak_octs", r.counters.weak_octs},
              {"strong_octs", r.counters.strong_octs},
              {"deletion_sets", r.counters.deletion_sets},
              {"extract_calls", r.counters.extract_calls}}},
            {"witness", r.witness ? to_json(g, *r.witness) : json(nullptr)},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "decision: " << (r.decision() ? "yes" : "no") << "\n"
                  << "branch: " << to_string(r.branch) << "\n"
                  << "unbreakable: " << to_string(r.unbreakable) << "\n";
        if (r.witness) print_witness_text(g, *r.witness);
    }
    return 0;
}

int cmd_verify(const RunConfig &cfg) {
    const Graph g = load_graph(cfg);
    const ClassOracle oracle = oracle_from_spec(cfg.class_spec);
    const WitnessKind kind = parse_kind(cfg.kind);
    const VertexSet x = parse_vertex_list(cfg.x, g.n());
    const bool ok = verify_witness(g, x, cfg.k, kind, oracle);
    const Witness w = make_witness(g, x, cfg.k, kind, oracle);
    if (cfg.format == "json") {
        std::cout << json{{"valid", ok}, {"witness", to_json(g, w)}}.dump(2) << "\n";
    } else {
        std::cout << "valid: " << (ok ? "yes" : "no") << "\n";
        print_witness_text(g, w);
    }
    return 0;
}

int cmd_oracle(const RunConfig &cfg) {
    const Graph g = load_graph(cfg);
    const ClassOracle oracle = oracle_from_spec(cfg.class_spec);
    const int depth = brute_force_hhdepth(g, oracle);
    const int ed = brute_force_torso_param(g, oracle, WitnessKind::ed);
    const int tw = brute_force_torso_param(g, oracle, WitnessKind::tw);
    const bool agree = depth == ed;
    if (cfg.format == "json") {
        std::cout << json{{"class", oracle.name()}, {"ed", ed}, {"tw", tw}, {"hhdepth", depth}, {"prop1", agree}}.dump(2)
                  << "\n";
    } else {
        std::cout << "ed=" << ed << " tw=" << tw << " prop1:" << (agree ? "ok" : "mismatch") << "\n";
    }
    return agree ? 0 : 3;
}

int cmd_corpus(const RunConfig &cfg) {
    std::vector<Graph> graphs;
    if (cfg.family == "all") {
        if (cfg.family_args.size() != 1) throw parse_error(parse_error::kind::syntax, "corpus all takes one argument");
        graphs = corpus::all_graphs(static_cast<int>(cfg.family_args[0]));
    } else if (cfg.family == "random") {
        if (cfg.family_args.size() != 3)
            throw parse_error(parse_error::kind::syntax, "corpus random takes count, min_n, max_n");
        graphs = corpus::random_batch(static_cast<int>(cfg.family_args[0]), static_cast<int>(cfg.family_args[1]),
                                      static_cast<int>(cfg.family_args[2]), cfg.seed);
    } else {
        graphs.push_back(corpus::family(cfg.family, cfg.family_args, cfg.seed));
    }
    std::ostringstream text;
    for (const Graph &g : graphs) text << encode_graph6(g) << "\n";
    if (cfg.out_path.empty()) {
        std::cout << text.str();
        return 0;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f || !(f << text.str())) {
        std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
        return 1;
    }
    return 0;
}

void add_graph_input(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("file", cfg.input_path, "graph file (graph6 or DIMACS-style edge list)");
    cmd->add_option("--g6", cfg.g6, "inline graph6 string");
}

void add_class_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--class", cfg.class_spec,
                    "bip | triangle-free | claw-free | maxdeg:<d> | split | cograph | cliques | file:<path>")
        ->capture_default_str();
}

void add_question(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--kind", cfg.kind, "ed (elimination distance) or tw (H-treewidth)")
        ->check(CLI::IsMember({"ed", "tw"}))
        ->capture_default_str();
    cmd->add_option("-k", cfg.k, "ed <= k, or H-treewidth <= k - 1")->check(CLI::NonNegativeNumber)->required();
}

void add_format(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact H-elimination distance and H-treewidth for small graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *compute = app.add_subcommand("compute", "decide the question and print a witness");
    add_graph_input(compute, cfg);
    add_class_options(compute, cfg);
    add_question(compute, cfg);
    compute->add_option("-s", cfg.s, "unbreakability size threshold")->check(CLI::PositiveNumber)->capture_default_str();
    compute->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_format(compute, cfg);

    auto *verify = app.add_subcommand("verify", "check a candidate witness");
    add_graph_input(verify, cfg);
    add_class_options(verify, cfg);
    add_question(verify, cfg);
    verify->add_option("--x", cfg.x, "comma-separated vertex ids of X");
    add_format(verify, cfg);

    auto *oracle = app.add_subcommand("oracle", "brute-force values and the depth/torso cross-check");
    add_graph_input(oracle, cfg);
    add_class_options(oracle, cfg);
    add_format(oracle, cfg);

    auto *corpus_cmd = app.add_subcommand("corpus", "print graph6 for a named family");
    corpus_cmd->add_option("family", cfg.family,
                           "path | cycle | clique | wheel | star | grid | hypercube | petersen | gnp | clique-bip | all | random")
        ->required();
    corpus_cmd->add_option("args", cfg.family_args, "family arguments");
    corpus_cmd->add_option("--seed", cfg.seed, "seed for random families")->capture_default_str();
    corpus_cmd->add_option("-o,--out", cfg.out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        return cmd_corpus(cfg);
    } catch (const size_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
