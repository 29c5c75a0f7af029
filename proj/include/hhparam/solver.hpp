#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "class_oracle.hpp"
#include "consistent_oct.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "width.hpp"
#include "witness.hpp"

namespace hhparam {

enum class Branch { brute_force, claims };

/// State of the unbreakability hypothesis on the high-width branch.
enum class Hypothesis { not_needed, holds, violated, unverified };

inline std::string to_string(Branch b) { return b == Branch::brute_force ? "brute-force" : "claims"; }

inline std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::not_needed: return "not-needed";
        case Hypothesis::holds: return "holds";
        case Hypothesis::violated: return "violated";
        case Hypothesis::unverified: return "unverified";
    }
    return "unknown";
}

struct SolveOptions {
    int threads = 1;
    int brute_force_cap = 16;
    int separation_cap = default_separation_cap;
    int width_cap = default_width_cap;
};

struct SolveCounters {
    std::size_t weak_octs = 0;
    std::size_t strong_octs = 0;
    std::size_t deletion_sets = 0;
    std::size_t extract_calls = 0;
};

struct SolveResult {
    std::optional<Witness> witness;
    Branch branch = Branch::brute_force;
    Hypothesis unbreakable = Hypothesis::not_needed;
    SolveCounters counters;

    bool decision() const { return witness.has_value(); }
};

/// Checks (s,c)-unbreakability exhaustively when n fits the separation cap.
inline Hypothesis unbreakability_status(const Graph &g, int s, int c, int cap = default_separation_cap) {
    if (g.n() > cap) return Hypothesis::unverified;
    return is_unbreakable(g, s, c, cap) ? Hypothesis::holds : Hypothesis::violated;
}

namespace detail {

/// Runs extract_witness over candidates and returns the witness of the least-index success.
/// With several threads candidates run in batches; each batch is fully evaluated before the
/// least successful index is taken, so the answer matches the sequential one.
inline std::optional<Witness> first_extracted(const Graph &g, const std::vector<VertexSet> &candidates,
                                              const SolverParams &p, WitnessKind kind, const ClassOracle &oracle,
                                              int threads, SolveCounters &counters) {
    const std::size_t batch = static_cast<std::size_t>(std::max(threads, 1));
    for (std::size_t start = 0; start < candidates.size(); start += batch) {
        const std::size_t stop = std::min(candidates.size(), start + batch);
        counters.extract_calls += stop - start;
        if (batch == 1) {
            if (auto w = extract_witness(g, candidates[start], p, kind, oracle)) return w;
            continue;
        }
        std::vector<std::future<std::optional<Witness>>> jobs;
        for (std::size_t i = start; i < stop; ++i)
            jobs.push_back(std::async(std::launch::async,
                                      [&, i] { return extract_witness(g, candidates[i], p, kind, oracle); }));
        std::optional<Witness> best;
        for (auto &job : jobs) {
            auto w = job.get();
            if (!best && w) best = std::move(w);
        }
        if (best) return best;
    }
    return std::nullopt;
}

/// Shared dichotomy: low treewidth or a verified separation goes to exhaustive search.
/// Returns true when the caller must run the high-width branch.
inline bool route_high_width(const Graph &g, const SolverParams &p, const SolveOptions &opt, SolveResult &result) {
    if (treewidth_atmost(g, p.s + p.k, std::max(opt.width_cap, g.n()))) return false;
    result.unbreakable = unbreakability_status(g, p.s, p.c, opt.separation_cap);
    return result.unbreakable != Hypothesis::violated;
}

inline SolveResult brute_force_result(const Graph &g, const ClassOracle &oracle, WitnessKind kind, int k,
                                      const SolveOptions &opt, Hypothesis h) {
    SolveResult r;
    r.branch = Branch::brute_force;
    r.unbreakable = h;
    r.witness = brute_force_witness(g, oracle, kind, k, opt.brute_force_cap);
    return r;
}

inline void check_question(int k, int s) {
    if (k < 0 || s < 1) throw precondition_error(precondition_error::kind::invalid_parameters, "need k >= 0 and s >= 1");
}

}  // namespace detail

/// Decides the question for k with H = bipartite graphs. Graphs of treewidth at most s + k,
/// or with a verified (s,2k)-separation, are solved exhaustively; otherwise candidate OCTs
/// from the weak and strong enumerations seed extract_witness.
inline SolveResult solve_bip(const Graph &g, int k, int s, WitnessKind kind, const SolveOptions &opt = {}) {
    detail::check_question(k, s);
    const ClassOracle oracle = ClassOracle::bipartite();
    const SolverParams p{k, s, 2 * k, opt.width_cap};
    SolveResult probe;
    if (!detail::route_high_width(g, p, opt, probe)) return detail::brute_force_result(g, oracle, kind, k, opt, probe.unbreakable);

    SolveResult r;
    r.branch = Branch::claims;
    r.unbreakable = probe.unbreakable;
    std::vector<VertexSet> candidates;
    std::unordered_set<VertexSet> seen;
    const auto weak = weakly_consistent_octs(g, p);
    r.counters.weak_octs = weak.size();
    for (const auto &poct : weak)
        for (VertexSet y : strongly_consistent_octs(g, p, poct)) {
            ++r.counters.strong_octs;
            // A witness here has at most s + k - 1 vertices.
            if (y.size() <= p.s + p.k - 1 && seen.insert(y).second) candidates.push_back(y);
        }
    r.witness = detail::first_extracted(g, candidates, p, kind, oracle, opt.threads, r.counters);
    return r;
}

/// Same dichotomy for a class given by forbidden induced subgraphs; the high-width branch
/// seeds extract_witness with every minimal deletion set of size at most s + k - 1.
inline SolveResult solve_finite_obstruction(const Graph &g, int k, int s, WitnessKind kind, const ClassOracle &oracle,
                                            const SolveOptions &opt = {}) {
    if (!oracle.is_forbidden_induced())
        throw precondition_error(precondition_error::kind::wrong_oracle_variant,
                                 "solve_finite_obstruction needs a forbidden-induced-subgraph class");
    detail::check_question(k, s);
    const SolverParams p{k, s, k, opt.width_cap};
    SolveResult probe;
    if (!detail::route_high_width(g, p, opt, probe)) return detail::brute_force_result(g, oracle, kind, k, opt, probe.unbreakable);

    SolveResult r;
    r.branch = Branch::claims;
    r.unbreakable = probe.unbreakable;
    const auto sets = enum_minimal_deletion_sets(oracle, g, p.s + p.k - 1);
    r.counters.deletion_sets = sets.size();
    r.witness = detail::first_extracted(g, sets, p, kind, oracle, opt.threads, r.counters);
    return r;
}

/// Dispatches on the oracle variant.
inline SolveResult solve(const Graph &g, int k, int s, WitnessKind kind, const ClassOracle &oracle,
                         const SolveOptions &opt = {}) {
    return oracle.is_bipartite_class() ? solve_bip(g, k, s, kind, opt) : solve_finite_obstruction(g, k, s, kind, oracle, opt);
}

}  // namespace hhparam
