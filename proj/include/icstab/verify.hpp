#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icstab/graph.hpp"
#include "icstab/stability.hpp"

namespace icstab {

struct CorpusSpec {
    enum class Mode { exhaustive, random_pseudoforest, file };
    Mode mode = Mode::exhaustive;
    int max_vertices = 6;
    int count = 0;        // random mode
    uint64_t seed = 0;    // random mode; fully determines the stream
    std::string path;     // file mode
    bool connected_only = true;
    bool pseudoforest_only = false;
    bool no_c4 = false;
};

// Packed upper-triangle adjacency, minimized over all vertex permutations.
uint64_t canonical_key(const Graph& g);
Graph graph_from_key(int vertex_count, uint64_t key);

// Connected graphs with at least one edge, up to isomorphism, on
// 2..max_vertices vertices, as canonical representatives.
std::vector<Graph> connected_graphs_up_to(int max_vertices);

std::vector<Graph> generate_corpus(const CorpusSpec& spec);

struct CheckResult {
    bool pass = false;
    std::string detail;
};

// Binomial expansion for closures when the first ideal is normally
// torsion-free: closure((I+J)^n) against sum of I^i * closure(J^(n-i)).
CheckResult check_T0(const Graph& g_bipartite, const Graph& g_nonbipartite, int n);

// Associated-prime product formula for the same setting.
CheckResult check_T1(const Graph& g_bipartite, const Graph& g_nonbipartite, int n);

// Depth min-formula for the same setting.
CheckResult check_T2(const Graph& g_bipartite, const Graph& g_nonbipartite, int n);

// The expansion with closures on both factors; returns whether both sides
// agree. False is the expected outcome for two disjoint odd cycles.
bool naive_binomial_expansion_matches(const Graph& g1, const Graph& g2, int n);

struct BoundsOutcome {
    bool t3 = false;
    bool t4 = false;
    std::optional<bool> t6;  // asserted only for pseudoforests
    std::optional<bool> t8;  // asserted only for pseudoforests without a 4-cycle
    StabilityReport report;
};
BoundsOutcome check_bounds_and_sharpness(const Graph& g, const StabilityOptions& opts = {});

// Property helpers shared by the acceptance suite; closures[k] must hold
// closure(I(g)^(k+1)).
bool leaf_colon_identity_holds(const Graph& g, const std::vector<MonomialIdeal>& closures,
                               std::string* why = nullptr);
bool vertex_cover_bound_holds(const Graph& g, const std::vector<MonomialIdeal>& closures,
                              std::string* why = nullptr);
// dstab_bar(g) = dstab(bipartite part) + dstab_bar(nonbipartite part) - 1
// for graphs having components of both kinds; the bipartite part uses
// ordinary powers.
bool composite_dstab_identity_holds(const Graph& g, std::string* why = nullptr);

struct CheckStats {
    std::string name;
    long long pass = 0;
    long long fail = 0;
    long long ms = 0;
    std::vector<std::string> failures;
};

struct VerificationReport {
    std::string corpus;
    long long graph_count = 0;
    std::vector<CheckStats> checks;
    bool all_pass = true;
};

struct RunOptions {
    std::vector<std::string> checks = {"counterexample", "t0", "t1", "t2", "bounds"};
    int jobs = 1;
    StabilityOptions stability;
};

VerificationReport run(const CorpusSpec& spec, const RunOptions& opts);

}  // namespace icstab
