#pragma once

#include <optional>
#include <vector>

#include "icstab/decomp.hpp"
#include "icstab/graph.hpp"
#include "icstab/monomial.hpp"

namespace icstab {

struct StabilityOptions {
    // Bipartite edge ideals are normally torsion-free, so their closure
    // powers coincide with ordinary powers; set false to force the full
    // lattice-point computation anyway.
    bool bipartite_shortcut = true;
};

struct StabilityReport {
    std::vector<std::pair<int, int>> edges;
    int vertices = 0;
    int leaf_edges = 0;
    std::optional<int> odd_girth;
    int n0 = 1;
    std::optional<int> n1;
    int phi0 = 1;
    int phi1 = 1;
    std::vector<AssSet> ass_sequence;  // n = 1..phi0
    std::vector<int> depth_sequence;   // n = 1..phi1
    int astab_bar = 1;
    int dstab_bar = 1;
    bool pseudoforest = false;
    bool has_c4 = false;
    bool bipartite = false;
};

// Full stability computation for one graph; the closure powers used along
// the way are returned so callers can run further checks on them.
struct StabilityComputation {
    StabilityReport report;
    std::vector<MonomialIdeal> closures;  // index k holds closure(I^(k+1))
};

// closure(I(g)^n), short-circuited to the ordinary power for bipartite g
// unless opted out.
MonomialIdeal graph_closure_power(const Graph& g, int n, const StabilityOptions& opts = {});

std::vector<AssSet> ass_sequence(const Graph& g, const StabilityOptions& opts = {});
int astab_bar(const Graph& g, const StabilityOptions& opts = {});
std::vector<int> depth_sequence(const Graph& g, const StabilityOptions& opts = {});
int dstab_bar(const Graph& g, const StabilityOptions& opts = {});
StabilityReport report(const Graph& g, const StabilityOptions& opts = {});
StabilityComputation compute_stability(const Graph& g, const StabilityOptions& opts = {});

// Ordinary-power depth data, used for the composite-graph identity
// dstab_bar(g) = dstab(bipartite part) + dstab_bar(nonbipartite part) - 1.
std::vector<int> ordinary_depth_sequence(const Graph& g);
int dstab_ordinary(const Graph& g);

}  // namespace icstab
