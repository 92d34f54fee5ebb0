#include "icstab/stability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "icstab/homology.hpp"
#include "icstab/newton.hpp"
#include "icstab/staircase.hpp"

namespace icstab {

namespace {

void require_edge(const Graph& g, const char* who) {
    if (g.edge_count() == 0)
        throw std::invalid_argument(std::string(who) + ": graph has no edges");
}

std::string dump_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << " vertices, edges";
    for (auto [u, v] : g.edges()) os << " " << u << "-" << v;
    return os.str();
}

}  // namespace

MonomialIdeal graph_closure_power(const Graph& g, int n, const StabilityOptions& opts) {
    MonomialIdeal ideal = edge_ideal(g);
    if (opts.bipartite_shortcut && is_bipartite(g)) return power(ideal, n);
    return closure_power(ideal, n);
}

StabilityComputation compute_stability(const Graph& g, const StabilityOptions& opts) {
    require_edge(g, "compute_stability");
    StabilityComputation out;
    StabilityReport& rep = out.report;
    rep.edges = g.edges();
    rep.vertices = g.vertex_count();
    rep.leaf_edges = leaf_edge_count(g);
    rep.odd_girth = odd_girth(g);
    rep.n0 = n0(g);
    rep.phi0 = phi0(g);
    rep.phi1 = phi1(g);
    rep.pseudoforest = is_pseudoforest(g);
    rep.has_c4 = has_cycle_of_length(g, 4);
    rep.bipartite = is_bipartite(g);
    bool all_nonbip = true;
    for (const auto& p : component_profiles(g))
        if (p.is_bipartite) all_nonbip = false;
    if (all_nonbip) rep.n1 = n1(g);

    int horizon = std::max(rep.phi0, rep.phi1);
    for (int n = 1; n <= horizon; ++n)
        out.closures.push_back(graph_closure_power(g, n, opts));

    // Ass sequence, with the monotonicity of associated primes of closure
    // powers enforced; a violation means a computation bug, not data.
    for (int n = 1; n <= rep.phi0; ++n) {
        AssSet ass = associated_primes(out.closures[n - 1]);
        if (!rep.ass_sequence.empty() && !rep.ass_sequence.back().subset_of(ass)) {
            throw std::logic_error("ass_sequence: monotonicity violated at n=" +
                                   std::to_string(n) + " for graph " + dump_graph(g) +
                                   "; previous " + rep.ass_sequence.back().str() + ", current " +
                                   ass.str());
        }
        rep.ass_sequence.push_back(std::move(ass));
    }
    rep.astab_bar = rep.phi0;
    while (rep.astab_bar > 1 &&
           rep.ass_sequence[rep.astab_bar - 2] == rep.ass_sequence[rep.phi0 - 1])
        --rep.astab_bar;

    for (int n = 1; n <= rep.phi1; ++n)
        rep.depth_sequence.push_back(depth_quotient(out.closures[n - 1], g.vertex_count()));
    rep.dstab_bar = rep.phi1;
    while (rep.dstab_bar > 1 &&
           rep.depth_sequence[rep.dstab_bar - 2] == rep.depth_sequence[rep.phi1 - 1])
        --rep.dstab_bar;

    return out;
}

std::vector<AssSet> ass_sequence(const Graph& g, const StabilityOptions& opts) {
    return compute_stability(g, opts).report.ass_sequence;
}

int astab_bar(const Graph& g, const StabilityOptions& opts) {
    return compute_stability(g, opts).report.astab_bar;
}

std::vector<int> depth_sequence(const Graph& g, const StabilityOptions& opts) {
    return compute_stability(g, opts).report.depth_sequence;
}

int dstab_bar(const Graph& g, const StabilityOptions& opts) {
    return compute_stability(g, opts).report.dstab_bar;
}

StabilityReport report(const Graph& g, const StabilityOptions& opts) {
    return compute_stability(g, opts).report;
}

std::vector<int> ordinary_depth_sequence(const Graph& g) {
    require_edge(g, "ordinary_depth_sequence");
    MonomialIdeal ideal = edge_ideal(g);
    std::vector<int> depths;
    for (int n = 1; n <= phi1(g); ++n)
        depths.push_back(depth_quotient(power(ideal, n), g.vertex_count()));
    return depths;
}

int dstab_ordinary(const Graph& g) {
    std::vector<int> depths = ordinary_depth_sequence(g);
    int idx = static_cast<int>(depths.size());
    while (idx > 1 && depths[idx - 2] == depths.back()) --idx;
    return idx;
}

}  // namespace icstab
