#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icstab {

// Finite simple graph on vertices 1..vertex_count. Isolated vertices are
// permitted. Edges are stored as ordered pairs u < v, sorted and unique.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);
    Graph(const Graph& o)
        : r_(o.r_), edges_(o.edges_), adj_(o.adj_),
          cycle_mask_cache_(o.cycle_mask_cache_.load(std::memory_order_relaxed)) {}
    Graph(Graph&& o) noexcept
        : r_(o.r_), edges_(std::move(o.edges_)), adj_(std::move(o.adj_)),
          cycle_mask_cache_(o.cycle_mask_cache_.load(std::memory_order_relaxed)) {}
    Graph& operator=(const Graph& o) {
        r_ = o.r_;
        edges_ = o.edges_;
        adj_ = o.adj_;
        cycle_mask_cache_.store(o.cycle_mask_cache_.load(std::memory_order_relaxed),
                                std::memory_order_relaxed);
        return *this;
    }
    Graph& operator=(Graph&& o) noexcept {
        r_ = o.r_;
        edges_ = std::move(o.edges_);
        adj_ = std::move(o.adj_);
        cycle_mask_cache_.store(o.cycle_mask_cache_.load(std::memory_order_relaxed),
                                std::memory_order_relaxed);
        return *this;
    }

    int vertex_count() const { return r_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    // Bitmask of simple-cycle lengths present (bit L set iff a cycle of
    // exactly L vertices exists). Exhaustive DFS, intended for small graphs.
    uint64_t cycle_length_mask() const;

private:
    int r_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    mutable std::atomic<uint64_t> cycle_mask_cache_{0};
};

// Connected piece of a graph together with the map from its local vertex
// labels (1..k) back to the labels of the parent graph.
struct InducedComponent {
    Graph graph;
    std::vector<int> vertex_map;  // local index 1..k -> original vertex
};

struct ComponentProfile {
    std::vector<int> vertices;          // original labels
    bool is_bipartite = true;
    std::optional<int> odd_girth;       // 2k-1, absent when bipartite
    std::optional<int> max_odd_cycle;   // 2m-1, absent when bipartite
    int max_cycle = 0;                  // 0 for acyclic
    int leaf_edge_count = 0;
};

struct BipartiteCertificate {
    bool bipartite = false;
    std::vector<int> coloring;   // color 0/1 per vertex (1-based; -1 unused) when bipartite
    std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

std::vector<InducedComponent> components(const Graph& g);

BipartiteCertificate is_bipartite_certified(const Graph& g);
bool is_bipartite(const Graph& g);

std::optional<int> odd_girth(const Graph& g);
std::optional<int> max_odd_cycle(const Graph& g);
int max_cycle(const Graph& g);
int leaf_edge_count(const Graph& g);
bool is_pseudoforest(const Graph& g);
bool has_cycle_of_length(const Graph& g, int length);

Graph delete_closed_neighborhood(const Graph& g, int v);

ComponentProfile profile_of(const Graph& connected_graph,
                            const std::vector<int>& vertex_map);
std::vector<ComponentProfile> component_profiles(const Graph& g);

// Stability invariants of the closure-power machinery.
int n0(const Graph& g);
int n1(const Graph& g);  // throws unless every component is nonbipartite
int phi0(const Graph& g);
int phi1(const Graph& g);

// Disjoint union; vertices of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace icstab
