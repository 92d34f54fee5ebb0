#include "icstab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace icstab {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : r_(vertex_count), edges_(std::move(edges)) {
    if (r_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (r_ > 62) throw std::invalid_argument("Graph: vertex count above supported range");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u < 1 || v > r_) throw std::invalid_argument("Graph: vertex index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw std::invalid_argument("Graph: duplicate edge");
    adj_.assign(r_ + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > r_) throw std::invalid_argument("Graph: vertex index out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

namespace {

// Enumerates every simple cycle once: paths are grown from their smallest
// vertex, and a closing edge is accepted only when the second path vertex is
// smaller than the last, which fixes one of the two traversal directions.
void cycle_dfs(const Graph& g, int start, std::vector<int>& path,
               std::vector<char>& on_path, uint64_t& mask) {
    int cur = path.back();
    for (int nxt : g.neighbors(cur)) {
        if (nxt == start && path.size() >= 3 && path[1] < path.back()) {
            mask |= uint64_t{1} << path.size();
            continue;
        }
        if (nxt <= start || on_path[nxt]) continue;
        path.push_back(nxt);
        on_path[nxt] = 1;
        cycle_dfs(g, start, path, on_path, mask);
        on_path[nxt] = 0;
        path.pop_back();
    }
}

}  // namespace

uint64_t Graph::cycle_length_mask() const {
    uint64_t cached = cycle_mask_cache_.load(std::memory_order_relaxed);
    if (cached & 1) return cached >> 1;
    uint64_t mask = 0;
    std::vector<int> path;
    std::vector<char> on_path(r_ + 1, 0);
    for (int s = 1; s <= r_; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        cycle_dfs(*this, s, path, on_path, mask);
        on_path[s] = 0;
    }
    cycle_mask_cache_.store((mask << 1) | 1, std::memory_order_relaxed);
    return mask;
}

std::vector<InducedComponent> components(const Graph& g) {
    int r = g.vertex_count();
    std::vector<int> comp(r + 1, 0);
    int ncomp = 0;
    for (int s = 1; s <= r; ++s) {
        if (comp[s]) continue;
        ++ncomp;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (!comp[v]) {
                    comp[v] = ncomp;
                    q.push(v);
                }
            }
        }
    }
    std::vector<InducedComponent> out(ncomp);
    std::vector<int> local(r + 1, 0);
    for (int c = 1; c <= ncomp; ++c) {
        auto& piece = out[c - 1];
        for (int v = 1; v <= r; ++v) {
            if (comp[v] == c) {
                piece.vertex_map.push_back(v);
                local[v] = static_cast<int>(piece.vertex_map.size());
            }
        }
    }
    std::vector<std::vector<std::pair<int, int>>> comp_edges(ncomp);
    for (auto [u, v] : g.edges()) comp_edges[comp[u] - 1].emplace_back(local[u], local[v]);
    for (int c = 0; c < ncomp; ++c)
        out[c].graph = Graph(static_cast<int>(out[c].vertex_map.size()), std::move(comp_edges[c]));
    return out;
}

BipartiteCertificate is_bipartite_certified(const Graph& g) {
    int r = g.vertex_count();
    BipartiteCertificate cert;
    cert.coloring.assign(r + 1, -1);
    std::vector<int> parent(r + 1, 0);
    for (int s = 1; s <= r; ++s) {
        if (cert.coloring[s] != -1) continue;
        cert.coloring[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (cert.coloring[v] == -1) {
                    cert.coloring[v] = 1 - cert.coloring[u];
                    parent[v] = u;
                    q.push(v);
                } else if (cert.coloring[v] == cert.coloring[u]) {
                    // odd closed walk via BFS-tree paths; shrink to a cycle
                    std::vector<int> pu, pv;
                    for (int x = u; x != 0; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != 0; x = parent[x]) pv.push_back(x);
                    while (pu.size() > 1 && pv.size() > 1 &&
                           pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    cert.bipartite = false;
                    cert.coloring.clear();
                    cert.odd_cycle.assign(pu.begin(), pu.end());
                    for (std::size_t i = pv.size() - 1; i-- > 0;)
                        cert.odd_cycle.push_back(pv[i]);
                    return cert;
                }
            }
        }
    }
    cert.bipartite = true;
    return cert;
}

bool is_bipartite(const Graph& g) { return is_bipartite_certified(g).bipartite; }

std::optional<int> odd_girth(const Graph& g) {
    // BFS from every vertex; an edge joining two vertices at equal BFS depth
    // closes an odd walk of length 2d+1, and the minimum over all starts is
    // the shortest odd cycle.
    int r = g.vertex_count();
    int best = -1;
    std::vector<int> dist(r + 1);
    for (int s = 1; s <= r; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
            }
        }
        for (auto [u, v] : g.edges()) {
            if (dist[u] != -1 && dist[u] == dist[v]) {
                int len = 2 * dist[u] + 1;
                if (best == -1 || len < best) best = len;
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<int> max_odd_cycle(const Graph& g) {
    uint64_t mask = g.cycle_length_mask();
    for (int len = g.vertex_count(); len >= 3; --len)
        if ((len & 1) && (mask >> len & 1)) return len;
    return std::nullopt;
}

int max_cycle(const Graph& g) {
    uint64_t mask = g.cycle_length_mask();
    for (int len = g.vertex_count(); len >= 3; --len)
        if (mask >> len & 1) return len;
    return 0;
}

int leaf_edge_count(const Graph& g) {
    int count = 0;
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 1 || g.degree(v) == 1) ++count;
    return count;
}

bool is_pseudoforest(const Graph& g) {
    for (const auto& comp : components(g))
        if (comp.graph.edge_count() > comp.graph.vertex_count()) return false;
    return true;
}

bool has_cycle_of_length(const Graph& g, int length) {
    if (length < 3) throw std::invalid_argument("has_cycle_of_length: length must be >= 3");
    if (length > g.vertex_count()) return false;
    return g.cycle_length_mask() >> length & 1;
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw std::invalid_argument("delete_closed_neighborhood: vertex out of range");
    std::vector<char> removed(g.vertex_count() + 1, 0);
    removed[v] = 1;
    for (int u : g.neighbors(v)) removed[u] = 1;
    std::vector<int> local(g.vertex_count() + 1, 0);
    int k = 0;
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (!removed[u]) local[u] = ++k;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!removed[a] && !removed[b]) edges.emplace_back(local[a], local[b]);
    return Graph(k, std::move(edges));
}

ComponentProfile profile_of(const Graph& connected_graph, const std::vector<int>& vertex_map) {
    ComponentProfile p;
    p.vertices = vertex_map;
    p.is_bipartite = is_bipartite(connected_graph);
    p.odd_girth = odd_girth(connected_graph);
    p.max_odd_cycle = max_odd_cycle(connected_graph);
    p.max_cycle = max_cycle(connected_graph);
    p.leaf_edge_count = leaf_edge_count(connected_graph);
    return p;
}

std::vector<ComponentProfile> component_profiles(const Graph& g) {
    std::vector<ComponentProfile> out;
    for (const auto& comp : components(g)) out.push_back(profile_of(comp.graph, comp.vertex_map));
    return out;
}

namespace {

// n0 evaluated on a collection of nonbipartite component profiles.
int n0_from(const std::vector<const ComponentProfile*>& nonbip) {
    int s = static_cast<int>(nonbip.size());
    if (s == 0) return 1;
    int sum = 0;
    int min_odd = 0;
    for (const auto* p : nonbip) {
        int ki = (*p->odd_girth + 1) / 2;
        sum += static_cast<int>(p->vertices.size()) - p->leaf_edge_count - ki;
        if (min_odd == 0 || *p->odd_girth < min_odd) min_odd = *p->odd_girth;
    }
    int k = (min_odd + 1) / 2;
    int j = s / 2;
    return s % 2 == 0 ? sum + j + k : sum + j + 1;
}

}  // namespace

int n0(const Graph& g) {
    std::vector<ComponentProfile> profiles = component_profiles(g);
    std::vector<const ComponentProfile*> nonbip;
    for (const auto& p : profiles)
        if (!p.is_bipartite) nonbip.push_back(&p);
    return n0_from(nonbip);
}

int n1(const Graph& g) {
    std::vector<ComponentProfile> profiles = component_profiles(g);
    if (profiles.empty()) throw std::domain_error("n1: graph has no components");
    int p = static_cast<int>(profiles.size());
    int sum_m = 0;
    int min_odd = 0;
    int total_vertices = 0, total_leaf_edges = 0;
    for (const auto& prof : profiles) {
        if (prof.is_bipartite)
            throw std::domain_error("n1: defined only when every component is nonbipartite");
        sum_m += (*prof.max_odd_cycle + 1) / 2;
        if (min_odd == 0 || *prof.odd_girth < min_odd) min_odd = *prof.odd_girth;
        total_vertices += static_cast<int>(prof.vertices.size());
        total_leaf_edges += prof.leaf_edge_count;
    }
    int m = (min_odd + 1) / 2;
    int s = p / 2;
    int base = total_vertices - total_leaf_edges - sum_m;
    return p % 2 == 1 ? base + s + 1 : base + s + m;
}

int phi0(const Graph& g) {
    std::vector<ComponentProfile> profiles = component_profiles(g);
    std::vector<const ComponentProfile*> nonbip;
    for (const auto& p : profiles)
        if (!p.is_bipartite) nonbip.push_back(&p);
    int s = static_cast<int>(nonbip.size());
    if (s > 20) throw std::invalid_argument("phi0: too many nonbipartite components");
    // Bipartite components never enter n0, so only subsets of the
    // nonbipartite components need to be tried.
    int best = 1;
    for (uint32_t sel = 0; sel < (uint32_t{1} << s); ++sel) {
        std::vector<const ComponentProfile*> chosen;
        for (int i = 0; i < s; ++i)
            if (sel >> i & 1) chosen.push_back(nonbip[i]);
        best = std::max(best, n0_from(chosen));
    }
    return best;
}

int phi1(const Graph& g) {
    std::vector<ComponentProfile> profiles = component_profiles(g);
    int t = 0;
    int sum_k = 0;
    int min_odd = 0;
    int total_vertices = 0, total_leaf_edges = 0;
    for (const auto& prof : profiles) {
        if (prof.is_bipartite) {
            sum_k += std::max(prof.max_cycle / 2, 1);
        } else {
            ++t;
            sum_k += (*prof.max_odd_cycle + 1) / 2;
            if (min_odd == 0 || *prof.odd_girth < min_odd) min_odd = *prof.odd_girth;
        }
        total_vertices += static_cast<int>(prof.vertices.size());
        total_leaf_edges += prof.leaf_edge_count;
    }
    int base = total_vertices - total_leaf_edges - sum_k;
    if (t == 0) return base + 1;
    int j = t / 2;
    int m = (min_odd + 1) / 2;
    return t % 2 == 0 ? base + j + m : base + j + 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace icstab
