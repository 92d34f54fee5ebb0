#include "icstab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "icstab/homology.hpp"
#include "icstab/io.hpp"
#include "icstab/newton.hpp"

namespace icstab {

namespace {

int triangle_bit(int u, int v, int r) {
    // position of edge {u,v}, u < v, in the row-major upper triangle
    int idx = 0;
    for (int i = 1; i < u; ++i) idx += r - i;
    return idx + (v - u - 1);
}

}  // namespace

uint64_t canonical_key(const Graph& g) {
    const int r = g.vertex_count();
    if (r > 11) throw std::invalid_argument("canonical_key: too many vertices");
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 1);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t key = 0;
        for (auto [u, v] : g.edges()) {
            int a = perm[u - 1], b = perm[v - 1];
            if (a > b) std::swap(a, b);
            key |= uint64_t{1} << triangle_bit(a, b, r);
        }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_key(int vertex_count, uint64_t key) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= vertex_count; ++u)
        for (int v = u + 1; v <= vertex_count; ++v)
            if (key >> triangle_bit(u, v, vertex_count) & 1) edges.emplace_back(u, v);
    return Graph(vertex_count, std::move(edges));
}

std::vector<Graph> connected_graphs_up_to(int max_vertices) {
    if (max_vertices < 2) return {};
    if (max_vertices > 8)
        throw std::invalid_argument("connected_graphs_up_to: exhaustive cap is 8 vertices");
    std::vector<Graph> all;
    std::vector<Graph> prev_level = {Graph(2, {{1, 2}})};
    all.push_back(prev_level[0]);
    for (int r = 3; r <= max_vertices; ++r) {
        std::set<uint64_t> seen;
        std::vector<Graph> level;
        // every connected graph arises from a connected graph one vertex
        // smaller by attaching the new vertex along a nonempty neighborhood
        for (const Graph& base : prev_level) {
            for (uint32_t attach = 1; attach < (uint32_t{1} << (r - 1)); ++attach) {
                std::vector<std::pair<int, int>> edges = base.edges();
                for (int i = 0; i < r - 1; ++i)
                    if (attach >> i & 1) edges.emplace_back(i + 1, r);
                Graph candidate(r, std::move(edges));
                uint64_t key = canonical_key(candidate);
                if (seen.insert(key).second) level.push_back(graph_from_key(r, key));
            }
        }
        std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
            return canonical_key(a) < canonical_key(b);
        });
        all.insert(all.end(), level.begin(), level.end());
        prev_level = std::move(level);
    }
    return all;
}

namespace {

std::vector<Graph> compose_disconnected(const std::vector<Graph>& connected, int max_vertices) {
    // multisets of connected pieces; distinct multisets give non-isomorphic
    // graphs, so no dedup pass is needed
    std::vector<Graph> out;
    std::vector<const Graph*> chosen;
    auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
        if (chosen.size() >= 2) {
            Graph g = *chosen[0];
            for (std::size_t i = 1; i < chosen.size(); ++i) g = disjoint_union(g, *chosen[i]);
            out.push_back(std::move(g));
        }
        for (std::size_t i = from; i < connected.size(); ++i) {
            if (connected[i].vertex_count() > budget) continue;
            chosen.push_back(&connected[i]);
            self(self, i, budget - connected[i].vertex_count());
            chosen.pop_back();
        }
    };
    rec(rec, 0, max_vertices);
    return out;
}

uint64_t rng_below(std::mt19937_64& gen, uint64_t bound) { return gen() % bound; }

Graph random_pseudoforest(std::mt19937_64& gen, int max_vertices) {
    int r = 2 + static_cast<int>(rng_below(gen, static_cast<uint64_t>(max_vertices - 1)));
    std::vector<int> parts;
    int remaining = r;
    while (remaining > 0) {
        int part = remaining <= 2
                       ? remaining
                       : 2 + static_cast<int>(rng_below(gen, static_cast<uint64_t>(remaining - 1)));
        parts.push_back(part);
        remaining -= part;
    }
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (int s : parts) {
        std::vector<std::pair<int, int>> tree;
        if (s >= 2) {
            // uniform labeled tree from a Pruefer sequence
            std::vector<int> pruefer(s - 2);
            for (auto& x : pruefer) x = static_cast<int>(rng_below(gen, s));
            std::vector<int> deg(s, 1);
            for (int x : pruefer) ++deg[x];
            std::set<int> leaves;
            for (int v = 0; v < s; ++v)
                if (deg[v] == 1) leaves.insert(v);
            for (int x : pruefer) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                tree.emplace_back(std::min(leaf, x) + 1, std::max(leaf, x) + 1);
                if (--deg[x] == 1) leaves.insert(x);
            }
            auto it = leaves.begin();
            int a = *it++;
            int b = *it;
            tree.emplace_back(std::min(a, b) + 1, std::max(a, b) + 1);
        }
        if (s >= 3 && rng_below(gen, 2) == 0) {
            // close one cycle, sampling an odd length with probability 1/2
            Graph tg(s, tree);
            std::vector<std::vector<int>> dist(s + 1, std::vector<int>(s + 1, -1));
            for (int a = 1; a <= s; ++a) {
                dist[a][a] = 0;
                std::vector<int> queue = {a};
                for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                    int u = queue[qi];
                    for (int v : tg.neighbors(u)) {
                        if (dist[a][v] == -1) {
                            dist[a][v] = dist[a][u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
            }
            bool want_odd = rng_below(gen, 2) == 0;
            std::vector<std::pair<int, int>> odd_closers, even_closers;
            for (int a = 1; a <= s; ++a) {
                for (int b = a + 1; b <= s; ++b) {
                    if (dist[a][b] < 2) continue;
                    // cycle length = tree distance + 1
                    ((dist[a][b] % 2 == 0) ? odd_closers : even_closers).emplace_back(a, b);
                }
            }
            auto& pool = want_odd ? (odd_closers.empty() ? even_closers : odd_closers)
                                  : (even_closers.empty() ? odd_closers : even_closers);
            if (!pool.empty()) tree.push_back(pool[rng_below(gen, pool.size())]);
        }
        for (auto [u, v] : tree) edges.emplace_back(u + offset, v + offset);
        offset += s;
    }
    return Graph(r, std::move(edges));
}

template <typename Item, typename Fn>
void parallel_for_each(const std::vector<Item>& items, int jobs, Fn&& fn) {
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<int>(jobs, static_cast<int>(items.size()));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

std::string graph_desc(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges";
    for (auto [u, v] : g.edges()) os << " " << u << "-" << v;
    return os.str();
}

}  // namespace

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
    std::vector<Graph> graphs;
    switch (spec.mode) {
        case CorpusSpec::Mode::exhaustive: {
            graphs = connected_graphs_up_to(spec.max_vertices);
            if (!spec.connected_only) {
                auto extra = compose_disconnected(graphs, spec.max_vertices);
                graphs.insert(graphs.end(), extra.begin(), extra.end());
            }
            break;
        }
        case CorpusSpec::Mode::random_pseudoforest: {
            if (spec.max_vertices < 2)
                throw std::invalid_argument("generate_corpus: max_vertices must be at least 2");
            std::mt19937_64 gen(spec.seed);
            for (int i = 0; i < spec.count; ++i)
                graphs.push_back(random_pseudoforest(gen, spec.max_vertices));
            break;
        }
        case CorpusSpec::Mode::file:
            graphs = read_graphs_file(spec.path);
            break;
    }
    std::vector<Graph> filtered;
    for (auto& g : graphs) {
        if (spec.connected_only && spec.mode != CorpusSpec::Mode::exhaustive &&
            components(g).size() != 1)
            continue;
        if (spec.pseudoforest_only && !is_pseudoforest(g)) continue;
        if (spec.no_c4 && g.vertex_count() >= 4 && has_cycle_of_length(g, 4)) continue;
        filtered.push_back(std::move(g));
    }
    return filtered;
}

namespace {

struct PairSetup {
    int r = 0, r1 = 0, r2 = 0;
    MonomialIdeal bip_small, non_small;  // in their own rings
    MonomialIdeal bip, non;              // embedded in the joint ring
};

PairSetup pair_setup(const Graph& g_bip, const Graph& g_non) {
    if (!is_bipartite(g_bip))
        throw std::invalid_argument("pair check: first graph must be bipartite");
    if (is_bipartite(g_non))
        throw std::invalid_argument("pair check: second graph must be nonbipartite");
    if (g_bip.edge_count() == 0 || g_non.edge_count() == 0)
        throw std::invalid_argument("pair check: graphs need edges");
    PairSetup s;
    s.r1 = g_bip.vertex_count();
    s.r2 = g_non.vertex_count();
    s.r = s.r1 + s.r2;
    s.bip_small = edge_ideal(g_bip);
    s.non_small = edge_ideal(g_non);
    s.bip = extend_ambient(s.bip_small, s.r, 0);
    s.non = extend_ambient(s.non_small, s.r, s.r1);
    return s;
}

}  // namespace

CheckResult check_T0(const Graph& g_bip, const Graph& g_non, int n) {
    PairSetup s = pair_setup(g_bip, g_non);
    MonomialIdeal lhs = closure_power(sum(s.bip, s.non), n);
    MonomialIdeal rhs = zero_ideal(s.r);
    for (int i = 0; i <= n; ++i) {
        MonomialIdeal closure_part =
            i == n ? unit_ideal(s.r)
                   : extend_ambient(closure_power(s.non_small, n - i), s.r, s.r1);
        rhs = sum(rhs, product(power(s.bip, i), closure_part));
    }
    if (equal(lhs, rhs)) return {true, ""};
    std::ostringstream os;
    os << "T0 mismatch at n=" << n << " for [" << graph_desc(g_bip) << "] + ["
       << graph_desc(g_non) << "]";
    return {false, os.str()};
}

CheckResult check_T1(const Graph& g_bip, const Graph& g_non, int n) {
    PairSetup s = pair_setup(g_bip, g_non);
    AssSet lhs = associated_primes(closure_power(sum(s.bip, s.non), n));
    AssSet ass_bip = associated_primes(s.bip_small);
    AssSet ass_non = associated_primes(closure_power(s.non_small, n));
    std::vector<PrimeSupport> expected;
    for (const auto& p : ass_bip.primes) {
        for (const auto& q : ass_non.primes) {
            PrimeSupport u = p;
            for (int v : q.support) u.support.push_back(v + s.r1);
            std::sort(u.support.begin(), u.support.end());
            expected.push_back(std::move(u));
        }
    }
    AssSet rhs = make_ass_set(std::move(expected));
    if (lhs == rhs) return {true, ""};
    std::ostringstream os;
    os << "T1 mismatch at n=" << n << " for [" << graph_desc(g_bip) << "] + ["
       << graph_desc(g_non) << "]: lhs=" << lhs.str() << " rhs=" << rhs.str();
    return {false, os.str()};
}

CheckResult check_T2(const Graph& g_bip, const Graph& g_non, int n) {
    PairSetup s = pair_setup(g_bip, g_non);
    int lhs = depth_quotient(closure_power(sum(s.bip, s.non), n), s.r);
    std::vector<int> depth_bip(n + 2, 0), depth_non(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        depth_bip[k] = depth_quotient(power(s.bip_small, k), s.r1);
        depth_non[k] = depth_quotient(closure_power(s.non_small, k), s.r2);
    }
    int rhs = -1;
    for (int i = 1; i <= n - 1; ++i) {
        int v = depth_bip[n - i] + depth_non[i] + 1;
        if (rhs == -1 || v < rhs) rhs = v;
    }
    for (int j = 1; j <= n; ++j) {
        int v = depth_bip[n - j + 1] + depth_non[j];
        if (rhs == -1 || v < rhs) rhs = v;
    }
    if (lhs == rhs) return {true, ""};
    std::ostringstream os;
    os << "T2 mismatch at n=" << n << " for [" << graph_desc(g_bip) << "] + ["
       << graph_desc(g_non) << "]: depth lhs=" << lhs << " formula rhs=" << rhs;
    return {false, os.str()};
}

bool naive_binomial_expansion_matches(const Graph& g1, const Graph& g2, int n) {
    MonomialIdeal i1 = edge_ideal(g1);
    MonomialIdeal i2 = edge_ideal(g2);
    int r = g1.vertex_count() + g2.vertex_count();
    MonomialIdeal joint =
        sum(extend_ambient(i1, r, 0), extend_ambient(i2, r, g1.vertex_count()));
    MonomialIdeal lhs = closure_power(joint, n);
    MonomialIdeal rhs = zero_ideal(r);
    for (int i = 0; i <= n; ++i) {
        MonomialIdeal a =
            i == 0 ? unit_ideal(r) : extend_ambient(closure_power(i1, i), r, 0);
        MonomialIdeal b = i == n ? unit_ideal(r)
                                 : extend_ambient(closure_power(i2, n - i), r,
                                                  g1.vertex_count());
        rhs = sum(rhs, product(a, b));
    }
    return equal(lhs, rhs);
}

BoundsOutcome check_bounds_and_sharpness(const Graph& g, const StabilityOptions& opts) {
    BoundsOutcome out;
    out.report = report(g, opts);
    out.t3 = out.report.astab_bar <= out.report.phi0;
    out.t4 = out.report.dstab_bar <= out.report.phi1;
    if (out.report.pseudoforest) {
        out.t6 = out.report.astab_bar == out.report.phi0;
        if (!out.report.has_c4) out.t8 = out.report.dstab_bar == out.report.phi1;
    }
    return out;
}

bool leaf_colon_identity_holds(const Graph& g, const std::vector<MonomialIdeal>& closures,
                               std::string* why) {
    for (auto [u, v] : g.edges()) {
        int leaf = -1, hub = -1;
        if (g.degree(u) == 1) leaf = u, hub = v;
        else if (g.degree(v) == 1) leaf = v, hub = u;
        if (leaf < 0) continue;
        Monomial uv = Monomial::variable(g.vertex_count(), leaf) *
                      Monomial::variable(g.vertex_count(), hub);
        for (std::size_t n = 2; n <= closures.size(); ++n) {
            if (!equal(colon(closures[n - 1], uv), closures[n - 2])) {
                if (why) {
                    std::ostringstream os;
                    os << "leaf colon failed at n=" << n << " leaf " << leaf << " for "
                       << graph_desc(g);
                    *why = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

bool vertex_cover_bound_holds(const Graph& g, const std::vector<MonomialIdeal>& closures,
                              std::string* why) {
    std::vector<PrimeSupport> covers = minimal_primes(edge_ideal(g));
    for (std::size_t n = 1; n <= closures.size(); ++n) {
        for (const auto& gen : closures[n - 1].gens()) {
            for (const auto& cover : covers) {
                BigInt total(0);
                for (int v : cover.support) total += gen[v - 1];
                if (total < BigInt(static_cast<long long>(n))) {
                    if (why) {
                        std::ostringstream os;
                        os << "cover bound failed at n=" << n << " cover " << cover.str()
                           << " generator " << gen.str() << " for " << graph_desc(g);
                        *why = os.str();
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

bool composite_dstab_identity_holds(const Graph& g, std::string* why) {
    std::vector<InducedComponent> comps = components(g);
    std::vector<std::pair<int, int>> bip_edges, non_edges;
    int bip_r = 0, non_r = 0;
    for (auto& comp : comps) {
        bool bip = is_bipartite(comp.graph);
        int& offset = bip ? bip_r : non_r;
        auto& edges = bip ? bip_edges : non_edges;
        for (auto [u, v] : comp.graph.edges()) edges.emplace_back(u + offset, v + offset);
        offset += comp.graph.vertex_count();
    }
    if (bip_r == 0 || non_r == 0)
        throw std::invalid_argument("composite_dstab_identity_holds: needs both kinds of components");
    Graph g_bip(bip_r, bip_edges);
    Graph g_non(non_r, non_edges);
    if (g_bip.edge_count() == 0)
        throw std::invalid_argument("composite_dstab_identity_holds: bipartite part has no edges");
    int lhs = dstab_bar(g);
    int rhs = dstab_ordinary(g_bip) + dstab_bar(g_non) - 1;
    if (lhs == rhs) return true;
    if (why) {
        std::ostringstream os;
        os << "D1 identity failed for " << graph_desc(g) << ": dstab_bar=" << lhs
           << " composite=" << rhs;
        *why = os.str();
    }
    return false;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

bool wants(const RunOptions& opts, const std::string& name) {
    return std::find(opts.checks.begin(), opts.checks.end(), name) != opts.checks.end();
}

}  // namespace

VerificationReport run(const CorpusSpec& spec, const RunOptions& opts) {
    VerificationReport report;
    {
        std::ostringstream os;
        switch (spec.mode) {
            case CorpusSpec::Mode::exhaustive:
                os << "exhaustive(max_vertices=" << spec.max_vertices
                   << ", connected_only=" << spec.connected_only << ")";
                break;
            case CorpusSpec::Mode::random_pseudoforest:
                os << "random_pseudoforest(count=" << spec.count
                   << ", max_vertices=" << spec.max_vertices << ", seed=" << spec.seed << ")";
                break;
            case CorpusSpec::Mode::file:
                os << "file(" << spec.path << ")";
                break;
        }
        report.corpus = os.str();
    }
    std::vector<Graph> corpus = generate_corpus(spec);
    report.graph_count = static_cast<long long>(corpus.size());

    if (wants(opts, "counterexample")) {
        Timer timer;
        CheckStats stats;
        stats.name = "counterexample";
        Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
        if (!naive_binomial_expansion_matches(triangle, triangle, 3)) {
            ++stats.pass;
        } else {
            ++stats.fail;
            stats.failures.push_back(
                "two disjoint triangles: naive closure expansion unexpectedly matched at n=3");
        }
        stats.ms = timer.ms();
        report.checks.push_back(std::move(stats));
    }

    // pair checks on bipartite x nonbipartite connected pieces that fit the
    // vertex budget together
    std::vector<std::pair<const Graph*, const Graph*>> pairs;
    for (const auto& a : corpus) {
        if (a.edge_count() == 0 || components(a).size() != 1 || !is_bipartite(a)) continue;
        for (const auto& b : corpus) {
            if (components(b).size() != 1 || is_bipartite(b)) continue;
            if (a.vertex_count() + b.vertex_count() <= spec.max_vertices)
                pairs.emplace_back(&a, &b);
        }
    }
    struct PairCheck {
        const char* name;
        int max_n;
        CheckResult (*fn)(const Graph&, const Graph&, int);
    };
    const PairCheck pair_checks[] = {
        {"t0", 3, check_T0}, {"t1", 2, check_T1}, {"t2", 2, check_T2}};
    for (const auto& pc : pair_checks) {
        if (!wants(opts, pc.name)) continue;
        Timer timer;
        CheckStats stats;
        stats.name = pc.name;
        std::mutex mu;
        parallel_for_each(pairs, opts.jobs, [&](std::size_t i) {
            for (int n = 1; n <= pc.max_n; ++n) {
                CheckResult res = pc.fn(*pairs[i].first, *pairs[i].second, n);
                std::lock_guard<std::mutex> lock(mu);
                if (res.pass) ++stats.pass;
                else {
                    ++stats.fail;
                    stats.failures.push_back(res.detail);
                }
            }
        });
        std::sort(stats.failures.begin(), stats.failures.end());
        stats.ms = timer.ms();
        report.checks.push_back(std::move(stats));
    }

    if (wants(opts, "bounds")) {
        Timer timer;
        CheckStats t3, t4, t6, t8;
        t3.name = "t3";
        t4.name = "t4";
        t6.name = "t6";
        t8.name = "t8";
        std::mutex mu;
        parallel_for_each(corpus, opts.jobs, [&](std::size_t i) {
            const Graph& g = corpus[i];
            if (g.edge_count() == 0) return;
            std::string failure;
            BoundsOutcome outcome;
            bool threw = false;
            try {
                outcome = check_bounds_and_sharpness(g, opts.stability);
            } catch (const std::exception& e) {
                threw = true;
                failure = std::string("exception for ") + graph_desc(g) + ": " + e.what();
            }
            std::lock_guard<std::mutex> lock(mu);
            if (threw) {
                ++t3.fail;
                t3.failures.push_back(failure);
                return;
            }
            auto tally = [&](CheckStats& stats, bool ok, const char* label) {
                if (ok) ++stats.pass;
                else {
                    ++stats.fail;
                    stats.failures.push_back(std::string(label) + " failed for " + graph_desc(g));
                }
            };
            tally(t3, outcome.t3, "T3");
            tally(t4, outcome.t4, "T4");
            if (outcome.t6) tally(t6, *outcome.t6, "T6");
            if (outcome.t8) tally(t8, *outcome.t8, "T8");
        });
        long long elapsed = timer.ms();
        for (auto* stats : {&t3, &t4, &t6, &t8}) {
            std::sort(stats->failures.begin(), stats->failures.end());
            stats->ms = elapsed;
            report.checks.push_back(std::move(*stats));
        }
    }

    for (const auto& stats : report.checks)
        if (stats.fail > 0) report.all_pass = false;
    return report;
}

}  // namespace icstab
