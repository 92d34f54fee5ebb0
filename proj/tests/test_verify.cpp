#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <set>

#include "icstab/newton.hpp"
#include "icstab/verify.hpp"

using namespace icstab;

namespace {

Graph cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, k);
    return Graph(k, std::move(edges));
}

Graph path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, std::move(edges));
}

int count_with_vertices(const std::vector<Graph>& graphs, int r) {
    int c = 0;
    for (const auto& g : graphs)
        if (g.vertex_count() == r) ++c;
    return c;
}

}  // namespace

TEST_CASE("canonical keys identify isomorphic graphs") {
    Graph a(4, {{1, 2}, {2, 3}, {3, 4}});
    Graph b(4, {{2, 4}, {1, 4}, {1, 3}});  // another labeling of P4
    CHECK(canonical_key(a) == canonical_key(b));
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(canonical_key(a) != canonical_key(star));
    CHECK(canonical_key(graph_from_key(4, canonical_key(a))) == canonical_key(a));
}

TEST_CASE("exhaustive connected counts match the known sequence") {
    std::vector<Graph> graphs = connected_graphs_up_to(6);
    CHECK(count_with_vertices(graphs, 2) == 1);
    CHECK(count_with_vertices(graphs, 3) == 2);
    CHECK(count_with_vertices(graphs, 4) == 6);
    CHECK(count_with_vertices(graphs, 5) == 21);
    CHECK(count_with_vertices(graphs, 6) == 112);
    for (const auto& g : graphs) CHECK(components(g).size() == 1);
}

TEST_CASE("corpus spec: exhaustive(3) connected") {
    CorpusSpec spec;
    spec.max_vertices = 3;
    std::vector<Graph> graphs = generate_corpus(spec);
    CHECK(graphs.size() == 3);  // K2, P3, C3
}

TEST_CASE("corpus filters") {
    CorpusSpec spec;
    spec.max_vertices = 5;
    spec.pseudoforest_only = true;
    for (const auto& g : generate_corpus(spec)) CHECK(is_pseudoforest(g));
    spec.pseudoforest_only = false;
    spec.no_c4 = true;
    for (const auto& g : generate_corpus(spec))
        CHECK((g.vertex_count() < 4 || !has_cycle_of_length(g, 4)));
}

TEST_CASE("disconnected composition") {
    CorpusSpec spec;
    spec.max_vertices = 5;
    spec.connected_only = false;
    std::vector<Graph> graphs = generate_corpus(spec);
    // connected catalog plus multisets: K2+K2, K2+P3, K2+C3
    int disconnected = 0;
    std::set<uint64_t> keys;
    for (const auto& g : graphs) {
        if (components(g).size() > 1) ++disconnected;
        keys.insert(canonical_key(g) * 16 + g.vertex_count());
    }
    CHECK(disconnected == 3);
    CHECK(keys.size() == graphs.size());
}

TEST_CASE("random pseudoforest corpus is seed deterministic and valid") {
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::random_pseudoforest;
    spec.count = 12;
    spec.max_vertices = 8;
    spec.seed = 42;
    spec.connected_only = false;
    std::vector<Graph> first = generate_corpus(spec);
    std::vector<Graph> second = generate_corpus(spec);
    REQUIRE(first.size() == 12);
    REQUIRE(second.size() == 12);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].edges() == second[i].edges());
        CHECK(is_pseudoforest(first[i]));
    }
    spec.seed = 43;
    std::vector<Graph> third = generate_corpus(spec);
    bool any_difference = false;
    for (std::size_t i = 0; i < first.size(); ++i)
        if (first[i].edges() != third[i].edges()) any_difference = true;
    CHECK(any_difference);
}

TEST_CASE("check_T0 on worked pairs") {
    Graph k2(2, {{1, 2}});
    CHECK(check_T0(k2, cycle(3), 2).pass);
    CHECK(check_T0(path(3), cycle(5), 2).pass);
    CHECK(check_T0(k2, cycle(3), 1).pass);
    CHECK_THROWS_AS(check_T0(cycle(3), cycle(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(check_T0(k2, path(3), 2), std::invalid_argument);
}

TEST_CASE("naive all-closures expansion fails for two triangles") {
    auto start = std::chrono::steady_clock::now();
    CHECK_FALSE(naive_binomial_expansion_matches(cycle(3), cycle(3), 3));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    CHECK(ms < 10000);
    // the same probe at n = 2 agrees, the failure is genuinely about n = 3
    CHECK(naive_binomial_expansion_matches(cycle(3), cycle(3), 2));
}

TEST_CASE("check_T1 on worked pairs") {
    Graph k2(2, {{1, 2}});
    CheckResult r2 = check_T1(k2, cycle(3), 2);
    CHECK(r2.pass);
    CHECK(check_T1(k2, cycle(3), 1).pass);
    CHECK(check_T1(path(3), cycle(3), 2).pass);
}

TEST_CASE("check_T2 on worked pairs") {
    Graph k2(2, {{1, 2}});
    CHECK(check_T2(k2, cycle(3), 2).pass);
    CHECK(check_T2(k2, cycle(3), 1).pass);
    CHECK(check_T2(path(3), cycle(5), 2).pass);
}

TEST_CASE("bounds and sharpness outcomes") {
    BoundsOutcome c3 = check_bounds_and_sharpness(cycle(3));
    CHECK(c3.t3);
    CHECK(c3.t4);
    REQUIRE(c3.t6.has_value());
    CHECK(*c3.t6);
    REQUIRE(c3.t8.has_value());
    CHECK(*c3.t8);

    BoundsOutcome c4 = check_bounds_and_sharpness(cycle(4));
    CHECK(c4.t3);
    CHECK(c4.t4);
    REQUIRE(c4.t6.has_value());
    CHECK_FALSE(c4.t8.has_value());  // has a 4-cycle, T8 not asserted

    Graph paw(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    BoundsOutcome p = check_bounds_and_sharpness(paw);
    CHECK(p.t3);
    CHECK(p.t4);
    CHECK(p.t6.value());
    CHECK(p.t8.value());
}

TEST_CASE("leaf colon and vertex cover helpers") {
    Graph paw(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    StabilityComputation comp = compute_stability(paw);
    std::string why;
    CHECK(leaf_colon_identity_holds(paw, comp.closures, &why));
    CHECK(vertex_cover_bound_holds(paw, comp.closures, &why));

    Graph k2(2, {{1, 2}});
    StabilityComputation ck2 = compute_stability(k2);
    CHECK(leaf_colon_identity_holds(k2, ck2.closures, &why));
    CHECK(vertex_cover_bound_holds(k2, ck2.closures, &why));
}

TEST_CASE("run over exhaustive(5) passes everything") {
    CorpusSpec spec;
    spec.max_vertices = 5;
    RunOptions opts;
    opts.jobs = 2;
    VerificationReport rep = run(spec, opts);
    CHECK(rep.all_pass);
    CHECK(rep.graph_count == 30);
    bool saw_counterexample = false, saw_bounds = false, saw_t0 = false;
    for (const auto& c : rep.checks) {
        CHECK(c.fail == 0);
        if (c.name == "counterexample") {
            saw_counterexample = true;
            CHECK(c.pass == 1);
        }
        if (c.name == "t0") {
            saw_t0 = true;
            CHECK(c.pass > 0);
        }
        if (c.name == "t3") {
            saw_bounds = true;
            CHECK(c.pass == 30);
        }
    }
    CHECK(saw_counterexample);
    CHECK(saw_t0);
    CHECK(saw_bounds);
}

TEST_CASE("empty corpus passes trivially") {
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::random_pseudoforest;
    spec.count = 0;
    spec.seed = 7;
    spec.connected_only = false;
    RunOptions opts;
    opts.checks = {"bounds"};
    VerificationReport rep = run(spec, opts);
    CHECK(rep.all_pass);
    CHECK(rep.graph_count == 0);
}
