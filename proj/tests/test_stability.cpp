#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icstab/newton.hpp"
#include "icstab/stability.hpp"
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

PrimeSupport prime(std::vector<int> vars) { return PrimeSupport{std::move(vars)}; }

}  // namespace

TEST_CASE("triangle ground truths") {
    StabilityReport rep = report(cycle(3));
    CHECK(rep.n0 == 2);
    CHECK(rep.n1 == 2);
    CHECK(rep.phi0 == 2);
    CHECK(rep.phi1 == 2);
    CHECK(rep.astab_bar == 2);
    CHECK(rep.dstab_bar == 2);
    CHECK(rep.pseudoforest);
    CHECK_FALSE(rep.has_c4);
    REQUIRE(rep.ass_sequence.size() == 2);
    CHECK(rep.ass_sequence[0].primes ==
          std::vector<PrimeSupport>{prime({1, 2}), prime({1, 3}), prime({2, 3})});
    CHECK(rep.ass_sequence[1].primes ==
          std::vector<PrimeSupport>{prime({1, 2}), prime({1, 2, 3}), prime({1, 3}),
                                    prime({2, 3})});
    CHECK(rep.depth_sequence == std::vector<int>{1, 0});
}

TEST_CASE("single edge") {
    StabilityReport rep = report(Graph(2, {{1, 2}}));
    CHECK(rep.phi0 == 1);
    CHECK(rep.phi1 == 1);
    CHECK(rep.astab_bar == 1);
    CHECK(rep.dstab_bar == 1);
    REQUIRE(rep.ass_sequence.size() == 1);
    CHECK(rep.ass_sequence[0].primes == std::vector<PrimeSupport>{prime({1}), prime({2})});
    CHECK(rep.depth_sequence == std::vector<int>{1});
}

TEST_CASE("path depth sequence") {
    StabilityReport rep = report(path(3));
    CHECK(rep.phi1 == 1);
    CHECK(rep.depth_sequence == std::vector<int>{1});
}

TEST_CASE("edgeless graphs are rejected") {
    CHECK_THROWS_AS(report(Graph(3, {})), std::invalid_argument);
    CHECK_THROWS_AS(ass_sequence(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("triangle plus isolated edge: product structure at n=2") {
    Graph g = disjoint_union(cycle(3), Graph(2, {{1, 2}}));
    StabilityComputation comp = compute_stability(g);
    CHECK(comp.report.phi0 == 2);
    REQUIRE(comp.report.ass_sequence.size() == 2);
    CHECK(comp.report.ass_sequence[0].primes.size() == 6);
    // {p + q : p in Ass(R/I(K2)), q in Ass(R/closure(I(C3)^2))} has 2*4 supports
    CHECK(comp.report.ass_sequence[1].primes.size() == 8);
    CHECK(comp.report.ass_sequence[1].contains(prime({1, 2, 3, 4})));
    CHECK(comp.report.ass_sequence[1].contains(prime({1, 2, 3, 5})));
    CHECK_FALSE(comp.report.ass_sequence[1].contains(prime({1, 2, 3, 4, 5})));
}

TEST_CASE("pendant triangle is sharp") {
    Graph paw(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    StabilityReport rep = report(paw);
    CHECK(rep.phi0 == 2);
    CHECK(rep.astab_bar == 2);
    CHECK(rep.pseudoforest);
}

TEST_CASE("five-cycle reaches its depth bound") {
    StabilityReport rep = report(cycle(5));
    CHECK(rep.phi1 == 3);
    CHECK(rep.dstab_bar == 3);
    CHECK(rep.phi0 == 3);
    CHECK(rep.astab_bar == 3);
    REQUIRE(rep.depth_sequence.size() == 3);
    CHECK(rep.depth_sequence[2] == 0);
}

TEST_CASE("bipartite shortcut matches the full pipeline") {
    for (Graph g : {cycle(4), path(4), Graph(4, {{1, 2}, {1, 3}, {1, 4}})}) {
        StabilityOptions careful;
        careful.bipartite_shortcut = false;
        StabilityReport fast = report(g);
        StabilityReport slow = report(g, careful);
        CHECK(fast.astab_bar == slow.astab_bar);
        CHECK(fast.dstab_bar == slow.dstab_bar);
        CHECK(fast.depth_sequence == slow.depth_sequence);
        REQUIRE(fast.ass_sequence.size() == slow.ass_sequence.size());
        for (std::size_t i = 0; i < fast.ass_sequence.size(); ++i)
            CHECK(fast.ass_sequence[i] == slow.ass_sequence[i]);
    }
}

TEST_CASE("bipartite graphs stabilize immediately") {
    for (Graph g : {cycle(4), path(5), cycle(6)}) {
        StabilityReport rep = report(g);
        CHECK(rep.astab_bar == 1);
        CHECK(rep.phi0 == 1);
        for (std::size_t i = 0; i < rep.ass_sequence.size(); ++i)
            CHECK(rep.ass_sequence[i] == rep.ass_sequence[0]);
    }
}

TEST_CASE("ordinary depth data and the composite identity") {
    Graph k2(2, {{1, 2}});
    CHECK(ordinary_depth_sequence(k2) == std::vector<int>{1});
    CHECK(dstab_ordinary(k2) == 1);

    Graph mixed = disjoint_union(k2, cycle(3));
    CHECK(composite_dstab_identity_holds(mixed));
    Graph mixed2 = disjoint_union(path(3), cycle(3));
    CHECK(composite_dstab_identity_holds(mixed2));
    CHECK_THROWS_AS(composite_dstab_identity_holds(cycle(3)), std::invalid_argument);
}

TEST_CASE("two disjoint triangles reach phi0 = 5") {
    Graph two = disjoint_union(cycle(3), cycle(3));
    StabilityComputation comp = compute_stability(two);
    CHECK(comp.report.phi0 == 5);
    CHECK(comp.report.astab_bar == 5);  // pseudoforest sharpness
    CHECK(comp.report.pseudoforest);
    // the ass sets genuinely grow one last time at n = 5
    CHECK(comp.report.ass_sequence[3].primes.size() <
          comp.report.ass_sequence[4].primes.size());
}
