#include <doctest.h>

#include "oracles.hh"

#include <css/graph.hh>
#include <css/rng.hh>
#include <css/vertex_set.hh>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

using namespace css;

using std::set;
using std::sort;
using std::vector;

namespace
{
    auto masks_of(const vector<VertexSet> & sets) -> set<oracle::Mask>
    {
        set<oracle::Mask> result;
        for (auto & s : sets)
            result.insert(oracle::to_mask(s));
        return result;
    }

    auto random_graph(SplitMix64 & rng, int max_n) -> Graph
    {
        int n = int(rng.below(max_n + 1));
        double p = rng.uniform();
        return gen_gnp(n, p, rng.next());
    }
}

TEST_CASE("vertex sets")
{
    VertexSet s(70, { 3, 64, 69 });
    CHECK(s.count() == 3);
    CHECK(s.first() == 3);
    CHECK(s.next(3) == 64);
    CHECK(s.next(69) == VertexSet::npos);
    CHECK(s.complement().count() == 67);
    CHECK(s.to_string() == "{3,64,69}");
    CHECK(VertexSet(4, { 0, 2 }) < VertexSet(4, { 0, 3 }));
    CHECK(VertexSet(4, { 0 }) < VertexSet(4, { 0, 1 }));
    CHECK(VertexSet(4) < VertexSet(4, { 0 }));
    CHECK_THROWS(s.insert(70));
}

TEST_CASE("gen_gnp extremes and determinism")
{
    CHECK(gen_gnp(7, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(7, 1.0, 1).edge_count() == 21);
    CHECK(gen_gnp(30, 0.5, 42) == gen_gnp(30, 0.5, 42));

    auto g = gen_gnp(30, 0.5, 42);
    CHECK(g.edge_count() == 209);
    double mean = 435 * 0.5, sd = std::sqrt(435 * 0.25);
    CHECK(std::abs(double(g.edge_count()) - mean) <= 4 * sd);
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(complement(empty_graph(4)) == complete_graph(4));
    CHECK(oracle::contains_induced(complement(path_graph(4)), path_graph(4)));
    CHECK(complement(path_graph(4)).edge_count() == 3);
}

TEST_CASE("induced subgraphs")
{
    auto k = induced(complete_graph(5), VertexSet(5, { 0, 1, 2 }));
    CHECK(k.graph == complete_graph(3));
    CHECK(induced(complete_graph(5), VertexSet(5)).graph.size() == 0);

    auto c = induced(cycle_graph(5), VertexSet(5, { 0, 1, 3 }));
    CHECK(c.graph.edge_count() == 1);
    CHECK(c.graph.adjacent(0, 1));
    CHECK(c.graph.degree(2) == 0);
    CHECK(c.to_host == vector<int>{ 0, 1, 3 });
    CHECK(lift(c, VertexSet(3, { 2 }), 5) == VertexSet(5, { 3 }));
}

TEST_CASE("maximal cliques and stables on small graphs")
{
    CHECK(maximal_cliques(complete_graph(4)) == vector{ VertexSet::full(4) });
    CHECK(maximal_stables(complete_graph(4)).size() == 4);
    CHECK(maximal_cliques(empty_graph(3)).size() == 3);
    CHECK(maximal_stables(empty_graph(3)) == vector{ VertexSet::full(3) });
    CHECK(maximal_cliques(cycle_graph(5)).size() == 5);
    CHECK(maximal_stables(cycle_graph(5)).size() == 5);
    CHECK(maximal_cliques(Graph(0)) == vector{ VertexSet(0) });
}

TEST_CASE("maximal cliques agree with subset enumeration")
{
    SplitMix64 rng(11);
    for (int trial = 0 ; trial < 150 ; ++trial) {
        auto g = random_graph(rng, 9);
        auto ks = maximal_cliques(g);
        CHECK(std::is_sorted(ks.begin(), ks.end()));
        auto expected = oracle::maximal_cliques(g);
        CHECK(masks_of(ks) == set<oracle::Mask>(expected.begin(), expected.end()));
        auto ss = maximal_stables(g);
        auto expected_s = oracle::maximal_stables(g);
        CHECK(masks_of(ss) == set<oracle::Mask>(expected_s.begin(), expected_s.end()));
        CHECK(masks_of(all_cliques(g)).size() == oracle::cliques(g).size());
    }
}

TEST_CASE("split partitions")
{
    auto one = split_partitions(Graph(1));
    CHECK(one.size() == 2);
    CHECK(split_partitions(cycle_graph(5)).empty());
    CHECK(! find_split_partition(cycle_graph(5)));

    auto p3 = split_partitions(path_graph(3));
    CHECK(p3.size() == oracle::split_partitions(path_graph(3)).size());
}

TEST_CASE("split partitions agree with brute force")
{
    SplitMix64 rng(12);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = random_graph(rng, 8);
        auto got = split_partitions(g);
        auto expected = oracle::split_partitions(g);
        CHECK(got.size() == expected.size());
        CHECK(long(got.size()) <= 2L * g.size() + 2);
        for (auto & sp : got) {
            CHECK(g.is_clique(sp.clique_part));
            CHECK(g.is_stable(sp.stable_part));
            CHECK((sp.clique_part | sp.stable_part) == VertexSet::full(g.size()));
        }
        CHECK(find_split_partition(g).has_value() == ! expected.empty());
    }
}

TEST_CASE("split graphs from a clique and a stable set")
{
    SplitMix64 rng(13);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int n = 1 + int(rng.below(8));
        Graph g(n);
        vector<bool> in_clique(n);
        for (int v = 0 ; v < n ; ++v)
            in_clique[v] = rng.bernoulli(0.5);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if ((in_clique[u] && in_clique[v]) || ((in_clique[u] || in_clique[v]) && rng.bernoulli(0.5)))
                    g.add_edge(u, v);
        CHECK(find_split_partition(g));
        CHECK(! split_partitions(g).empty());
    }
}

TEST_CASE("contains_induced")
{
    CHECK(contains_induced(cycle_graph(5), path_graph(4)));
    CHECK(! contains_induced(complete_graph(4), empty_graph(2)));
    CHECK(contains_induced(net_graph(), complete_graph(3)));

    auto map = contains_induced(cycle_graph(5), path_graph(4));
    REQUIRE(map);
    for (int i = 0 ; i < 4 ; ++i)
        for (int j = i + 1 ; j < 4 ; ++j)
            CHECK(cycle_graph(5).adjacent((*map)[i], (*map)[j]) == path_graph(4).adjacent(i, j));
}

TEST_CASE("contains_induced agrees with brute force")
{
    SplitMix64 rng(14);
    vector<Graph> patterns{ path_graph(4), net_graph(), cycle_graph(4), complement(cycle_graph(4)), path_graph(5), complete_graph(3) };
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = random_graph(rng, 9);
        auto & pattern = patterns[trial % patterns.size()];
        CHECK(contains_induced(g, pattern).has_value() == oracle::contains_induced(g, pattern));
    }
}

TEST_CASE("biclique pairs")
{
    auto k6 = find_biclique_pair(complete_graph(6), 3);
    REQUIRE(k6);
    CHECK(k6->mode == BicliqueMode::adjacent);
    CHECK(complete_graph(6).completely_adjacent(k6->first, k6->second));

    auto e6 = find_biclique_pair(empty_graph(6), 3);
    REQUIRE(e6);
    CHECK(e6->mode == BicliqueMode::nonadjacent);

    CHECK(! find_biclique_pair(cycle_graph(5), 2));
}

TEST_CASE("biclique pairs agree with brute force")
{
    SplitMix64 rng(15);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = random_graph(rng, 8);
        int s = 1 + int(rng.below(3));
        auto got = find_biclique_pair(g, s);
        CHECK(got.has_value() == oracle::has_biclique_pair(g, s));
        if (got) {
            CHECK(! got->first.intersects(got->second));
            CHECK(got->first.count() >= s);
            CHECK(got->second.count() >= s);
            if (got->mode == BicliqueMode::adjacent)
                CHECK(g.completely_adjacent(got->first, got->second));
            else
                CHECK(g.completely_nonadjacent(got->first, got->second));
        }
    }
}

TEST_CASE("comparability graphs have no induced net")
{
    for (std::uint64_t seed = 1 ; seed <= 30 ; ++seed) {
        auto g = comparability_from_random_poset(9, 0.3, seed);
        CHECK(! oracle::contains_induced(g, net_graph()));
    }
}
