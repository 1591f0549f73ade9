#include <doctest.h>

#include "oracles.hh"

#include <css/graph.hh>
#include <css/packing.hh>
#include <css/rng.hh>
#include <css/separator.hh>

#include <cmath>
#include <vector>

using namespace css;

using std::vector;

namespace
{
    /// x1 x2 x3 = 0 1 2 and y1 y2 y3 = 3 4 5.
    auto two_packing_graph() -> Graph
    {
        Graph g(6);
        for (auto [u, v] : vector<std::pair<int, int>>{ { 0, 3 }, { 0, 4 }, { 1, 3 }, { 1, 4 }, { 1, 5 }, { 2, 4 }, { 2, 5 } })
            g.add_edge(u, v);
        return g;
    }

    auto two_packing_certificate() -> PackingCertificate
    {
        return PackingCertificate{ two_packing_graph(), {
            OrientedBiclique{ VertexSet(6, { 0, 1 }), VertexSet(6, { 3, 4 }) },
            OrientedBiclique{ VertexSet(6, { 4, 5 }), VertexSet(6, { 1, 2 }) } } };
    }

    /// k random bicliques and the graph of their edges, rejected until no edge is covered more than t times.
    auto random_covering(SplitMix64 & rng, int n, int k, int t) -> BicliqueCovering
    {
        while (true) {
            BicliqueCovering cov{ Graph(n), {}, t };
            for (int i = 0 ; i < k ; ++i) {
                Biclique b{ VertexSet(n), VertexSet(n) };
                for (int v = 0 ; v < n ; ++v) {
                    auto r = rng.below(3);
                    if (r == 0)
                        b.left.insert(v);
                    else if (r == 1)
                        b.right.insert(v);
                }
                for (int u = b.left.first() ; u != VertexSet::npos ; u = b.left.next(u))
                    for (int v = b.right.first() ; v != VertexSet::npos ; v = b.right.next(v))
                        cov.host.add_edge(u, v);
                cov.bicliques.push_back(b);
            }
            if (verify_covering(cov))
                return cov;
        }
    }

    auto random_fooling_graph(SplitMix64 & rng, int max_n) -> Graph
    {
        int n = int(rng.below(max_n + 1));
        return gen_gnp(n, rng.uniform(), rng.next());
    }
}

TEST_CASE("verify_packing")
{
    auto cert = two_packing_certificate();
    CHECK(verify_packing(cert).ok);
    CHECK(verify_packing(PackingCertificate{ empty_graph(4), {} }).ok);

    PackingCertificate twice{ complete_graph(2), {
        OrientedBiclique{ VertexSet(2, { 0 }), VertexSet(2, { 1 }) },
        OrientedBiclique{ VertexSet(2, { 0 }), VertexSet(2, { 1 }) } } };
    auto v = verify_packing(twice);
    CHECK(! v.ok);
    CHECK(v.kind == "doubly-covered-arc");

    PackingCertificate missing{ complete_graph(3), { OrientedBiclique{ VertexSet(3, { 0 }), VertexSet(3, { 1 }) } } };
    CHECK(verify_packing(missing).kind == "uncovered-edge");

    PackingCertificate incomplete{ path_graph(3), { OrientedBiclique{ VertexSet(3, { 0 }), VertexSet(3, { 1, 2 }) } } };
    CHECK(verify_packing(incomplete).kind == "incomplete-biclique");
}

TEST_CASE("bipartite packing gap")
{
    CHECK(min_bp_bruteforce(two_packing_graph(), 6).value == 3);
    CHECK(oracle::min_biclique_partition(two_packing_graph(), 6) == 3);
    CHECK(min_bp_or_bruteforce(two_packing_graph(), 6).value == 2);
    CHECK(! oracle::single_oriented_biclique_covers(two_packing_graph()));
}

TEST_CASE("fooling sets")
{
    FoolingSet vacuous{ Graph(0), { CliqueStablePair{ VertexSet(0), VertexSet(0) } } };
    CHECK(verify_fooling_set(vacuous).ok);

    FoolingSet k1{ Graph(1), { CliqueStablePair{ VertexSet(1, { 0 }), VertexSet(1) }, CliqueStablePair{ VertexSet(1), VertexSet(1, { 0 }) } } };
    CHECK(verify_fooling_set(k1).ok);

    FoolingSet same{ Graph(2), { CliqueStablePair{ VertexSet(2, { 0 }), VertexSet(2, { 1 }) }, CliqueStablePair{ VertexSet(2, { 0 }), VertexSet(2, { 1 }) } } };
    CHECK(! verify_fooling_set(same).ok);

    CHECK(build_fooling_set(Graph(1)).pairs.size() == 2);
    CHECK(build_fooling_set(complete_graph(3)).pairs.size() == 4);
    CHECK(build_fooling_set(cycle_graph(5)).pairs.size() == 6);
    CHECK(verify_fooling_set(build_fooling_set(cycle_graph(5))).ok);
}

TEST_CASE("fooling sets have size n + 1 and survive the round trip")
{
    SplitMix64 rng(41);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = random_fooling_graph(rng, 8);
        auto fs = build_fooling_set(g);
        CHECK(int(fs.pairs.size()) == g.size() + 1);
        CHECK(verify_fooling_set(fs).ok);

        auto packing = fooling_to_packing(fs);
        CHECK(packing.host == complete_graph(g.size() + 1));
        CHECK(int(packing.bicliques.size()) <= g.size());
        CHECK(verify_packing(packing).ok);

        auto back = packing_to_fooling(packing);
        CHECK(back.pairs.size() == fs.pairs.size());
        CHECK(back.host.size() == int(packing.bicliques.size()));
        CHECK(verify_fooling_set(back).ok);
    }
}

TEST_CASE("fooling to packing on the smallest case")
{
    auto fs = build_fooling_set(Graph(1));
    auto p = fooling_to_packing(fs);
    CHECK(p.host == complete_graph(2));
    REQUIRE(p.bicliques.size() == 1);
    CHECK(p.bicliques[0].a_side.count() == 1);
    CHECK(p.bicliques[0].b_side.count() == 1);

    auto back = packing_to_fooling(p);
    CHECK(back.host.size() == 1);
    CHECK(back.pairs.size() == 2);

    auto k5 = packing_to_fooling(star_partition(5));
    CHECK(k5.host.size() == 4);
    CHECK(k5.pairs.size() == 5);
    CHECK(verify_fooling_set(k5).ok);

    CHECK_THROWS_AS(packing_to_fooling(two_packing_certificate()), PackingError);
}

TEST_CASE("star partitions and Graham-Pollak")
{
    CHECK(star_partition(1).bicliques.empty());
    auto two = star_partition(2);
    REQUIRE(two.bicliques.size() == 1);
    CHECK(two.bicliques[0] == OrientedBiclique{ VertexSet(2, { 0 }), VertexSet(2, { 1 }) });

    for (int n = 1 ; n <= 8 ; ++n) {
        auto s = star_partition(n);
        CHECK(int(s.bicliques.size()) == n - 1);
        CHECK(verify_packing(s).ok);
        vector<Biclique> parts;
        for (auto & b : s.bicliques)
            parts.push_back(Biclique{ b.a_side, b.b_side });
        CHECK(verify_partition(complete_graph(n), parts).ok);
    }

    for (int n = 2 ; n <= 5 ; ++n) {
        CHECK(min_bp_bruteforce(complete_graph(n), 6).value == n - 1);
        CHECK(oracle::min_biclique_partition(complete_graph(n), 6) == n - 1);
    }
    CHECK(min_bp_bruteforce(empty_graph(4), 3).value == 0);
    auto capped = min_bp_bruteforce(complete_graph(5), 2);
    CHECK(capped.exceeded);
    CHECK(capped.value == 3);
}

TEST_CASE("biclique partition numbers agree with edge-partition enumeration")
{
    SplitMix64 rng(42);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 2 + int(rng.below(4));
        auto g = gen_gnp(n, 0.6, rng.next());
        CHECK(min_bp_bruteforce(g, 8).value == oracle::min_biclique_partition(g, 8));
    }
}

TEST_CASE("covering chain")
{
    SplitMix64 rng(43);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = random_fooling_graph(rng, 7);
        auto packing = fooling_to_packing(build_fooling_set(g));
        auto two = packing_to_covering(packing);
        CHECK(two.t == 2);
        CHECK(two.bicliques.size() == packing.bicliques.size());
        CHECK(verify_covering(two).ok);
        for (int t = 2 ; t <= 4 ; ++t)
            CHECK(verify_covering(relax_covering(two, t)).ok);
    }

    auto star = star_partition(5);
    BicliqueCovering one{ star.host, {}, 1 };
    for (auto & b : star.bicliques)
        one.bicliques.push_back(Biclique{ b.a_side, b.b_side });
    CHECK(verify_covering(one).ok);
    CHECK_THROWS_AS(relax_covering(relax_covering(one, 3), 2), PackingError);
}

TEST_CASE("brute-force t-coverings are monotone in t")
{
    for (int n = 2 ; n <= 5 ; ++n) {
        auto g = complete_graph(n);
        int bp1 = min_bp_t_bruteforce(g, 1, 6).value;
        int bp2 = min_bp_t_bruteforce(g, 2, 6).value;
        int bp3 = min_bp_t_bruteforce(g, 3, 6).value;
        int bp_or = min_bp_or_bruteforce(g, 6).value;
        CHECK(bp1 == n - 1);
        CHECK(bp3 <= bp2);
        CHECK(bp2 <= bp_or);
        CHECK(bp_or <= bp1);
    }
}

TEST_CASE("Alon bounds")
{
    auto b = alon_bounds(2, 16);
    CHECK(b.lower == doctest::Approx(std::sqrt(2.0 / 4.0) * 4.0));
    CHECK(b.upper == doctest::Approx(2 * 4.0));
    CHECK_THROWS_AS(alon_bounds(0, 3), PackingError);
}

TEST_CASE("separator to coloring")
{
    CutFamily trivial(0);
    trivial.add(VertexSet(0));
    auto edgeless = separator_to_coloring(empty_graph(4), PackingCertificate{ empty_graph(4), {} }, trivial);
    CHECK(edgeless.distinct() == 1);
    CHECK(is_proper(empty_graph(4), edgeless));

    auto star = star_partition(4);
    auto aux = biclique_auxiliary_graph(star);
    auto f = extend_to_full_separator(aux, CutFamily(aux.size()));
    auto c = separator_to_coloring(complete_graph(4), star, f);
    CHECK(is_proper(complete_graph(4), c));
    CHECK(c.distinct() == 4);
    CHECK(c.distinct() <= f.size());

    CHECK_THROWS_AS(separator_to_coloring(complete_graph(4), star, CutFamily(aux.size())), PackingError);
}

TEST_CASE("separator to coloring on random packings")
{
    SplitMix64 rng(44);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = random_fooling_graph(rng, 8);
        auto packing = fooling_to_packing(build_fooling_set(g));
        auto aux = biclique_auxiliary_graph(packing);
        CutFamily trivial(0);
        trivial.add(VertexSet(0));
        auto f = aux.size() == 0 ? trivial : extend_to_full_separator(aux, build_random_separator(aux, 0.5, rng.next(), default_max_rounds(aux.size())).family);
        auto c = separator_to_coloring(packing.host, packing, f);
        CHECK(is_proper(packing.host, c));
        CHECK(c.distinct() <= f.size());
    }
}

TEST_CASE("pairs packing")
{
    auto one = pairs_packing(Graph(1));
    CHECK(one.pairs.size() == 3);
    CHECK(one.certificate.bicliques.size() <= 1);
    CHECK(verify_packing(one.certificate).ok);

    auto two = pairs_packing(empty_graph(2));
    CHECK(verify_packing(two.certificate).ok);

    CHECK_THROWS_AS(pairs_packing(Graph(pairs_packing_limit + 1)), PackingError);

    SplitMix64 rng(45);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = random_fooling_graph(rng, 5);
        auto pp = pairs_packing(g);
        CHECK(int(pp.certificate.bicliques.size()) <= g.size());
        CHECK(verify_packing(pp.certificate).ok);

        long expected = 0;
        for (auto k : oracle::cliques(g))
            for (auto s : oracle::stables(g))
                if ((k & s) == 0)
                    ++expected;
        CHECK(long(pp.pairs.size()) == expected);

        auto c = greedy_coloring(pp.auxiliary);
        auto f = coloring_to_separator(g, pp, c);
        CHECK(f.size() <= c.distinct());
        CHECK(oracle::separates_all_pairs(g, f));
        CHECK(verify_cs_separator(g, f).ok);
    }
}

TEST_CASE("refinement of t-coverings")
{
    auto star = star_partition(4);
    BicliqueCovering one{ star.host, {}, 1 };
    for (auto & b : star.bicliques)
        one.bicliques.push_back(Biclique{ b.a_side, b.b_side });
    auto r1 = refine_t_covering(one);
    CHECK(r1.exact == complete_graph(4));
    CHECK(verify_partition(r1.exact, r1.classes).ok);
    CHECK(r1.classes.size() == 3);

    BicliqueCovering k3{ complete_graph(3), {
        Biclique{ VertexSet(3, { 0 }), VertexSet(3, { 1 }) },
        Biclique{ VertexSet(3, { 1 }), VertexSet(3, { 2 }) },
        Biclique{ VertexSet(3, { 0 }), VertexSet(3, { 2 }) },
        Biclique{ VertexSet(3, { 1 }), VertexSet(3, { 0 }) } }, 2 };
    auto r2 = refine_t_covering(k3);
    CHECK(r2.exact.edge_count() == 1);
    CHECK(r2.exact.adjacent(0, 1));
    CHECK(r2.classes.size() == 1);
    CHECK(r2.labels[0].bicliques == vector<int>{ 0, 3 });

    CHECK(label_count_bound(5, 2) == 20);
    CHECK(label_count_bound(3, 1) == 3);
}

TEST_CASE("refinement on random 2-coverings")
{
    SplitMix64 rng(46);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int n = 2 + int(rng.below(7));
        int k = 1 + int(rng.below(5));
        auto cov = random_covering(rng, n, k, 2);
        auto r = refine_t_covering(cov);
        CHECK(double(r.classes.size()) <= std::pow(2.0 * k, 2));
        CHECK(verify_partition(r.exact, r.classes).ok);
        CHECK(r.labels.size() == r.classes.size());
        for (std::size_t i = 0 ; i < r.labels.size() ; ++i)
            for (std::size_t j = i + 1 ; j < r.labels.size() ; ++j)
                CHECK(! (r.labels[i] == r.labels[j]));
    }
}

TEST_CASE("composed colourings")
{
    auto star = star_partition(4);
    BicliqueCovering one{ star.host, {}, 1 };
    for (auto & b : star.bicliques)
        one.bicliques.push_back(Biclique{ b.a_side, b.b_side });
    auto c = compose_coloring(one, greedy_base_colorer());
    CHECK(is_proper(complete_graph(4), c));
    CHECK(c.distinct() == 4);
    CHECK(c.colors == greedy_coloring(complete_graph(4)).colors);

    SplitMix64 rng(47);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto cov = random_covering(rng, 2 + int(rng.below(7)), 1 + int(rng.below(5)), 2);
        auto cc = compose_coloring(cov, greedy_base_colorer());
        CHECK(is_proper(cov.host, cc));
    }

    BaseColorer broken = [] (const Graph & g, const vector<Biclique> &) { return Coloring{ vector<int>(g.size(), 0), 1 }; };
    CHECK_THROWS(compose_coloring(one, broken));
}

TEST_CASE("packing matrix rank")
{
    CHECK(packing_matrix_rank(star_partition(4)) >= 1);
    CHECK(packing_matrix_rank(PackingCertificate{ empty_graph(3), {} }) == 0);
}
