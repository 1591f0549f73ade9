#include <doctest.h>

#include "oracles.hh"

#include <css/csp.hh>
#include <css/formats.hh>
#include <css/graph.hh>
#include <css/packing.hh>
#include <css/pipelines.hh>
#include <css/rng.hh>
#include <css/separator.hh>

#include <cmath>
#include <vector>

using namespace css;

using std::vector;

namespace
{
    auto color_table(const EdgeColoring3 & inst) -> vector<vector<int>>
    {
        int n = inst.size();
        vector<vector<int>> t(n, vector<int>(n, -1));
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (u != v)
                    t[u][v] = inst.color(u, v);
        return t;
    }

    /// Every valid colouring (optionally with x coloured alpha) lies in some assignment.
    auto oracle_covers(const EdgeColoring3 & inst, const TwoListCovering & cov, int x = -1, int alpha = -1) -> bool
    {
        auto table = color_table(inst);
        bool ok = true;
        oracle::for_each_word(inst.size(), 3, [&] (const vector<int> & c) {
            if (! ok || ! oracle::ccp_valid(table, c) || (x >= 0 && c[x] != alpha))
                return;
            bool hit = false;
            for (auto & la : cov.assignments) {
                bool all = true;
                for (int v = 0 ; v < inst.size() ; ++v)
                    if (! ((la.lists[v] >> c[v]) & 1))
                        all = false;
                hit = hit || all;
            }
            ok = hit;
        });
        return ok;
    }

    auto oracle_covers_maximal(const StubbornInstance & inst, const TwoListCovering & cov) -> bool
    {
        bool ok = true;
        oracle::for_each_word(inst.graph.size(), 4, [&] (const vector<int> & p) {
            if (! ok || ! oracle::stubborn_valid(inst.graph, inst.lists.lists, p) || ! oracle::stubborn_maximal(inst.lists.lists, p))
                return;
            bool hit = false;
            for (auto & la : cov.assignments) {
                bool all = true;
                for (int v = 0 ; v < inst.graph.size() ; ++v)
                    if (! ((la.lists[v] >> p[v]) & 1))
                        all = false;
                hit = hit || all;
            }
            ok = hit;
        });
        return ok;
    }

    auto random_lists(SplitMix64 & rng, int n) -> ListAssignment
    {
        ListAssignment la;
        for (int v = 0 ; v < n ; ++v)
            la.lists.push_back(ColorMask(1 + rng.below(15)));
        return la;
    }

    auto random_two_lists(SplitMix64 & rng, int n) -> ListAssignment
    {
        static const ColorMask choices[] = { 1, 2, 4, 3, 5, 6 };
        ListAssignment la;
        for (int v = 0 ; v < n ; ++v)
            la.lists.push_back(choices[rng.below(6)]);
        return la;
    }

    auto full_separator(const Graph & g, std::uint64_t seed) -> CutFamily
    {
        auto built = build_random_separator(g, 0.5, seed, default_max_rounds(g.size()));
        return extend_to_full_separator(g, built.family);
    }
}

TEST_CASE("edge colourings")
{
    EdgeColoring3 inst(3);
    CHECK(inst.color(0, 2) == color_a);
    inst.set_color(0, 2, color_c);
    CHECK(inst.color(2, 0) == color_c);
    CHECK(inst.neighborhood(0, color_c) == VertexSet(3, { 2 }));
    CHECK(inst.neighborhood(0, color_a) == VertexSet(3, { 1 }));
    CHECK(inst.color_graph(color_c).edge_count() == 1);
    CHECK_THROWS_AS(inst.color(1, 1), CspError);
    CHECK_THROWS_AS(inst.set_color(0, 1, 3), CspError);

    CHECK(random_edge_coloring(6, 9) == random_edge_coloring(6, 9));
    auto d = derived_edge_coloring(path_graph(3));
    CHECK(d.color(0, 1) == color_a);
    CHECK(d.color(0, 2) == color_b);

    auto p = permute_colors(d, { color_c, color_b, color_a });
    CHECK(p.color(0, 1) == color_c);
    CHECK(mask_string(5, ccp_colors) == "AC");
    CHECK(mask_string(12, stubborn_colors) == "34");
}

TEST_CASE("3-CCP solutions")
{
    EdgeColoring3 two(2);
    CHECK(verify_3ccp_solution(two, { color_b, color_b }));
    CHECK(! verify_3ccp_solution(two, { color_a, color_a }));
    CHECK_THROWS_AS(verify_3ccp_solution(two, { 0 }), CspError);

    auto inst = parse_ccp(read_file(CSS_FIXTURES_DIR "/ccp_small.ccp"));
    auto sol = parse_coloring(read_file(CSS_FIXTURES_DIR "/ccp_small.coloring"));
    CHECK(inst.size() == 5);
    CHECK(verify_3ccp_solution(inst, sol.colors));
    CHECK(oracle::ccp_valid(color_table(inst), sol.colors));
}

TEST_CASE("3-CCP validity agrees with the colour-table oracle")
{
    SplitMix64 rng(51);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 1 + int(rng.below(5));
        auto inst = random_edge_coloring(n, rng.next());
        auto table = color_table(inst);
        oracle::for_each_word(n, 3, [&] (const vector<int> & c) {
            CHECK(verify_3ccp_solution(inst, c) == oracle::ccp_valid(table, c));
        });
    }
}

TEST_CASE("2-SAT")
{
    auto empty = solve_2sat(TwoSatInstance{ 3, {} });
    REQUIRE(empty);
    CHECK(*empty == vector<bool>{ false, false, false });

    TwoSatInstance contradiction{ 1, { Clause{ { 0, true }, { 0, true } }, Clause{ { 0, false }, { 0, false } } } };
    CHECK(! solve_2sat(contradiction));

    CHECK_THROWS_AS(solve_2sat(TwoSatInstance{ 1, { Clause{ { 0, true }, { 1, true } } } }), CspError);
}

TEST_CASE("2-SAT agrees with brute force")
{
    SplitMix64 rng(52);
    for (int trial = 0 ; trial < 500 ; ++trial) {
        int vars = 1 + int(rng.below(14));
        int m = int(rng.below(3 * vars + 1));
        TwoSatInstance ts{ vars, {} };
        vector<oracle::Clause2> plain;
        for (int i = 0 ; i < m ; ++i) {
            Clause c{ { int(rng.below(vars)), rng.bernoulli(0.5) }, { int(rng.below(vars)), rng.bernoulli(0.5) } };
            ts.clauses.push_back(c);
            plain.push_back({ c.a.var, c.b.var, c.a.positive, c.b.positive });
        }
        auto got = solve_2sat(ts);
        CHECK(got.has_value() == oracle::two_sat_satisfiable(vars, plain));
        if (got)
            CHECK(satisfies(ts, *got));
    }
}

TEST_CASE("2-list assignments to 2-SAT")
{
    auto count_models = [] (const TwoSatInstance & ts) {
        long count = 0;
        for (std::uint64_t x = 0 ; x < (std::uint64_t(1) << ts.variables) ; ++x) {
            vector<bool> a(ts.variables);
            for (int v = 0 ; v < ts.variables ; ++v)
                a[v] = (x >> v) & 1;
            if (satisfies(ts, a))
                ++count;
        }
        return count;
    };

    auto one = two_list_to_2sat(EdgeColoring3(1), ListAssignment{ { 3 } });
    CHECK(one.instance.variables == 2);
    CHECK(one.instance.clauses.size() == 2);
    CHECK(one.instance.clauses[0] == Clause{ { 0, true }, { 1, true } });
    CHECK(one.instance.clauses[1] == Clause{ { 0, false }, { 1, false } });
    CHECK(count_models(one.instance) == 2);

    auto two = two_list_to_2sat(EdgeColoring3(2), ListAssignment{ { 3, 3 } });
    CHECK(two.instance.clauses.size() == 5);
    CHECK(two.instance.clauses[4] == Clause{ { 0, false }, { 2, false } });
    CHECK(count_models(two.instance) == 3);

    auto bad = two_list_to_2sat(EdgeColoring3(2), ListAssignment{ { 1, 1 } });
    CHECK(! solve_2sat(bad.instance));

    CHECK_THROWS_AS(two_list_to_2sat(EdgeColoring3(1), ListAssignment{ { 7 } }), CspError);
    CHECK_THROWS_AS(two_list_to_2sat(EdgeColoring3(1), ListAssignment{ { 0 } }), CspError);
}

TEST_CASE("2-SAT models correspond to compatible solutions")
{
    SplitMix64 rng(53);
    for (int trial = 0 ; trial < 120 ; ++trial) {
        int n = 1 + int(rng.below(7));
        auto inst = random_edge_coloring(n, rng.next());
        auto la = random_two_lists(rng, n);
        auto enc = two_list_to_2sat(inst, la);
        auto table = color_table(inst);

        long compatible_solutions = 0;
        oracle::for_each_word(n, 3, [&] (const vector<int> & c) {
            bool fits = true;
            for (int v = 0 ; v < n ; ++v)
                fits = fits && ((la.lists[v] >> c[v]) & 1);
            if (fits && oracle::ccp_valid(table, c))
                ++compatible_solutions;
        });

        long models = 0;
        for (std::uint64_t x = 0 ; x < (std::uint64_t(1) << enc.instance.variables) ; ++x) {
            vector<bool> a(enc.instance.variables);
            for (int v = 0 ; v < enc.instance.variables ; ++v)
                a[v] = (x >> v) & 1;
            if (satisfies(enc.instance, a)) {
                ++models;
                auto c = enc.decode(a);
                CHECK(verify_3ccp_solution(inst, c));
                CHECK(compatible(la, c));
            }
        }
        CHECK(models == compatible_solutions);

        auto solved = solve_2sat(enc.instance);
        CHECK(solved.has_value() == (compatible_solutions > 0));
    }
}

TEST_CASE("covering checks and pruning")
{
    TwoListCovering ok{ 2, ccp_colors, { ListAssignment{ { 3, 6 } } } };
    CHECK(check_two_list_covering(ok).ok);
    TwoListCovering wide{ 2, ccp_colors, { ListAssignment{ { 7, 6 } } } };
    CHECK(check_two_list_covering(wide).kind == "bad-list");
    TwoListCovering short_list{ 2, ccp_colors, { ListAssignment{ { 3 } } } };
    CHECK(check_two_list_covering(short_list).kind == "size-mismatch");

    TwoListCovering redundant{ 2, ccp_colors, { ListAssignment{ { 1, 2 } }, ListAssignment{ { 3, 6 } }, ListAssignment{ { 3, 6 } } } };
    auto pruned = prune_covering(redundant);
    REQUIRE(pruned.assignments.size() == 1);
    CHECK(pruned.assignments[0] == ListAssignment{ { 3, 6 } });

    CHECK(compatible(ListAssignment{ { 3, 6 } }, { 1, 2 }));
    CHECK(! compatible(ListAssignment{ { 3, 6 } }, { 2, 2 }));
}

TEST_CASE("quasi-polynomial covering on tiny instances")
{
    auto one = build_quasipoly_covering(EdgeColoring3(1));
    CHECK(one.covering.assignments.size() <= 2);
    CHECK(verify_ccp_covering(EdgeColoring3(1), one.covering).ok);
    CHECK(oracle_covers(EdgeColoring3(1), one.covering));

    for (std::uint64_t seed = 1 ; seed <= 5 ; ++seed) {
        auto inst = random_edge_coloring(2, seed);
        auto q = build_quasipoly_covering(inst);
        CHECK(oracle_covers(inst, q.covering));
    }

    CHECK_THROWS_AS(build_quasipoly_covering(EdgeColoring3(0)), CspError);
    CHECK(quasipoly_height_bound(1) == 1);
    CHECK(quasipoly_height_bound(8) == 6 + 1);
}

TEST_CASE("quasi-polynomial covering on random instances")
{
    SplitMix64 rng(54);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        int n = 1 + int(rng.below(8));
        auto inst = random_edge_coloring(n, rng.next());
        auto q = build_quasipoly_covering(inst);
        CHECK(check_two_list_covering(q.covering).ok);
        CHECK(verify_ccp_covering(inst, q.covering).ok);
        CHECK(oracle_covers(inst, q.covering));
        CHECK(q.height <= quasipoly_height_bound(n));
        CHECK(double(q.leaves) <= std::pow(double(n + 1), q.height));
        for (auto & step : q.steps)
            CHECK(step.removed * 3 >= step.remaining);
    }
}

TEST_CASE("majority colour")
{
    EdgeColoring3 inst(4);
    inst.set_color(0, 1, color_b);
    inst.set_color(0, 2, color_b);
    CHECK(majority_color(inst, 0, VertexSet::full(4)) == color_b);
    CHECK(majority_color(inst, 0, VertexSet(4, { 0, 1, 3 })) == color_a);
    CHECK(majority_color(inst, 3, VertexSet(4, { 3 })) == color_a);
}

TEST_CASE("really 3-colourable")
{
    CHECK(really_3colorable(EdgeColoring3(3), 0, color_c).ok);

    // x = 0 joined by A-edges to a B/C clique whose B-edges form a five-cycle
    EdgeColoring3 c5(6);
    for (int i = 0 ; i < 5 ; ++i)
        for (int j = i + 1 ; j < 5 ; ++j) {
            bool cycle = j == i + 1 || (i == 0 && j == 4);
            c5.set_color(1 + i, 1 + j, cycle ? color_b : color_c);
        }
    auto r = really_3colorable(c5, 0, color_a);
    CHECK(! r.ok);
    CHECK(r.witness == VertexSet(6, { 1, 2, 3, 4, 5 }));
    CHECK(! oracle::is_split(induced(c5.color_graph(color_b), r.witness).graph));

    bool any = false;
    oracle::for_each_word(6, 3, [&] (const vector<int> & c) {
        any = any || (c[0] == color_a && verify_3ccp_solution(c5, c));
    });
    CHECK(! any);
}

TEST_CASE("really 3-colourable is sound")
{
    SplitMix64 rng(55);
    int refuted = 0;
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = 2 + int(rng.below(6));
        auto inst = random_edge_coloring(n, rng.next());
        auto table = color_table(inst);
        for (int x = 0 ; x < n ; ++x)
            for (int alpha = 0 ; alpha < 3 ; ++alpha) {
                if (really_3colorable(inst, x, alpha).ok)
                    continue;
                ++refuted;
                bool any = false;
                oracle::for_each_word(n, 3, [&] (const vector<int> & c) {
                    any = any || (c[x] == alpha && oracle::ccp_valid(table, c));
                });
                CHECK(! any);
            }
    }
    CHECK(refuted > 0);
}

TEST_CASE("stubborn solutions")
{
    auto inst = trivial_stubborn_instance(path_graph(3));
    auto all3 = verify_stubborn_solution(inst, { 2, 2, 2 });
    CHECK(all3.valid);
    CHECK(all3.maximal);

    auto edge_in_a2 = verify_stubborn_solution(inst, { 1, 1, 2 });
    CHECK(! edge_in_a2.valid);

    auto in_a1 = verify_stubborn_solution(trivial_stubborn_instance(empty_graph(2)), { 0, 2 });
    CHECK(in_a1.valid);
    CHECK(! in_a1.maximal);

    CHECK_THROWS_AS(verify_stubborn_solution(inst, { 0, 0 }), CspError);
    CHECK_THROWS_AS(verify_stubborn_solution(inst, { 0, 0, 4 }), CspError);

    SplitMix64 rng(56);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 1 + int(rng.below(5));
        StubbornInstance s{ gen_gnp(n, 0.5, rng.next()), random_lists(rng, n) };
        oracle::for_each_word(n, 4, [&] (const vector<int> & p) {
            auto check = verify_stubborn_solution(s, p);
            bool valid = oracle::stubborn_valid(s.graph, s.lists.lists, p);
            CHECK(check.valid == valid);
            CHECK(check.maximal == (valid && oracle::stubborn_maximal(s.lists.lists, p)));
        });
    }
}

TEST_CASE("covering verifiers agree with the oracles, serial and parallel")
{
    SplitMix64 rng(57);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        int n = 1 + int(rng.below(6));
        auto inst = random_edge_coloring(n, rng.next());
        TwoListCovering cov{ n, ccp_colors, {} };
        for (int i = 0, m = int(rng.below(12)) ; i < m ; ++i)
            cov.assignments.push_back(random_two_lists(rng, n));
        auto par = verify_ccp_covering(inst, cov);
        auto ser = verify_ccp_covering_serial(inst, cov);
        CHECK(par.ok == ser.ok);
        CHECK(par.detail == ser.detail);
        CHECK(par.ok == oracle_covers(inst, cov));

        StubbornInstance s{ gen_gnp(n, 0.5, rng.next()), random_lists(rng, n) };
        TwoListCovering scov{ n, stubborn_colors, {} };
        for (int i = 0, m = int(rng.below(12)) ; i < m ; ++i) {
            ListAssignment la;
            for (int v = 0 ; v < n ; ++v) {
                int a = int(rng.below(4)), b = int(rng.below(4));
                la.lists.push_back(bit(a) | bit(b));
            }
            scov.assignments.push_back(la);
        }
        auto spar = verify_stubborn_covering(s, scov);
        auto sser = verify_stubborn_covering_serial(s, scov);
        CHECK(spar.ok == sser.ok);
        CHECK(spar.detail == sser.detail);
        CHECK(spar.ok == oracle_covers_maximal(s, scov));
    }
}

TEST_CASE("combination table")
{
    constexpr ColorMask a1 = 1, a2 = 2, a3 = 4, a4 = 8;
    constexpr ColorMask a = 1, b = 2, c = 4;
    CHECK(combine_rule(a2, a3) == c);
    CHECK(combine_rule(a1 | a2, a4) == c);
    CHECK(combine_rule(a3, a2) == (b | c));
    CHECK(combine_rule(a4, a2) == a);
    CHECK(combine_rule(a2 | a4, a3) == (a | c));
    CHECK(combine_rule(a2 | a3, a3) == (b | c));
    CHECK(combine_rule(a3 | a4, a2 | a3) == (a | b));
    CHECK(combine_rule(a3 | a4, a2) == b);
    CHECK(combine_rule(a3 | a4, a4) == c);
    CHECK(! combine_rule(a1, a2));
    CHECK(! combine_rule(a3 | a4, a1));
    CHECK_THROWS_AS(combine_rule(7, a2), CspError);
}

TEST_CASE("stubborn coverings to a 3-CCP covering at one vertex")
{
    SplitMix64 rng(58);
    int exercised = 0;
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 2 + int(rng.below(6));
        auto inst = random_edge_coloring(n, rng.next());
        int x = int(rng.below(n));
        if (! really_3colorable(inst, x, color_b).ok || ! really_3colorable(inst, x, color_c).ok)
            continue;
        auto oracle_fn = separator_stubborn_oracle(rng.next());
        auto d = derived_stubborn(inst, x);
        DerivedCoverings covs{ oracle_fn(d.h_c), oracle_fn(d.h_c_prime), oracle_fn(d.h_b), oracle_fn(d.h_b_prime) };
        auto cov = stubborn_to_3ccp_covering(inst, x, covs);
        CHECK(verify_ccp_covering(inst, cov, VertexColor{ x, color_a }).ok);
        CHECK(oracle_covers(inst, cov, x, color_a));
        for (auto & la : cov.assignments)
            CHECK(la.lists[x] == bit(color_a));
        ++exercised;
    }
    CHECK(exercised > 10);

    auto inst = random_edge_coloring(4, 3);
    DerivedCoverings wrong{ TwoListCovering{ 9, stubborn_colors, {} }, {}, {}, {} };
    if (really_3colorable(inst, 0, color_a).ok && really_3colorable(inst, 0, color_b).ok
            && really_3colorable(inst, 0, color_c).ok)
        CHECK_THROWS_AS(stubborn_to_3ccp_covering(inst, 0, wrong), CspError);
}

TEST_CASE("3-CCP covering from stubborn coverings")
{
    SplitMix64 rng(59);
    for (int trial = 0 ; trial < 25 ; ++trial) {
        int n = 1 + int(rng.below(6));
        auto inst = random_edge_coloring(n, rng.next());
        auto cov = ccp_covering_from_stubborn(inst, separator_stubborn_oracle(rng.next()));
        CHECK(check_two_list_covering(cov).ok);
        CHECK(verify_ccp_covering(inst, cov).ok);
        CHECK(oracle_covers(inst, cov));
    }
}

TEST_CASE("3-CCP covering to separator")
{
    for (int n = 1 ; n <= 5 ; ++n) {
        auto g = empty_graph(n);
        auto q = build_quasipoly_covering(derived_edge_coloring(g));
        auto f = ccp_covering_to_separator(g, q.covering);
        CHECK(verify_cs_separator(g, f).ok);
    }

    auto k3 = complete_graph(3);
    auto f3 = ccp_covering_to_separator(k3, build_quasipoly_covering(derived_edge_coloring(k3)).covering);
    CHECK(verify_cs_separator(k3, f3).ok);
    CHECK(oracle::separates_maximal_pairs(k3, f3));

    SplitMix64 rng(60);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        int n = 1 + int(rng.below(7));
        auto g = gen_gnp(n, rng.uniform(), rng.next());
        auto q = build_quasipoly_covering(derived_edge_coloring(g));
        auto f = ccp_covering_to_separator(g, q.covering);
        CHECK(verify_cs_separator(g, f).ok);
        CHECK(oracle::separates_maximal_pairs(g, f));
        CHECK(oracle::separates_all_pairs(g, f));
    }

    TwoListCovering bad{ 2, ccp_colors, { ListAssignment{ { 7, 3 } } } };
    CHECK_THROWS_AS(ccp_covering_to_separator(Graph(2), bad), CspError);
}

TEST_CASE("squared cut families")
{
    CutFamily one(4);
    one.add(VertexSet(4, { 1, 2 }));
    CHECK(square_cut_family(one) == one);

    // (K, S) by {0, 1, 2} and (K, S') by {0, 1, 3}: the square separates K from S + S'
    CutFamily two(5);
    two.add(VertexSet(5, { 0, 1, 2 }));
    two.add(VertexSet(5, { 0, 1, 3 }));
    auto sq = square_cut_family(two);
    CHECK(sq.size() <= 4);
    bool found = false;
    for (auto & c : sq.cuts())
        found = found || separates(c, VertexSet(5, { 0, 1 }), VertexSet(5, { 2, 3, 4 }));
    CHECK(found);

    SplitMix64 rng(61);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        int n = 1 + int(rng.below(7));
        auto g = gen_gnp(n, rng.uniform(), rng.next());
        auto f = full_separator(g, rng.next());
        auto s = square_cut_family(f);
        CHECK(long(s.size()) <= long(f.size()) * f.size());
        CHECK(verify_union_separation(g, s).ok);

        auto cuts = oracle::cut_masks(s);
        for (auto k : oracle::cliques(g))
            for (auto s1 : oracle::stables(g))
                for (auto s2 : oracle::stables(g))
                    if (((s1 | s2) & k) == 0)
                        CHECK(oracle::separated(cuts, k, s1 | s2));
    }

    auto c5 = cycle_graph(5);
    CHECK(! verify_union_separation(c5, full_separator(c5, 1)).ok);
}

TEST_CASE("separator to stubborn covering")
{
    StubbornInstance single{ Graph(1), ListAssignment{ { 12 } } };
    CutFamily all_in(1);
    all_in.add(VertexSet(1, { 0 }));
    auto cov = separator_to_stubborn_covering(single, all_in);
    REQUIRE(cov.assignments.size() == 1);
    CHECK(cov.assignments[0].lists[0] == 12);

    StubbornInstance mixed{ Graph(3), ListAssignment{ { 15, 4, 3 } } };
    CutFamily cut(3);
    cut.add(VertexSet(3, { 0 }));
    auto m = separator_to_stubborn_covering(mixed, cut);
    CHECK(m.assignments[0].lists == vector<ColorMask>{ 12, 6, 3 });

    SplitMix64 rng(62);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 1 + int(rng.below(6));
        StubbornInstance s{ gen_gnp(n, rng.uniform(), rng.next()), random_lists(rng, n) };
        auto f2 = square_cut_family(full_separator(s.graph, rng.next()));
        auto c = separator_to_stubborn_covering(s, f2);
        CHECK(c.assignments.size() == std::size_t(f2.size()));
        CHECK(verify_stubborn_covering(s, c).ok);
        CHECK(oracle_covers_maximal(s, c));
    }
}

TEST_CASE("equivalence loop")
{
    SplitMix64 rng(63);
    for (int trial = 0 ; trial < 15 ; ++trial) {
        int n = 1 + int(rng.below(6));
        StubbornInstance s{ gen_gnp(n, rng.uniform(), rng.next()), random_lists(rng, n) };
        auto loop = theorem16_loop(s, rng.next());
        CHECK(loop.ok());
        CHECK(loop.stages.size() == 5);
        for (auto & stage : loop.stages)
            CHECK_MESSAGE(stage.verdict.ok, stage.name << ": " << stage.verdict.kind << " " << stage.verdict.detail);
    }
}
