#include <css/packing.hh>
#include <css/simplex.hh>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

using namespace css;

using std::function;
using std::logic_error;
using std::map;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

auto Coloring::distinct() const -> int
{
    return int(std::set<int>(colors.begin(), colors.end()).size());
}

auto css::is_proper(const Graph & g, const Coloring & c) -> bool
{
    if (int(c.colors.size()) != g.size())
        return false;
    for (int v = 0 ; v < g.size() ; ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.palette)
            return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

auto css::greedy_coloring(const Graph & g) -> Coloring
{
    Coloring result{ vector<int>(g.size(), -1), 0 };
    for (int v = 0 ; v < g.size() ; ++v) {
        vector<bool> used(g.size() + 1, false);
        const auto & nv = g.neighborhood(v);
        for (int u = nv.first() ; u != VertexSet::npos ; u = nv.next(u))
            if (result.colors[u] >= 0)
                used[result.colors[u]] = true;
        int c = 0;
        while (used[c])
            ++c;
        result.colors[v] = c;
        result.palette = std::max(result.palette, c + 1);
    }
    return result;
}

namespace
{
    auto biclique_complete(const Graph & g, const VertexSet & a, const VertexSet & b, string & detail) -> bool
    {
        if (a.host_size() != g.size() || b.host_size() != g.size()) {
            detail = "sides over a host of the wrong size";
            return false;
        }
        if (a.intersects(b)) {
            detail = "sides share " + (a & b).to_string();
            return false;
        }
        for (int x = a.first() ; x != VertexSet::npos ; x = a.next(x))
            for (int y = b.first() ; y != VertexSet::npos ; y = b.next(y))
                if (! g.adjacent(x, y)) {
                    detail = "missing edge " + to_string(x) + " " + to_string(y);
                    return false;
                }
        return true;
    }
}

auto css::verify_packing(const PackingCertificate & cert) -> Verdict
{
    const Graph & g = cert.host;
    for (std::size_t i = 0 ; i < cert.bicliques.size() ; ++i) {
        string detail;
        if (! biclique_complete(g, cert.bicliques[i].a_side, cert.bicliques[i].b_side, detail))
            return Verdict::fail("incomplete-biclique", "biclique " + to_string(i) + ": " + detail);
    }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (auto & b : cert.bicliques)
            if ((b.a_side.contains(u) && b.b_side.contains(v)) || (b.a_side.contains(v) && b.b_side.contains(u))) {
                covered = true;
                break;
            }
        if (! covered)
            return Verdict::fail("uncovered-edge", "edge " + to_string(u) + " " + to_string(v));
    }

    for (int x = 0 ; x < g.size() ; ++x)
        for (int y = 0 ; y < g.size() ; ++y) {
            int first = -1;
            for (std::size_t i = 0 ; i < cert.bicliques.size() ; ++i)
                if (cert.bicliques[i].a_side.contains(x) && cert.bicliques[i].b_side.contains(y)) {
                    if (first >= 0)
                        return Verdict::fail("doubly-covered-arc", "arc " + to_string(x) + " -> " + to_string(y)
                                + " in bicliques " + to_string(first) + " and " + to_string(i));
                    first = int(i);
                }
        }
    return Verdict::pass();
}

auto css::verify_covering(const BicliqueCovering & cov) -> Verdict
{
    if (cov.t < 1)
        return Verdict::fail("bad-multiplicity", "t = " + to_string(cov.t));
    const Graph & g = cov.host;
    for (std::size_t i = 0 ; i < cov.bicliques.size() ; ++i) {
        string detail;
        if (! biclique_complete(g, cov.bicliques[i].left, cov.bicliques[i].right, detail))
            return Verdict::fail("incomplete-biclique", "biclique " + to_string(i) + ": " + detail);
    }
    for (auto [u, v] : g.edges()) {
        int count = 0;
        for (auto & b : cov.bicliques)
            if ((b.left.contains(u) && b.right.contains(v)) || (b.left.contains(v) && b.right.contains(u)))
                ++count;
        if (count == 0)
            return Verdict::fail("uncovered-edge", "edge " + to_string(u) + " " + to_string(v));
        if (count > cov.t)
            return Verdict::fail("overcovered-edge", "edge " + to_string(u) + " " + to_string(v) + " covered "
                    + to_string(count) + " times, more than " + to_string(cov.t));
    }
    return Verdict::pass();
}

auto css::verify_fooling_set(const FoolingSet & fs) -> Verdict
{
    const Graph & g = fs.host;
    for (std::size_t i = 0 ; i < fs.pairs.size() ; ++i) {
        auto & p = fs.pairs[i];
        if (p.clique.host_size() != g.size() || p.stable.host_size() != g.size())
            return Verdict::fail("bad-pair", "pair " + to_string(i) + " over a host of the wrong size");
        if (p.clique.intersects(p.stable))
            return Verdict::fail("bad-pair", "pair " + to_string(i) + " is not disjoint");
        if (! g.is_clique(p.clique))
            return Verdict::fail("bad-pair", "pair " + to_string(i) + ": " + p.clique.to_string() + " is not a clique");
        if (! g.is_stable(p.stable))
            return Verdict::fail("bad-pair", "pair " + to_string(i) + ": " + p.stable.to_string() + " is not stable");
    }
    for (std::size_t i = 0 ; i < fs.pairs.size() ; ++i)
        for (std::size_t j = i + 1 ; j < fs.pairs.size() ; ++j)
            if (! fs.pairs[i].clique.intersects(fs.pairs[j].stable) && ! fs.pairs[j].clique.intersects(fs.pairs[i].stable))
                return Verdict::fail("not-fooling", "pairs " + to_string(i) + " and " + to_string(j) + " do not cross");
    return Verdict::pass();
}

auto css::packing_to_covering(const PackingCertificate & cert) -> BicliqueCovering
{
    BicliqueCovering result{ cert.host, {}, 2 };
    for (auto & b : cert.bicliques)
        result.bicliques.push_back(Biclique{ b.a_side, b.b_side });
    return result;
}

auto css::relax_covering(const BicliqueCovering & cov, int t) -> BicliqueCovering
{
    if (t < cov.t)
        throw PackingError("relaxing a covering cannot lower its multiplicity");
    BicliqueCovering result = cov;
    result.t = t;
    return result;
}

namespace
{
    auto fooling_on(const Graph & g, const VertexSet & x) -> vector<CliqueStablePair>
    {
        int n = g.size();
        int v = x.first();
        if (v == VertexSet::npos)
            return { CliqueStablePair{ VertexSet(n), VertexSet(n) } };

        auto f1 = fooling_on(g, x & g.neighborhood(v));
        auto f2 = fooling_on(g, x - g.closed_neighborhood(v));
        vector<CliqueStablePair> result;
        for (auto & p : f1) {
            result.push_back(p);
            result.back().clique.insert(v);
        }
        for (auto & p : f2) {
            result.push_back(p);
            result.back().stable.insert(v);
        }
        return result;
    }
}

auto css::build_fooling_set(const Graph & g) -> FoolingSet
{
    FoolingSet result{ g, fooling_on(g, VertexSet::full(g.size())) };
    if (int(result.pairs.size()) != g.size() + 1 || ! verify_fooling_set(result))
        throw logic_error("fooling set construction produced an invalid set");
    return result;
}

auto css::fooling_to_packing(const FoolingSet & fs) -> PackingCertificate
{
    if (auto v = verify_fooling_set(fs) ; ! v)
        throw PackingError("input is not a fooling set: " + v.detail);

    int m = int(fs.pairs.size());
    PackingCertificate result{ complete_graph(m), {} };
    for (int x = 0 ; x < fs.host.size() ; ++x) {
        OrientedBiclique b{ VertexSet(m), VertexSet(m) };
        for (int i = 0 ; i < m ; ++i) {
            if (fs.pairs[i].clique.contains(x))
                b.a_side.insert(i);
            if (fs.pairs[i].stable.contains(x))
                b.b_side.insert(i);
        }
        if (! b.a_side.empty() && ! b.b_side.empty())
            result.bicliques.push_back(b);
    }
    if (! verify_packing(result))
        throw logic_error("packing built from a fooling set fails verification");
    return result;
}

auto css::biclique_auxiliary_graph(const PackingCertificate & cert) -> Graph
{
    int k = int(cert.bicliques.size());
    Graph h(k);
    for (int i = 0 ; i < k ; ++i)
        for (int j = i + 1 ; j < k ; ++j)
            if (cert.bicliques[i].a_side.intersects(cert.bicliques[j].a_side))
                h.add_edge(i, j);
    return h;
}

auto css::associated_pairs(const PackingCertificate & cert) -> vector<CliqueStablePair>
{
    int k = int(cert.bicliques.size());
    vector<CliqueStablePair> result;
    for (int x = 0 ; x < cert.host.size() ; ++x) {
        CliqueStablePair p{ VertexSet(k), VertexSet(k) };
        for (int i = 0 ; i < k ; ++i) {
            if (cert.bicliques[i].a_side.contains(x))
                p.clique.insert(i);
            if (cert.bicliques[i].b_side.contains(x))
                p.stable.insert(i);
        }
        result.push_back(p);
    }
    return result;
}

auto css::packing_to_fooling(const PackingCertificate & cert) -> FoolingSet
{
    const Graph & g = cert.host;
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = u + 1 ; v < g.size() ; ++v)
            if (! g.adjacent(u, v))
                throw PackingError("host is not complete: " + to_string(u) + " " + to_string(v) + " is not an edge");
    if (auto v = verify_packing(cert) ; ! v)
        throw PackingError("input is not a packing certificate: " + v.detail);

    FoolingSet result{ biclique_auxiliary_graph(cert), associated_pairs(cert) };
    if (! verify_fooling_set(result))
        throw logic_error("fooling set built from a packing fails verification");
    return result;
}

auto css::star_partition(int n) -> PackingCertificate
{
    if (n < 1)
        throw PackingError("star partition needs at least one vertex");
    PackingCertificate result{ complete_graph(n), {} };
    for (int i = 0 ; i + 1 < n ; ++i) {
        OrientedBiclique b{ VertexSet(n, { i }), VertexSet(n) };
        for (int j = i + 1 ; j < n ; ++j)
            b.b_side.insert(j);
        result.bicliques.push_back(b);
    }
    return result;
}

namespace
{
    /* Exhaustive search shared by the three brute-force oracles. The state is
     * a word of per-edge fields; each move adds one biclique containing the
     * lowest edge still needing coverage. Failed (state, budget) pairs are
     * remembered. */
    class BicliqueSearch
    {
        private:
            const Graph & _g;
            vector<std::pair<int, int>> _edges;
            vector<vector<int>> _edge_index;
            std::unordered_map<uint64_t, int> _failed;

        public:
            // field(state, e), set to needs(state, e) when coverage is still needed
            function<bool (uint64_t, int)> needs;
            // may arc x -> y (edge e) be added in the current state?
            function<bool (uint64_t, int, int, int)> allowed;
            // state after adding arc x -> y (edge e)
            function<uint64_t (uint64_t, int, int, int)> apply;
            bool oriented = false;

            explicit BicliqueSearch(const Graph & g) :
                _g(g),
                _edges(g.edges()),
                _edge_index(g.size(), vector<int>(g.size(), -1))
            {
                if (g.size() > 7)
                    throw PackingError("brute-force biclique search is limited to 7 vertices");
                for (int e = 0 ; e < int(_edges.size()) ; ++e) {
                    _edge_index[_edges[e].first][_edges[e].second] = e;
                    _edge_index[_edges[e].second][_edges[e].first] = e;
                }
            }

            auto edge_count() const -> int { return int(_edges.size()); }

            auto moves(uint64_t state, int a0, int b0) -> vector<uint64_t>
            {
                int n = _g.size();
                auto ok = [&] (int x, int y) {
                    int e = _edge_index[x][y];
                    return e >= 0 && allowed(state, e, x, y);
                };

                vector<uint64_t> result;
                vector<int> cand_a;
                for (int w = 0 ; w < n ; ++w)
                    if (w != a0 && w != b0 && ok(w, b0))
                        cand_a.push_back(w);

                for (uint64_t sa = 0 ; sa < (uint64_t(1) << cand_a.size()) ; ++sa) {
                    vector<int> a{ a0 };
                    for (std::size_t i = 0 ; i < cand_a.size() ; ++i)
                        if ((sa >> i) & 1)
                            a.push_back(cand_a[i]);

                    vector<int> cand_b;
                    for (int y = 0 ; y < n ; ++y) {
                        if (y == b0 || std::find(a.begin(), a.end(), y) != a.end())
                            continue;
                        bool good = true;
                        for (int x : a)
                            if (! ok(x, y)) {
                                good = false;
                                break;
                            }
                        if (good)
                            cand_b.push_back(y);
                    }

                    for (uint64_t sb = 0 ; sb < (uint64_t(1) << cand_b.size()) ; ++sb) {
                        vector<int> b{ b0 };
                        for (std::size_t i = 0 ; i < cand_b.size() ; ++i)
                            if ((sb >> i) & 1)
                                b.push_back(cand_b[i]);
                        uint64_t next = state;
                        for (int x : a)
                            for (int y : b)
                                next = apply(next, _edge_index[x][y], x, y);
                        result.push_back(next);
                    }
                }
                return result;
            }

            auto solve(uint64_t state, int budget) -> bool
            {
                int target = -1;
                for (int e = 0 ; e < edge_count() ; ++e)
                    if (needs(state, e)) {
                        target = e;
                        break;
                    }
                if (target < 0)
                    return true;
                if (budget == 0)
                    return false;
                if (auto it = _failed.find(state) ; it != _failed.end() && it->second >= budget)
                    return false;

                auto [u, v] = _edges[target];
                vector<uint64_t> next = moves(state, u, v);
                if (oriented) {
                    auto more = moves(state, v, u);
                    next.insert(next.end(), more.begin(), more.end());
                }
                for (auto s : next)
                    if (solve(s, budget - 1))
                        return true;

                auto & f = _failed[state];
                f = std::max(f, budget);
                return false;
            }

            auto minimum(int cap) -> BruteForceCount
            {
                for (int k = 0 ; k <= cap ; ++k)
                    if (solve(0, k))
                        return BruteForceCount{ k, false };
                return BruteForceCount{ cap + 1, true };
            }
    };
}

auto css::min_bp_bruteforce(const Graph & g, int cap) -> BruteForceCount
{
    BicliqueSearch search(g);
    search.needs = [] (uint64_t s, int e) { return ! ((s >> e) & 1); };
    search.allowed = [] (uint64_t s, int e, int, int) { return ! ((s >> e) & 1); };
    search.apply = [] (uint64_t s, int e, int, int) { return s | (uint64_t(1) << e); };
    return search.minimum(cap);
}

auto css::min_bp_or_bruteforce(const Graph & g, int cap) -> BruteForceCount
{
    // two bits per edge: bit 0 for the arc from the lower endpoint, bit 1 for the reverse
    BicliqueSearch search(g);
    search.oriented = true;
    search.needs = [] (uint64_t s, int e) { return ! ((s >> (2 * e)) & 3); };
    search.allowed = [] (uint64_t s, int e, int x, int y) { return ! ((s >> (2 * e + (x < y ? 0 : 1))) & 1); };
    search.apply = [] (uint64_t s, int e, int x, int y) { return s | (uint64_t(1) << (2 * e + (x < y ? 0 : 1))); };
    return search.minimum(cap);
}

auto css::min_bp_t_bruteforce(const Graph & g, int t, int cap) -> BruteForceCount
{
    if (t < 1 || t > 3)
        throw PackingError("brute-force t-covering search supports 1 <= t <= 3");
    // two bits per edge holding the cover count
    BicliqueSearch search(g);
    search.needs = [] (uint64_t s, int e) { return ! ((s >> (2 * e)) & 3); };
    search.allowed = [t] (uint64_t s, int e, int, int) { return int((s >> (2 * e)) & 3) < t; };
    search.apply = [] (uint64_t s, int e, int, int) { return s + (uint64_t(1) << (2 * e)); };
    return search.minimum(cap);
}

auto css::alon_bounds(int t, int k) -> AlonBounds
{
    if (t < 1 || k < 1)
        throw PackingError("Alon bounds need t, k >= 1");
    double factorial = std::tgamma(double(t) + 1.0);
    double root = std::pow(double(k), 1.0 / t);
    return AlonBounds{ std::pow(factorial / std::pow(2.0, t), 1.0 / t) * root, t * root };
}

auto css::separator_to_coloring(const Graph & g, const PackingCertificate & cert, const CutFamily & f) -> Coloring
{
    if (cert.host.size() != g.size() || ! (cert.host == g))
        throw PackingError("certificate is not over the given graph");
    if (auto v = verify_packing(cert) ; ! v)
        throw PackingError("input is not a packing certificate: " + v.detail);
    if (f.host_n() != int(cert.bicliques.size()))
        throw PackingError("cut family is not over the auxiliary graph on " + to_string(cert.bicliques.size())
                + " bicliques");

    auto pairs = associated_pairs(cert);
    Coloring result{ vector<int>(g.size(), -1), f.size() };
    for (int x = 0 ; x < g.size() ; ++x) {
        for (int c = 0 ; c < f.size() ; ++c)
            if (separates(f[c], pairs[x].clique, pairs[x].stable)) {
                result.colors[x] = c;
                break;
            }
        if (result.colors[x] < 0)
            throw PackingError("no cut separates the pair associated to vertex " + to_string(x) + ": "
                    + pairs[x].clique.to_string() + " " + pairs[x].stable.to_string());
    }
    if (! is_proper(g, result))
        throw logic_error("colouring obtained from a separator is not proper");
    return result;
}

auto css::pairs_packing(const Graph & g) -> PairsPacking
{
    int n = g.size();
    if (n > pairs_packing_limit)
        throw PackingError("pairs packing is limited to " + to_string(pairs_packing_limit) + " vertices");

    PairsPacking result;
    auto cliques = all_cliques(g);
    auto stables = all_stables(g);
    for (auto & k : cliques)
        for (auto & s : stables)
            if (! k.intersects(s))
                result.pairs.push_back(CliqueStablePair{ k, s });

    int m = int(result.pairs.size());
    result.auxiliary = Graph(m);
    for (int i = 0 ; i < m ; ++i)
        for (int j = i + 1 ; j < m ; ++j)
            if (result.pairs[i].stable.intersects(result.pairs[j].clique)
                    || result.pairs[j].stable.intersects(result.pairs[i].clique))
                result.auxiliary.add_edge(i, j);

    result.certificate.host = result.auxiliary;
    for (int x = 0 ; x < n ; ++x) {
        OrientedBiclique b{ VertexSet(m), VertexSet(m) };
        for (int i = 0 ; i < m ; ++i) {
            if (result.pairs[i].clique.contains(x))
                b.a_side.insert(i);
            if (result.pairs[i].stable.contains(x))
                b.b_side.insert(i);
        }
        result.certificate.bicliques.push_back(b);
    }
    if (auto v = verify_packing(result.certificate) ; ! v)
        throw logic_error("pairs packing fails verification: " + v.detail);
    return result;
}

auto css::coloring_to_separator(const Graph & g, const PairsPacking & pp, const Coloring & c) -> CutFamily
{
    if (! is_proper(pp.auxiliary, c))
        throw PackingError("colouring of the auxiliary graph is not proper");

    int n = g.size();
    vector<VertexSet> cliques(c.palette, VertexSet(n)), stables(c.palette, VertexSet(n));
    for (int i = 0 ; i < int(pp.pairs.size()) ; ++i) {
        cliques[c.colors[i]] |= pp.pairs[i].clique;
        stables[c.colors[i]] |= pp.pairs[i].stable;
    }

    CutFamily result(n);
    for (int a = 0 ; a < c.palette ; ++a) {
        if (cliques[a].intersects(stables[a]))
            throw logic_error("colour class " + to_string(a) + " mixes a clique and a stable set that meet");
        result.add(cliques[a]);
    }
    return result;
}

auto css::verify_partition(const Graph & g, const vector<Biclique> & parts) -> Verdict
{
    for (std::size_t i = 0 ; i < parts.size() ; ++i) {
        string detail;
        if (! biclique_complete(g, parts[i].left, parts[i].right, detail))
            return Verdict::fail("incomplete-biclique", "class " + to_string(i) + ": " + detail);
    }
    for (auto [u, v] : g.edges()) {
        int count = 0;
        for (auto & b : parts)
            if ((b.left.contains(u) && b.right.contains(v)) || (b.left.contains(v) && b.right.contains(u)))
                ++count;
        if (count != 1)
            return Verdict::fail(count == 0 ? "uncovered-edge" : "overlapping-classes",
                    "edge " + to_string(u) + " " + to_string(v) + " lies in " + to_string(count) + " classes");
    }
    return Verdict::pass();
}

auto css::label_count_bound(int k, int t) -> double
{
    if (t < 1 || t > k)
        return 0;
    double binom = 1;
    for (int i = 0 ; i < t ; ++i)
        binom = binom * (k - i) / (i + 1);
    return binom * std::pow(2.0, t - 1);
}

auto css::refine_t_covering(const BicliqueCovering & cov) -> TRefinement
{
    if (auto v = verify_covering(cov) ; ! v)
        throw PackingError("input is not a t-covering: " + v.detail);

    const Graph & g = cov.host;
    int n = g.size();
    TRefinement result{ Graph(n), {}, {} };
    map<EdgeLabel, int> index;

    for (auto [u, v] : g.edges()) {
        vector<int> covering;
        for (int i = 0 ; i < int(cov.bicliques.size()) ; ++i) {
            auto & b = cov.bicliques[i];
            if ((b.left.contains(u) && b.right.contains(v)) || (b.left.contains(v) && b.right.contains(u)))
                covering.push_back(i);
        }
        if (int(covering.size()) != cov.t)
            continue;
        result.exact.add_edge(u, v);

        // the first endpoint is the one on the left of the lowest covering biclique
        int first = cov.bicliques[covering[0]].left.contains(u) ? u : v;
        int second = first == u ? v : u;
        EdgeLabel label{ covering, {} };
        for (int i : covering)
            label.signs.push_back(cov.bicliques[i].left.contains(first) ? -1 : +1);

        auto [it, fresh] = index.emplace(label, int(result.classes.size()));
        if (fresh) {
            result.labels.push_back(label);
            result.classes.push_back(Biclique{ VertexSet(n), VertexSet(n) });
        }
        result.classes[it->second].left.insert(first);
        result.classes[it->second].right.insert(second);
    }

    if (auto v = verify_partition(result.exact, result.classes) ; ! v)
        throw logic_error("label classes do not partition the exactly-t edges: " + v.detail);
    return result;
}

auto css::greedy_base_colorer() -> BaseColorer
{
    return [] (const Graph & g, const vector<Biclique> &) { return greedy_coloring(g); };
}

namespace
{
    auto compose(const Graph & g, const vector<Biclique> & bicliques, int t, const BaseColorer & base) -> Coloring
    {
        if (g.edge_count() == 0)
            return Coloring{ vector<int>(g.size(), 0), 1 };

        if (t == 1) {
            auto c = base(g, bicliques);
            if (! is_proper(g, c))
                throw logic_error("base colourer returned an improper colouring");
            return c;
        }

        auto refinement = refine_t_covering(BicliqueCovering{ g, bicliques, t });
        auto outer = base(refinement.exact, refinement.classes);
        if (! is_proper(refinement.exact, outer))
            throw logic_error("base colourer returned an improper colouring");

        vector<Coloring> inner(outer.palette);
        vector<vector<int>> members(outer.palette);
        int inner_palette = 1;
        for (int a = 0 ; a < outer.palette ; ++a) {
            VertexSet s(g.size());
            for (int v = 0 ; v < g.size() ; ++v)
                if (outer.colors[v] == a)
                    s.insert(v);
            auto sub = induced(g, s);
            members[a] = sub.to_host;

            vector<Biclique> restricted;
            for (auto & b : bicliques) {
                Biclique r{ VertexSet(s.count()), VertexSet(s.count()) };
                for (int i = 0 ; i < int(sub.to_host.size()) ; ++i) {
                    if (b.left.contains(sub.to_host[i]))
                        r.left.insert(i);
                    if (b.right.contains(sub.to_host[i]))
                        r.right.insert(i);
                }
                restricted.push_back(r);
            }
            inner[a] = compose(sub.graph, restricted, t - 1, base);
            inner_palette = std::max(inner_palette, inner[a].palette);
        }

        Coloring result{ vector<int>(g.size(), -1), outer.palette * inner_palette };
        for (int a = 0 ; a < outer.palette ; ++a)
            for (int i = 0 ; i < int(members[a].size()) ; ++i)
                result.colors[members[a][i]] = a * inner_palette + inner[a].colors[i];
        return result;
    }
}

auto css::compose_coloring(const BicliqueCovering & cov, const BaseColorer & base_colorer) -> Coloring
{
    if (auto v = verify_covering(cov) ; ! v)
        throw PackingError("input is not a t-covering: " + v.detail);
    auto result = compose(cov.host, cov.bicliques, cov.t, base_colorer);
    if (! is_proper(cov.host, result))
        throw logic_error("composed colouring is not proper");
    return result;
}

auto css::packing_matrix_rank(const PackingCertificate & cert) -> int
{
    int m = cert.host.size();
    vector<vector<Rational>> rows(m, vector<Rational>(m, 0));
    for (auto & b : cert.bicliques)
        for (int u = b.a_side.first() ; u != VertexSet::npos ; u = b.a_side.next(u))
            for (int v = b.b_side.first() ; v != VertexSet::npos ; v = b.b_side.next(v))
                rows[u][v] += 1;

    int rank = 0;
    for (int col = 0 ; col < m && rank < m ; ++col) {
        int pivot = -1;
        for (int r = rank ; r < m ; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1 ; r < m ; ++r)
            if (rows[r][col] != 0) {
                Rational f = rows[r][col] / rows[rank][col];
                for (int c = col ; c < m ; ++c)
                    rows[r][c] -= f * rows[rank][c];
            }
        ++rank;
    }
    return rank;
}
