#include <css/graph.hh>
#include <css/rng.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

using namespace css;

using std::function;
using std::nullopt;
using std::optional;
using std::pair;
using std::sort;
using std::to_string;
using std::vector;

Graph::Graph(int n) :
    _n(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    _rows.assign(n, VertexSet(n));
}

auto Graph::adjacent(int u, int v) const -> bool
{
    return _rows.at(u).contains(v);
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        throw GraphError("edge " + to_string(u) + " " + to_string(v) + " out of range for " + to_string(_n) + " vertices");
    if (u == v)
        throw GraphError("self-loop on vertex " + to_string(u));
    _rows[u].insert(v);
    _rows[v].insert(u);
}

auto Graph::remove_edge(int u, int v) -> void
{
    _rows.at(u).erase(v);
    _rows.at(v).erase(u);
}

auto Graph::neighborhood(int v) const -> const VertexSet &
{
    return _rows.at(v);
}

auto Graph::closed_neighborhood(int v) const -> VertexSet
{
    VertexSet result = _rows.at(v);
    result.insert(v);
    return result;
}

auto Graph::degree(int v) const -> int
{
    return _rows.at(v).count();
}

auto Graph::edge_count() const -> long
{
    long total = 0;
    for (auto & r : _rows)
        total += r.count();
    return total / 2;
}

auto Graph::edges() const -> vector<pair<int, int>>
{
    vector<pair<int, int>> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = _rows[u].next(u) ; v != VertexSet::npos ; v = _rows[u].next(v))
            result.emplace_back(u, v);
    return result;
}

auto Graph::is_clique(const VertexSet & s) const -> bool
{
    for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v)) {
        VertexSet others = s;
        others.erase(v);
        if (! others.is_subset_of(_rows[v]))
            return false;
    }
    return true;
}

auto Graph::is_stable(const VertexSet & s) const -> bool
{
    for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v))
        if (s.intersects(_rows[v]))
            return false;
    return true;
}

auto Graph::completely_adjacent(const VertexSet & a, const VertexSet & b) const -> bool
{
    for (int v = a.first() ; v != VertexSet::npos ; v = a.next(v))
        if (! b.is_subset_of(_rows[v]))
            return false;
    return true;
}

auto Graph::completely_nonadjacent(const VertexSet & a, const VertexSet & b) const -> bool
{
    for (int v = a.first() ; v != VertexSet::npos ; v = a.next(v))
        if (b.intersects(_rows[v]))
            return false;
    return true;
}

auto css::gen_gnp(int n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw GraphError("edge probability must lie in [0, 1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

auto css::complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            g.add_edge(u, v);
    return g;
}

auto css::empty_graph(int n) -> Graph
{
    return Graph(n);
}

auto css::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

auto css::path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto css::net_graph() -> Graph
{
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

auto css::comparability_from_random_poset(int n, double density, std::uint64_t seed) -> Graph
{
    if (! (density >= 0.0 && density <= 1.0))
        throw GraphError("poset density must lie in [0, 1]");

    SplitMix64 rng(seed);
    vector<VertexSet> above(n, VertexSet(n));
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (rng.bernoulli(density))
                above[u].insert(v);

    // transitive closure, processing from the top so above[v] is final when read
    for (int u = n - 1 ; u >= 0 ; --u) {
        VertexSet closure = above[u];
        for (int v = above[u].first() ; v != VertexSet::npos ; v = above[u].next(v))
            closure |= above[v];
        above[u] = closure;
    }

    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = above[u].first() ; v != VertexSet::npos ; v = above[u].next(v))
            g.add_edge(u, v);
    return g;
}

auto css::complement(const Graph & g) -> Graph
{
    Graph result(g.size());
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = u + 1 ; v < g.size() ; ++v)
            if (! g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

auto css::induced(const Graph & g, const VertexSet & s) -> InducedSubgraph
{
    if (s.host_size() != g.size())
        throw GraphError("vertex set host size " + to_string(s.host_size()) + " does not match graph size " + to_string(g.size()));
    InducedSubgraph result{ Graph(s.count()), s.members() };
    int k = int(result.to_host.size());
    for (int i = 0 ; i < k ; ++i)
        for (int j = i + 1 ; j < k ; ++j)
            if (g.adjacent(result.to_host[i], result.to_host[j]))
                result.graph.add_edge(i, j);
    return result;
}

auto css::lift(const InducedSubgraph & sub, const VertexSet & s, int host_n) -> VertexSet
{
    VertexSet result(host_n);
    for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v))
        result.insert(sub.to_host.at(v));
    return result;
}

namespace
{
    auto expand_maximal(const Graph & g, VertexSet & r, VertexSet p, VertexSet x, vector<VertexSet> & out) -> void
    {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }

        // Tomita pivot: maximise |P ∩ N(u)| over u in P ∪ X
        int pivot = VertexSet::npos, best = -1;
        VertexSet px = p | x;
        for (int u = px.first() ; u != VertexSet::npos ; u = px.next(u)) {
            int c = (p & g.neighborhood(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }

        VertexSet branch = p - g.neighborhood(pivot);
        for (int v = branch.first() ; v != VertexSet::npos ; v = branch.next(v)) {
            r.insert(v);
            expand_maximal(g, r, p & g.neighborhood(v), x & g.neighborhood(v), out);
            r.erase(v);
            p.erase(v);
            x.insert(v);
        }
    }

    auto expand_all(const Graph & g, VertexSet & r, const VertexSet & p, vector<VertexSet> & out) -> void
    {
        out.push_back(r);
        for (int v = p.first() ; v != VertexSet::npos ; v = p.next(v)) {
            VertexSet later = p & g.neighborhood(v);
            // only extend with vertices above v, so each clique is produced once
            for (int u = later.first() ; u != VertexSet::npos && u < v ; u = later.next(u))
                later.erase(u);
            r.insert(v);
            expand_all(g, r, later, out);
            r.erase(v);
        }
    }
}

auto css::maximal_cliques(const Graph & g) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet r(g.size());
    expand_maximal(g, r, VertexSet::full(g.size()), VertexSet(g.size()), result);
    sort(result.begin(), result.end());
    return result;
}

auto css::maximal_stables(const Graph & g) -> vector<VertexSet>
{
    return maximal_cliques(complement(g));
}

auto css::all_cliques(const Graph & g) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet r(g.size());
    expand_all(g, r, VertexSet::full(g.size()), result);
    sort(result.begin(), result.end());
    return result;
}

auto css::all_stables(const Graph & g) -> vector<VertexSet>
{
    return all_cliques(complement(g));
}

auto css::find_split_partition(const Graph & g) -> optional<SplitPartition>
{
    int n = g.size();
    vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

    // Hammer and Simeone: with d_1 >= ... >= d_n and m = max{ i : d_i >= i - 1 },
    // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i
    int m = 0;
    for (int i = 0 ; i < n ; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;

    long top = 0, bottom = 0;
    for (int i = 0 ; i < n ; ++i)
        (i < m ? top : bottom) += g.degree(order[i]);
    if (top != long(m) * (m - 1) + bottom)
        return nullopt;

    SplitPartition result{ VertexSet(n), VertexSet(n) };
    for (int i = 0 ; i < n ; ++i)
        (i < m ? result.clique_part : result.stable_part).insert(order[i]);
    return result;
}

auto css::split_partitions(const Graph & g) -> vector<SplitPartition>
{
    auto seed = find_split_partition(g);
    if (! seed)
        return {};

    // Two split partitions (K, S), (K', S') have |K \ K'| <= 1 and |K' \ K| <= 1:
    // K \ K' is a clique inside the stable set S', and symmetrically. So every
    // partition is reachable from the seed by moving at most one vertex each way.
    int n = g.size();
    vector<SplitPartition> result;
    auto consider = [&] (const VertexSet & k) {
        VertexSet s = k.complement();
        if (g.is_clique(k) && g.is_stable(s))
            result.push_back(SplitPartition{ k, s });
    };

    const VertexSet & k0 = seed->clique_part;
    consider(k0);
    for (int out = 0 ; out < n ; ++out) {
        if (k0.contains(out)) {
            VertexSet k = k0;
            k.erase(out);
            consider(k);
            for (int in = seed->stable_part.first() ; in != VertexSet::npos ; in = seed->stable_part.next(in)) {
                VertexSet swapped = k;
                swapped.insert(in);
                consider(swapped);
            }
        }
        else {
            VertexSet k = k0;
            k.insert(out);
            consider(k);
        }
    }

    sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

auto css::contains_induced(const Graph & g, const Graph & pattern) -> optional<vector<int>>
{
    int k = pattern.size();
    if (k > g.size())
        return nullopt;

    vector<int> mapping(k, -1);
    VertexSet used(g.size());

    function<bool (int)> search = [&] (int i) -> bool {
        if (i == k)
            return true;
        VertexSet domain = used.complement();
        for (int j = 0 ; j < i ; ++j) {
            if (pattern.adjacent(i, j))
                domain &= g.neighborhood(mapping[j]);
            else
                domain -= g.neighborhood(mapping[j]);
        }
        for (int v = domain.first() ; v != VertexSet::npos ; v = domain.next(v)) {
            mapping[i] = v;
            used.insert(v);
            if (search(i + 1))
                return true;
            used.erase(v);
        }
        mapping[i] = -1;
        return false;
    };

    if (search(0))
        return mapping;
    return nullopt;
}

namespace
{
    // In h, find A with |A| = size and at least size common neighbours.
    auto exact_side(const Graph & h, int size) -> optional<pair<VertexSet, VertexSet>>
    {
        int n = h.size();
        VertexSet chosen(n);
        optional<pair<VertexSet, VertexSet>> found;

        function<void (int, const VertexSet &)> search = [&] (int from, const VertexSet & common) {
            if (found)
                return;
            if (common.count() < size)
                return;
            int have = chosen.count();
            if (have == size) {
                VertexSet b(n);
                for (int v = common.first() ; v != VertexSet::npos && b.count() < size ; v = common.next(v))
                    b.insert(v);
                found.emplace(chosen, b);
                return;
            }
            for (int v = from ; v < n && n - v >= size - have ; ++v) {
                chosen.insert(v);
                search(v + 1, common & h.neighborhood(v));
                chosen.erase(v);
                if (found)
                    return;
            }
        };

        search(0, VertexSet::full(n));
        return found;
    }

    auto greedy_side(const Graph & h, int size) -> optional<pair<VertexSet, VertexSet>>
    {
        int n = h.size();
        for (int seed = 0 ; seed < n ; ++seed) {
            VertexSet a(n);
            a.insert(seed);
            VertexSet common = h.neighborhood(seed);
            while (a.count() < size) {
                int best = VertexSet::npos, best_count = -1;
                for (int u = 0 ; u < n ; ++u) {
                    if (a.contains(u))
                        continue;
                    int c = (common & h.neighborhood(u)).count();
                    if (c > best_count) {
                        best_count = c;
                        best = u;
                    }
                }
                if (best == VertexSet::npos || best_count < size)
                    break;
                a.insert(best);
                common &= h.neighborhood(best);
            }
            if (a.count() == size && common.count() >= size) {
                VertexSet b(n);
                for (int v = common.first() ; v != VertexSet::npos && b.count() < size ; v = common.next(v))
                    b.insert(v);
                return pair{ a, b };
            }
        }
        return nullopt;
    }

    auto grow(const Graph & h, VertexSet & a, VertexSet & b) -> void
    {
        int n = h.size();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0 ; v < n ; ++v)
                if (! a.contains(v) && ! b.contains(v) && b.is_subset_of(h.neighborhood(v))) {
                    a.insert(v);
                    changed = true;
                    break;
                }
            for (int v = 0 ; v < n ; ++v)
                if (! a.contains(v) && ! b.contains(v) && a.is_subset_of(h.neighborhood(v))) {
                    b.insert(v);
                    changed = true;
                    break;
                }
        }
    }
}

auto css::find_biclique_pair(const Graph & g, int min_size) -> optional<BicliquePair>
{
    if (min_size < 1)
        throw GraphError("biclique pair size must be at least 1");
    if (2 * min_size > g.size())
        return nullopt;

    bool exact = g.size() <= biclique_exact_limit;
    for (auto mode : { BicliqueMode::adjacent, BicliqueMode::nonadjacent }) {
        Graph h = mode == BicliqueMode::adjacent ? g : complement(g);
        auto sides = exact ? exact_side(h, min_size) : greedy_side(h, min_size);
        if (sides) {
            grow(h, sides->first, sides->second);
            return BicliquePair{ sides->first, sides->second, mode, exact };
        }
    }
    return nullopt;
}
