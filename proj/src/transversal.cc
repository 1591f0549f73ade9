#include <css/transversal.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>

using namespace css;

using std::function;
using std::logic_error;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

Digraph::Digraph(int n) :
    _n(n),
    _out(n, VertexSet(n)),
    _in(n, VertexSet(n))
{
}

auto Digraph::add_arc(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        throw TransversalError("arc " + to_string(u) + " -> " + to_string(v) + " out of range");
    if (u == v)
        throw TransversalError("self-arc on " + to_string(u));
    if (_out[v].contains(u))
        throw TransversalError("arc " + to_string(u) + " -> " + to_string(v) + " would break antisymmetry");
    _out[u].insert(v);
    _in[v].insert(u);
}

auto Digraph::arc(int u, int v) const -> bool
{
    return _out.at(u).contains(v);
}

auto css::conflict_digraph(const Graph & g, const VertexSet & k, const VertexSet & s) -> ConflictDigraph
{
    if (k.host_size() != g.size() || s.host_size() != g.size())
        throw TransversalError("clique or stable set over the wrong host");
    if (k.intersects(s))
        throw TransversalError("clique " + k.to_string() + " meets stable set " + s.to_string()
                + " in " + (k & s).to_string());
    if (! g.is_clique(k))
        throw TransversalError(k.to_string() + " is not a clique");
    if (! g.is_stable(s))
        throw TransversalError(s.to_string() + " is not a stable set");

    ConflictDigraph result;
    result.labels = k.members();
    result.clique_size = int(result.labels.size());
    for (int v : s.members())
        result.labels.push_back(v);
    result.digraph = Digraph(int(result.labels.size()));
    for (int i = 0 ; i < result.clique_size ; ++i)
        for (int j = result.clique_size ; j < int(result.labels.size()) ; ++j) {
            if (g.adjacent(result.labels[i], result.labels[j]))
                result.digraph.add_arc(i, j);
            else
                result.digraph.add_arc(j, i);
        }
    return result;
}

namespace
{
    auto total(const vector<Rational> & w, const VertexSet & s) -> Rational
    {
        Rational result = 0;
        for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v))
            result += w[v];
        return result;
    }
}

auto css::check_game_weights(const Digraph & d, const vector<Rational> & w) -> bool
{
    if (int(w.size()) != d.size())
        return false;
    Rational sum = 0;
    for (auto & x : w) {
        if (x < 0)
            return false;
        sum += x;
    }
    if (sum != 1)
        return false;
    for (int x = 0 ; x < d.size() ; ++x)
        if (total(w, d.out(x)) < total(w, d.in(x)))
            return false;
    return true;
}

auto css::antisym_game_weights(const Digraph & d) -> vector<Rational>
{
    int n = d.size();
    if (n == 0)
        throw TransversalError("game weights need at least one vertex");

    LinearProgram lp;
    lp.variables = n;
    lp.objective.assign(n, 0);
    lp.constraints.push_back(LinearConstraint{ vector<Rational>(n, 1), Sense::eq, 1 });
    for (int x = 0 ; x < n ; ++x) {
        vector<Rational> row(n, 0);
        for (int y = 0 ; y < n ; ++y) {
            if (d.arc(x, y))
                row[y] = 1;
            else if (d.arc(y, x))
                row[y] = -1;
        }
        lp.constraints.push_back(LinearConstraint{ row, Sense::ge, 0 });
    }

    auto solution = solve_lp(lp);
    if (solution.status != LpStatus::optimal || ! check_game_weights(d, solution.values))
        throw logic_error("antisymmetric game has no certified weighting; the LP solver is broken");
    return solution.values;
}

auto css::side_weights(const ConflictDigraph & cd) -> SideWeights
{
    auto w = antisym_game_weights(cd.digraph);
    int n = cd.digraph.size();
    Rational on_clique = 0, on_stable = 0;
    for (int i = 0 ; i < n ; ++i)
        (i < cd.clique_size ? on_clique : on_stable) += w[i];

    SideWeights result{ on_clique > 0 ? WeightSide::clique : WeightSide::stable, vector<Rational>(n, 0) };
    Rational mass = result.side == WeightSide::clique ? on_clique : on_stable;
    for (int i = 0 ; i < n ; ++i)
        if ((i < cd.clique_size) == (result.side == WeightSide::clique))
            result.weights[i] = 2 * w[i] / mass;

    if (! check_side_weights(cd, result))
        throw logic_error("rescaled game weights fail the side condition");
    return result;
}

auto css::check_side_weights(const ConflictDigraph & cd, const SideWeights & sw) -> bool
{
    int n = cd.digraph.size();
    if (int(sw.weights.size()) != n)
        return false;
    Rational sum = 0;
    for (int i = 0 ; i < n ; ++i) {
        bool on_side = (i < cd.clique_size) == (sw.side == WeightSide::clique);
        if (sw.weights[i] < 0 || (! on_side && sw.weights[i] != 0))
            return false;
        sum += sw.weights[i];
    }
    if (sum != 2)
        return false;
    for (int i = 0 ; i < n ; ++i) {
        bool opposite = (i < cd.clique_size) != (sw.side == WeightSide::clique);
        if (opposite && total(sw.weights, cd.digraph.out(i)) < 1)
            return false;
    }
    return true;
}

auto css::build_hypergraph(const Graph & g, const VertexSet & base, const VertexSet & opposite, HyperedgeMode mode)
    -> BuiltHypergraph
{
    if (base.intersects(opposite))
        throw TransversalError("base and opposite sets must be disjoint");

    BuiltHypergraph result;
    result.labels = base.members();
    int m = int(result.labels.size());
    result.hypergraph.n = m;
    for (int x = opposite.first() ; x != VertexSet::npos ; x = opposite.next(x)) {
        VertexSet e(m);
        for (int i = 0 ; i < m ; ++i)
            if (g.adjacent(x, result.labels[i]) == (mode == HyperedgeMode::neighbors))
                e.insert(i);
        result.hypergraph.edges.push_back(e);
    }
    return result;
}

namespace
{
    auto check_no_empty_edge(const Hypergraph & h) -> void
    {
        for (std::size_t i = 0 ; i < h.edges.size() ; ++i)
            if (h.edges[i].empty())
                throw TransversalError("hyperedge " + to_string(i) + " is empty, so no transversal exists");
    }
}

auto css::fractional_transversality(const Hypergraph & h) -> FractionalTransversal
{
    check_no_empty_edge(h);
    int n = h.n, m = int(h.edges.size());

    FractionalTransversal result{ 0, vector<Rational>(n, 0), vector<Rational>(m, 0) };
    if (m == 0)
        return result;

    LinearProgram primal;
    primal.variables = n;
    primal.objective.assign(n, 1);
    for (auto & e : h.edges) {
        vector<Rational> row(n, 0);
        for (int v = e.first() ; v != VertexSet::npos ; v = e.next(v))
            row[v] = 1;
        primal.constraints.push_back(LinearConstraint{ row, Sense::ge, 1 });
    }

    LinearProgram dual;
    dual.variables = m;
    dual.maximize = true;
    dual.objective.assign(m, 1);
    for (int v = 0 ; v < n ; ++v) {
        vector<Rational> row(m, 0);
        for (int i = 0 ; i < m ; ++i)
            if (h.edges[i].contains(v))
                row[i] = 1;
        dual.constraints.push_back(LinearConstraint{ row, Sense::le, 1 });
    }

    auto p = solve_lp(primal);
    auto d = solve_lp(dual);
    if (p.status != LpStatus::optimal || d.status != LpStatus::optimal)
        throw logic_error("covering LP of a hypergraph without empty edges is not optimal");

    result.value = p.objective;
    result.weights = p.values;
    result.matching = d.values;
    if (! check_fractional_certificate(h, result))
        throw logic_error("fractional transversal certificate fails its own check");
    return result;
}

auto css::check_fractional_certificate(const Hypergraph & h, const FractionalTransversal & f) -> bool
{
    int n = h.n, m = int(h.edges.size());
    if (int(f.weights.size()) != n || int(f.matching.size()) != m)
        return false;

    Rational primal = 0, dual = 0;
    for (auto & w : f.weights) {
        if (w < 0)
            return false;
        primal += w;
    }
    for (auto & y : f.matching) {
        if (y < 0)
            return false;
        dual += y;
    }
    for (auto & e : h.edges)
        if (total(f.weights, e) < 1)
            return false;
    for (int v = 0 ; v < n ; ++v) {
        Rational load = 0;
        for (int i = 0 ; i < m ; ++i)
            if (h.edges[i].contains(v))
                load += f.matching[i];
        if (load > 1)
            return false;
    }
    return primal == f.value && dual == f.value;
}

auto css::is_transversal(const Hypergraph & h, const VertexSet & t) -> bool
{
    for (auto & e : h.edges)
        if (! e.intersects(t))
            return false;
    return true;
}

auto css::greedy_transversal(const Hypergraph & h) -> VertexSet
{
    check_no_empty_edge(h);
    VertexSet result(h.n);
    vector<bool> hit(h.edges.size(), false);
    std::size_t remaining = h.edges.size();
    while (remaining > 0) {
        int best = -1, best_count = 0;
        for (int v = 0 ; v < h.n ; ++v) {
            int c = 0;
            for (std::size_t i = 0 ; i < h.edges.size() ; ++i)
                if (! hit[i] && h.edges[i].contains(v))
                    ++c;
            if (c > best_count) {
                best_count = c;
                best = v;
            }
        }
        result.insert(best);
        for (std::size_t i = 0 ; i < h.edges.size() ; ++i)
            if (! hit[i] && h.edges[i].contains(best)) {
                hit[i] = true;
                --remaining;
            }
    }
    return result;
}

auto css::exact_transversal(const Hypergraph & h) -> VertexSet
{
    check_no_empty_edge(h);
    if (h.n > 20)
        throw TransversalError("exact transversal is limited to 20 vertices");

    vector<std::uint32_t> masks;
    for (auto & e : h.edges) {
        std::uint32_t mask = 0;
        for (int v = e.first() ; v != VertexSet::npos ; v = e.next(v))
            mask |= std::uint32_t(1) << v;
        masks.push_back(mask);
    }

    for (int size = 0 ; size <= h.n ; ++size) {
        // subsets of the given size in increasing order (Gosper's hack)
        std::uint32_t limit = std::uint32_t(1) << h.n;
        std::uint32_t s = size == 0 ? 0 : (std::uint32_t(1) << size) - 1;
        while (s < limit) {
            bool ok = true;
            for (auto m : masks)
                if (! (m & s)) {
                    ok = false;
                    break;
                }
            if (ok) {
                VertexSet result(h.n);
                for (int v = 0 ; v < h.n ; ++v)
                    if ((s >> v) & 1)
                        result.insert(v);
                return result;
            }
            if (s == 0)
                break;
            std::uint32_t c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    throw logic_error("no transversal found for a hypergraph without empty edges");
}

auto css::shattered(const Hypergraph & h, const VertexSet & a) -> bool
{
    auto members = a.members();
    int d = int(members.size());
    if (d > 30)
        return false;
    std::set<std::uint32_t> traces;
    for (auto & e : h.edges) {
        std::uint32_t trace = 0;
        for (int i = 0 ; i < d ; ++i)
            if (e.contains(members[i]))
                trace |= std::uint32_t(1) << i;
        traces.insert(trace);
    }
    return traces.size() == (std::size_t(1) << d);
}

auto css::vc_dimension(const Hypergraph & h, int cap) -> VcDimension
{
    VcDimension result;
    if (h.edges.empty()) {
        result.degenerate = true;
        return result;
    }

    std::set<VertexSet> distinct(h.edges.begin(), h.edges.end());
    std::size_t edge_count = distinct.size();

    // shattered sets are closed under taking subsets, so every shattered set
    // of size d + 1 is a shattered set of size d plus a vertex above its maximum
    vector<VertexSet> level{ VertexSet(h.n) };
    int d = 0;
    while (! level.empty()) {
        if (d >= cap) {
            result.capped = true;
            break;
        }
        if (d + 1 >= 63 || (std::size_t(1) << (d + 1)) > edge_count)
            break;
        vector<VertexSet> next_level;
        for (auto & s : level) {
            int top = VertexSet::npos;
            for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v))
                top = v;
            for (int v = top + 1 ; v < h.n ; ++v) {
                VertexSet bigger = s;
                bigger.insert(v);
                if (shattered(h, bigger))
                    next_level.push_back(bigger);
            }
        }
        if (next_level.empty())
            break;
        level = std::move(next_level);
        ++d;
    }
    result.value = d;
    return result;
}

auto css::haussler_welzl_bound(int d, const Rational & tau_star) -> double
{
    double x = double(d) * tau_star.get_d();
    if (x <= 0)
        return 0;
    return 16.0 * x * std::log2(x);
}

namespace
{
    auto gamma_parameters(const Graph & gamma, const SplitPartition & split) -> int
    {
        if (split.clique_part.host_size() != gamma.size() || split.stable_part.host_size() != gamma.size()
                || ! gamma.is_clique(split.clique_part) || ! gamma.is_stable(split.stable_part)
                || split.clique_part.intersects(split.stable_part)
                || (split.clique_part | split.stable_part) != VertexSet::full(gamma.size()))
            throw TransversalError("the given partition of the forbidden graph is not a split partition");
        return std::max(split.clique_part.count(), split.stable_part.count());
    }

    auto run_pair(const Graph & g, const CliqueStablePair & pair, int phi, double t) -> PairRun
    {
        auto cd = conflict_digraph(g, pair.clique, pair.stable);
        auto sw = side_weights(cd);

        bool clique_side = sw.side == WeightSide::clique;
        auto built = clique_side
            ? build_hypergraph(g, pair.clique, pair.stable, HyperedgeMode::nonneighbors)
            : build_hypergraph(g, pair.stable, pair.clique, HyperedgeMode::neighbors);
        const Hypergraph & h = built.hypergraph;

        // the side weights, restricted to the hypergraph's vertices, are a fractional transversal of total 2
        int offset = clique_side ? 0 : cd.clique_size;
        vector<Rational> restricted(h.n);
        for (int i = 0 ; i < h.n ; ++i)
            restricted[i] = sw.weights[offset + i];
        for (auto & e : h.edges)
            if (total(restricted, e) < 1)
                throw logic_error("side weights are not a fractional transversal");

        auto ft = fractional_transversality(h);
        PairRun run{ pair, sw.side, ft.value, vc_dimension(h, 2 * phi), VertexSet(g.size()), 0, Cut{ VertexSet(g.size()) } };

        auto local = greedy_transversal(h);
        for (int v = local.first() ; v != VertexSet::npos ; v = local.next(v))
            run.transversal.insert(built.labels[v]);
        if (run.transversal.count() > t)
            throw logic_error("greedy transversal of size " + to_string(run.transversal.count()) + " exceeds t = "
                    + to_string(t) + " on pair " + pair.clique.to_string() + " " + pair.stable.to_string());
        run.hw_bound = haussler_welzl_bound(run.vc.value, ft.value);

        if (clique_side) {
            VertexSet u = VertexSet::full(g.size());
            for (int x = run.transversal.first() ; x != VertexSet::npos ; x = run.transversal.next(x))
                u &= g.closed_neighborhood(x);
            run.cut = Cut{ u };
        }
        else {
            VertexSet u(g.size());
            for (int x = run.transversal.first() ; x != VertexSet::npos ; x = run.transversal.next(x))
                u |= g.neighborhood(x);
            run.cut = Cut{ u };
        }
        if (! separates(run.cut, pair.clique, pair.stable))
            throw logic_error("cut built from the transversal does not separate " + pair.clique.to_string()
                    + " from " + pair.stable.to_string());
        return run;
    }

    auto split_free(const Graph & g, const Graph & gamma, const SplitPartition & split, bool parallel) -> SplitFreeResult
    {
        int phi = gamma_parameters(gamma, split);
        if (auto embedding = contains_induced(g, gamma)) {
            string where;
            for (int v : *embedding)
                where += " " + to_string(v);
            throw TransversalError("graph contains the forbidden split graph at" + where);
        }

        SplitFreeResult result;
        result.family = CutFamily(g.size());
        result.phi = phi;
        result.t = phi <= 0 ? 0 : 64.0 * phi * (std::log2(double(phi)) + 2.0);
        result.vc_limit = 2 * phi - 1;
        result.vc_refined_limit = phi + int(std::ceil(std::log2(double(std::max(phi, 1)))));

        auto pairs = disjoint_maximal_pairs(g);
        vector<optional<PairRun>> runs(pairs.size());
        vector<string> errors(pairs.size());

        auto one = [&] (long i) {
            try {
                runs[i] = run_pair(g, pairs[i], phi, result.t);
            }
            catch (const std::exception & e) {
                errors[i] = e.what();
            }
        };

        long count = long(pairs.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 0 ; i < count ; ++i)
                one(i);
        }
        else
            for (long i = 0 ; i < count ; ++i)
                one(i);

        for (long i = 0 ; i < count ; ++i) {
            if (! errors[i].empty())
                throw logic_error(errors[i]);
            auto & run = *runs[i];
            result.family.add(run.cut);
            result.max_tau = std::max(result.max_tau, run.transversal.count());
            if (run.tau_star > 2)
                result.tau_star_ok = false;
            if (run.vc.capped || run.vc.value > result.vc_limit)
                result.vc_ok = false;
            if (run.vc.capped || run.vc.value > result.vc_refined_limit)
                result.vc_refined_ok = false;
            if (run.transversal.count() > run.hw_bound)
                result.hw_ok = false;
            result.runs.push_back(std::move(run));
        }
        return result;
    }
}

auto css::build_split_free_separator(const Graph & g, const Graph & gamma, const SplitPartition & gamma_split)
    -> SplitFreeResult
{
    return split_free(g, gamma, gamma_split, true);
}

auto css::build_split_free_separator_serial(const Graph & g, const Graph & gamma, const SplitPartition & gamma_split)
    -> SplitFreeResult
{
    return split_free(g, gamma, gamma_split, false);
}

namespace
{
    struct PkState
    {
        const Graph & g;
        double t_k;
        PkFreeResult & result;
    };

    // cuts are returned as their A side, which lies inside x; the B side is x minus A
    auto pk_recurse(PkState & state, const VertexSet & x, int level) -> optional<vector<VertexSet>>
    {
        int n = state.g.size();
        int size = x.count();
        state.result.levels = std::max(state.result.levels, level + 1);

        if (size <= pk_base_size) {
            auto members = x.members();
            vector<VertexSet> all;
            for (std::uint32_t mask = 0 ; mask < (std::uint32_t(1) << size) ; ++mask) {
                VertexSet a(n);
                for (int i = 0 ; i < size ; ++i)
                    if ((mask >> i) & 1)
                        a.insert(members[i]);
                all.push_back(a);
            }
            return all;
        }

        int side = std::max(1, int(std::ceil(state.t_k * size)));
        auto sub = induced(state.g, x);
        auto pair = find_biclique_pair(sub.graph, side);
        if (! pair) {
            state.result.failed_level = level;
            state.result.failed_size = size;
            state.result.failed_side = side;
            state.result.failure = "no completely adjacent or completely non-adjacent pair of sets of size "
                + to_string(side) + " in a subgraph on " + to_string(size) + " vertices at depth " + to_string(level);
            return std::nullopt;
        }

        VertexSet v1 = lift(sub, pair->first, n), v2 = lift(sub, pair->second, n);
        VertexSet v3 = x - v1 - v2;
        auto f1 = pk_recurse(state, v1 | v3, level + 1);
        if (! f1)
            return std::nullopt;
        auto f2 = pk_recurse(state, v2 | v3, level + 1);
        if (! f2)
            return std::nullopt;

        bool adjacent = pair->mode == BicliqueMode::adjacent;
        vector<VertexSet> result;
        for (auto & u : *f1)
            result.push_back(adjacent ? (u | v2) : u);
        for (auto & u : *f2)
            result.push_back(adjacent ? (u | v1) : u);
        return result;
    }
}

auto css::build_pk_free_separator(const Graph & g, int k, double t_k) -> PkFreeResult
{
    if (! (t_k > 0.0 && t_k < 1.0))
        throw TransversalError("t_k must lie strictly between 0 and 1");
    if (k < 1)
        throw TransversalError("path length must be positive");
    if (auto hit = contains_induced(g, path_graph(k)))
        throw TransversalError("graph contains an induced P_" + to_string(k));
    if (auto hit = contains_induced(g, complement(path_graph(k))))
        throw TransversalError("graph contains an induced complement of P_" + to_string(k));

    PkFreeResult result;
    result.family = CutFamily(g.size());
    result.exponent = -1.0 / std::log2(1.0 - t_k);
    PkState state{ g, t_k, result };
    auto cuts = pk_recurse(state, VertexSet::full(g.size()), 0);
    if (cuts) {
        for (auto & a : *cuts)
            result.family.add(a);
        result.ok = true;
    }
    return result;
}
