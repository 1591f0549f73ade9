#include <css/csp.hh>
#include <css/kernels.hh>
#include <css/rng.hh>

#include <algorithm>
#include <bit>
#include <set>
#include <string>

using namespace css;

using std::array;
using std::logic_error;
using std::nullopt;
using std::optional;
using std::set;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

auto css::mask_string(ColorMask m, int colors) -> string
{
    string result;
    for (int c = 0 ; c < colors ; ++c)
        if (m & bit(c))
            result += colors == ccp_colors ? char('A' + c) : char('1' + c);
    return result;
}

EdgeColoring3::EdgeColoring3(int n) :
    _n(n)
{
    if (n < 0)
        throw CspError("negative instance size " + to_string(n));
    _color.assign(std::size_t(n) * n, color_a);
    for (auto & rows : _rows)
        rows.assign(n, VertexSet(n));
    for (int u = 0 ; u < n ; ++u)
        for (int v = 0 ; v < n ; ++v)
            if (u != v)
                _rows[color_a][u].insert(v);
}

auto EdgeColoring3::color(int u, int v) const -> int
{
    if (u < 0 || v < 0 || u >= _n || v >= _n || u == v)
        throw CspError("no edge " + to_string(u) + " " + to_string(v) + " in K_" + to_string(_n));
    return _color[std::size_t(u) * _n + v];
}

auto EdgeColoring3::set_color(int u, int v, int c) -> void
{
    int old = color(u, v);
    if (c < 0 || c >= ccp_colors)
        throw CspError("edge colour " + to_string(c) + " out of range");
    _color[std::size_t(u) * _n + v] = std::uint8_t(c);
    _color[std::size_t(v) * _n + u] = std::uint8_t(c);
    _rows[old][u].erase(v);
    _rows[old][v].erase(u);
    _rows[c][u].insert(v);
    _rows[c][v].insert(u);
}

auto EdgeColoring3::color_graph(int c) const -> Graph
{
    Graph result(_n);
    for (int u = 0 ; u < _n ; ++u)
        for (int v = u + 1 ; v < _n ; ++v)
            if (color(u, v) == c)
                result.add_edge(u, v);
    return result;
}

auto css::random_edge_coloring(int n, uint64_t seed) -> EdgeColoring3
{
    EdgeColoring3 result(n);
    SplitMix64 rng(seed);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            result.set_color(u, v, int(rng.below(3)));
    return result;
}

auto css::derived_edge_coloring(const Graph & g) -> EdgeColoring3
{
    EdgeColoring3 result(g.size());
    for (int u = 0 ; u < g.size() ; ++u)
        for (int v = u + 1 ; v < g.size() ; ++v)
            result.set_color(u, v, g.adjacent(u, v) ? color_a : color_b);
    return result;
}

auto css::induced(const EdgeColoring3 & inst, const VertexSet & s) -> EdgeColoring3
{
    if (s.host_size() != inst.size())
        throw CspError("vertex set host size does not match instance size");
    auto members = s.members();
    int k = int(members.size());
    EdgeColoring3 result(k);
    for (int i = 0 ; i < k ; ++i)
        for (int j = i + 1 ; j < k ; ++j)
            result.set_color(i, j, inst.color(members[i], members[j]));
    return result;
}

auto css::permute_colors(const EdgeColoring3 & inst, const array<int, 3> & perm) -> EdgeColoring3
{
    EdgeColoring3 result(inst.size());
    for (int u = 0 ; u < inst.size() ; ++u)
        for (int v = u + 1 ; v < inst.size() ; ++v)
            result.set_color(u, v, perm[inst.color(u, v)]);
    return result;
}

auto css::check_two_list_covering(const TwoListCovering & cov) -> Verdict
{
    if (cov.colors != ccp_colors && cov.colors != stubborn_colors)
        return Verdict::fail("bad-universe", "colour count " + to_string(cov.colors));
    ColorMask universe = bit(cov.colors) - 1;
    for (std::size_t i = 0 ; i < cov.assignments.size() ; ++i) {
        const auto & la = cov.assignments[i];
        if (int(la.lists.size()) != cov.n)
            return Verdict::fail("size-mismatch", "assignment " + to_string(i) + " has " + to_string(la.lists.size())
                    + " lists for " + to_string(cov.n) + " vertices");
        for (int v = 0 ; v < cov.n ; ++v) {
            ColorMask m = la.lists[v];
            if (m == 0 || (m & ~universe) || std::popcount(m) > 2)
                return Verdict::fail("bad-list", "assignment " + to_string(i) + " vertex " + to_string(v));
        }
    }
    return Verdict::pass();
}

auto css::compatible(const ListAssignment & la, const vector<int> & coloring) -> bool
{
    if (la.lists.size() != coloring.size())
        throw CspError("assignment and colouring sizes differ");
    for (std::size_t v = 0 ; v < coloring.size() ; ++v)
        if (coloring[v] < 0 || ! (la.lists[v] & bit(coloring[v])))
            return false;
    return true;
}

namespace
{
    auto subsumed(const ListAssignment & a, const ListAssignment & b) -> bool
    {
        for (std::size_t v = 0 ; v < a.lists.size() ; ++v)
            if (a.lists[v] & ~b.lists[v])
                return false;
        return true;
    }
}

auto css::prune_covering(const TwoListCovering & cov) -> TwoListCovering
{
    auto sorted = cov.assignments;
    sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // wider assignments first, so each survivor is only compared with earlier survivors
    auto width = [] (const ListAssignment & la) {
        int w = 0;
        for (auto m : la.lists)
            w += std::popcount(m);
        return w;
    };
    vector<int> order(sorted.size());
    for (std::size_t i = 0 ; i < order.size() ; ++i)
        order[i] = int(i);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return width(sorted[a]) > width(sorted[b]); });

    vector<int> kept;
    for (int i : order) {
        bool dominated = false;
        for (int j : kept)
            if (subsumed(sorted[i], sorted[j])) {
                dominated = true;
                break;
            }
        if (! dominated)
            kept.push_back(i);
    }
    sort(kept.begin(), kept.end());

    TwoListCovering result{ cov.n, cov.colors, {} };
    for (int i : kept)
        result.assignments.push_back(sorted[i]);
    return result;
}

auto css::verify_3ccp_solution(const EdgeColoring3 & inst, const vector<int> & coloring) -> bool
{
    if (int(coloring.size()) != inst.size())
        throw CspError("colouring has " + to_string(coloring.size()) + " entries for " + to_string(inst.size()) + " vertices");
    for (int c : coloring)
        if (c < 0 || c >= ccp_colors)
            throw CspError("vertex colour " + to_string(c) + " out of range");
    for (int u = 0 ; u < inst.size() ; ++u)
        for (int v = u + 1 ; v < inst.size() ; ++v)
            if (coloring[u] == coloring[v] && inst.color(u, v) == coloring[u])
                return false;
    return true;
}

auto css::satisfies(const TwoSatInstance & ts, const vector<bool> & assignment) -> bool
{
    if (int(assignment.size()) != ts.variables)
        return false;
    auto value = [&] (const Literal & l) { return assignment.at(l.var) == l.positive; };
    for (auto & c : ts.clauses)
        if (! value(c.a) && ! value(c.b))
            return false;
    return true;
}

auto css::solve_2sat(const TwoSatInstance & ts) -> optional<vector<bool>>
{
    int nodes = 2 * ts.variables;
    auto node = [&] (const Literal & l) {
        if (l.var < 0 || l.var >= ts.variables)
            throw CspError("literal variable " + to_string(l.var) + " out of range");
        return 2 * l.var + (l.positive ? 0 : 1);
    };

    vector<vector<int>> implies(nodes);
    for (auto & c : ts.clauses) {
        int a = node(c.a), b = node(c.b);
        implies[a ^ 1].push_back(b);
        implies[b ^ 1].push_back(a);
    }

    // iterative Tarjan; component ids come out in reverse topological order
    vector<int> index(nodes, -1), low(nodes, 0), comp(nodes, -1);
    vector<int> stack;
    vector<bool> on_stack(nodes, false);
    int next_index = 0, next_comp = 0;

    auto strongconnect = [&] (int root) {
        vector<std::pair<int, std::size_t>> work{ { root, 0 } };
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (! work.empty()) {
            auto & [v, edge] = work.back();
            if (edge < implies[v].size()) {
                int w = implies[v][edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    work.emplace_back(w, 0);
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            int finished = v;
            work.pop_back();
            if (! work.empty())
                low[work.back().first] = std::min(low[work.back().first], low[finished]);
        }
    };

    for (int v = 0 ; v < ts.variables ; ++v)
        for (int lit : { 2 * v + 1, 2 * v })
            if (index[lit] == -1)
                strongconnect(lit);

    vector<bool> result(ts.variables);
    for (int v = 0 ; v < ts.variables ; ++v) {
        if (comp[2 * v] == comp[2 * v + 1])
            return nullopt;
        result[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return result;
}

auto TwoSatEncoding::decode(const vector<bool> & assignment) const -> vector<int>
{
    vector<int> result(var_of.size(), -1);
    for (std::size_t v = 0 ; v < var_of.size() ; ++v) {
        for (int c = 0 ; c < ccp_colors ; ++c)
            if (var_of[v][c] >= 0 && assignment.at(var_of[v][c])) {
                result[v] = c;
                break;
            }
        if (result[v] < 0)
            throw CspError("assignment gives vertex " + to_string(v) + " no colour");
    }
    return result;
}

auto css::two_list_to_2sat(const EdgeColoring3 & inst, const ListAssignment & la) -> TwoSatEncoding
{
    int n = inst.size();
    if (int(la.lists.size()) != n)
        throw CspError("assignment has " + to_string(la.lists.size()) + " lists for " + to_string(n) + " vertices");

    TwoSatEncoding result;
    result.var_of.assign(n, { -1, -1, -1 });
    auto & ts = result.instance;
    for (int v = 0 ; v < n ; ++v) {
        ColorMask m = la.lists[v];
        if (m == 0 || (m & ~ColorMask(7)) || std::popcount(m) > 2)
            throw CspError("vertex " + to_string(v) + " list " + mask_string(m & 7, ccp_colors) + " is not a 2-list");
        vector<int> vars;
        for (int c = 0 ; c < ccp_colors ; ++c)
            if (m & bit(c)) {
                result.var_of[v][c] = ts.variables;
                vars.push_back(ts.variables++);
            }
        if (vars.size() == 1)
            ts.clauses.push_back(Clause{ { vars[0], true }, { vars[0], true } });
        else {
            ts.clauses.push_back(Clause{ { vars[0], true }, { vars[1], true } });
            ts.clauses.push_back(Clause{ { vars[0], false }, { vars[1], false } });
        }
    }
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v) {
            int c = inst.color(u, v);
            if (result.var_of[u][c] >= 0 && result.var_of[v][c] >= 0)
                ts.clauses.push_back(Clause{ { result.var_of[u][c], false }, { result.var_of[v][c], false } });
        }
    return result;
}

auto css::majority_color(const EdgeColoring3 & inst, int x, const VertexSet & r) -> int
{
    int best = color_a, best_count = -1;
    for (int c = 0 ; c < ccp_colors ; ++c) {
        VertexSet nb = inst.neighborhood(x, c) & r;
        nb.erase(x);
        int count = nb.count();
        if (count > best_count) {
            best = c;
            best_count = count;
        }
    }
    return best;
}

namespace
{
    struct TreeBuilder
    {
        const EdgeColoring3 & inst;
        QuasipolyCovering & out;

        auto leaf(const vector<ColorMask> & lists, int depth) -> void
        {
            out.covering.assignments.push_back(ListAssignment{ lists });
            ++out.leaves;
            out.height = std::max(out.height, depth);
        }

        auto node(const VertexSet & r, vector<ColorMask> & lists, int depth) -> void
        {
            if (r.empty()) {
                leaf(lists, depth);
                return;
            }

            int remaining = r.count();
            for (int x = r.first() ; x != VertexSet::npos ; x = r.next(x)) {
                int alpha = majority_color(inst, x, r);
                VertexSet u = inst.neighborhood(x, alpha) & r;
                u.erase(x);

                auto child = lists;
                child[x] = bit(alpha);
                for (int v = u.first() ; v != VertexSet::npos ; v = u.next(v))
                    child[v] = ColorMask(7) & ~bit(alpha);

                VertexSet rest = r - u;
                rest.erase(x);
                out.steps.push_back(TreeStep{ depth + 1, remaining, 1 + u.count() });
                node(rest, child, depth + 1);
            }

            auto extra = lists;
            for (int v = r.first() ; v != VertexSet::npos ; v = r.next(v))
                extra[v] = ColorMask(7) & ~bit(majority_color(inst, v, r));
            leaf(extra, depth + 1);
        }
    };
}

auto css::build_quasipoly_covering(const EdgeColoring3 & inst) -> QuasipolyCovering
{
    int n = inst.size();
    if (n < 1)
        throw CspError("quasi-polynomial covering needs at least one vertex");
    QuasipolyCovering result;
    result.covering = TwoListCovering{ n, ccp_colors, {} };
    vector<ColorMask> lists(n, 0);
    TreeBuilder{ inst, result }.node(VertexSet::full(n), lists, 0);

    auto & a = result.covering.assignments;
    sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return result;
}

auto css::quasipoly_height_bound(int n) -> int
{
    int k = 0;
    double p = 1;
    while (p < n) {
        p *= 1.5;
        ++k;
    }
    return k + 1;
}

auto css::really_3colorable(const EdgeColoring3 & inst, int x, int alpha) -> Really3Colorable
{
    if (x < 0 || x >= inst.size())
        throw CspError("vertex " + to_string(x) + " out of range");
    if (alpha < 0 || alpha >= ccp_colors)
        throw CspError("colour " + to_string(alpha) + " out of range");

    int beta = alpha == color_a ? color_b : color_a;
    auto u = inst.neighborhood(x, alpha).members();
    int k = int(u.size());
    Graph other(k), beta_graph(k);
    for (int i = 0 ; i < k ; ++i)
        for (int j = i + 1 ; j < k ; ++j) {
            int c = inst.color(u[i], u[j]);
            if (c != alpha)
                other.add_edge(i, j);
            if (c == beta)
                beta_graph.add_edge(i, j);
        }

    for (auto & z : maximal_cliques(other)) {
        auto sub = induced(beta_graph, z);
        if (! find_split_partition(sub.graph)) {
            VertexSet witness(inst.size());
            for (int i : sub.to_host)
                witness.insert(u[i]);
            return Really3Colorable{ false, witness };
        }
    }
    return Really3Colorable{ true, VertexSet(inst.size()) };
}

auto css::trivial_stubborn_instance(const Graph & g) -> StubbornInstance
{
    return StubbornInstance{ g, ListAssignment{ vector<ColorMask>(g.size(), 15) } };
}

auto css::verify_stubborn_solution(const StubbornInstance & inst, const vector<int> & part) -> StubbornCheck
{
    int n = inst.graph.size();
    if (int(part.size()) != n)
        throw CspError("partition has " + to_string(part.size()) + " entries for " + to_string(n) + " vertices");
    if (int(inst.lists.lists.size()) != n)
        throw CspError("instance has " + to_string(inst.lists.lists.size()) + " lists for " + to_string(n) + " vertices");

    array<VertexSet, 4> parts{ VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n) };
    for (int v = 0 ; v < n ; ++v) {
        if (part[v] < 0 || part[v] >= stubborn_colors)
            throw CspError("vertex " + to_string(v) + " has part " + to_string(part[v]));
        parts[part[v]].insert(v);
    }

    StubbornCheck result;
    for (int v = 0 ; v < n ; ++v)
        if (! (inst.lists.lists[v] & bit(part[v])))
            return result;
    const auto & g = inst.graph;
    if (! g.is_clique(parts[3]) || ! g.is_stable(parts[0]) || ! g.is_stable(parts[1])
            || ! g.completely_nonadjacent(parts[0], parts[2]))
        return result;
    result.valid = true;
    result.maximal = true;
    for (int v = parts[0].first() ; v != VertexSet::npos ; v = parts[0].next(v))
        if (inst.lists.lists[v] & bit(2))
            result.maximal = false;
    return result;
}

namespace
{
    auto power(int base, int e) -> long
    {
        long r = 1;
        for (int i = 0 ; i < e ; ++i)
            r *= base;
        return r;
    }

    auto decode_index(long index, int base, int n) -> vector<int>
    {
        vector<int> digits(n);
        for (int v = 0 ; v < n ; ++v) {
            digits[v] = int(index % base);
            index /= base;
        }
        return digits;
    }

    auto coloring_string(const vector<int> & coloring, int colors) -> string
    {
        string s;
        for (int c : coloring)
            s += colors == ccp_colors ? char('A' + c) : char('1' + c);
        return s;
    }

    /// Bit colors * v + c set for every vertex v and listed colour c.
    auto pack_lists(const TwoListCovering & cov) -> vector<uint64_t>
    {
        vector<uint64_t> result;
        for (auto & la : cov.assignments) {
            uint64_t m = 0;
            for (int v = 0 ; v < cov.n ; ++v)
                m |= uint64_t(la.lists[v]) << (cov.colors * v);
            result.push_back(m);
        }
        return result;
    }

    auto pack_coloring(const vector<int> & coloring, int colors) -> uint64_t
    {
        uint64_t m = 0;
        for (std::size_t v = 0 ; v < coloring.size() ; ++v)
            m |= uint64_t(1) << (colors * int(v) + coloring[v]);
        return m;
    }

    auto covered(const vector<uint64_t> & packed, uint64_t coloring) -> bool
    {
        for (auto m : packed)
            if (! (coloring & ~m))
                return true;
        return false;
    }

    auto check_sizes(const TwoListCovering & cov, int n, int colors, int limit) -> void
    {
        if (n > limit)
            throw CspError("exhaustive check limited to " + to_string(limit) + " vertices");
        if (cov.n != n || cov.colors != colors)
            throw CspError("covering does not match the instance");
        auto v = check_two_list_covering(cov);
        if (! v)
            throw CspError("malformed covering: " + v.kind + ", " + v.detail);
    }

    template <typename First_>
    auto ccp_covering_check(const EdgeColoring3 & inst, const TwoListCovering & cov,
            optional<VertexColor> fixed, const First_ & first) -> Verdict
    {
        int n = inst.size();
        check_sizes(cov, n, ccp_colors, ccp_exhaustive_limit);
        auto packed = pack_lists(cov);
        long total = power(3, n);
        long bad = first(total, [&] (long i) {
            auto coloring = decode_index(i, 3, n);
            if (fixed && coloring.at(fixed->vertex) != fixed->color)
                return false;
            return verify_3ccp_solution(inst, coloring) && ! covered(packed, pack_coloring(coloring, ccp_colors));
        });
        if (bad < 0)
            return Verdict::pass();
        return Verdict::fail("uncovered-solution", coloring_string(decode_index(bad, 3, n), ccp_colors));
    }

    template <typename First_>
    auto stubborn_covering_check(const StubbornInstance & inst, const TwoListCovering & cov, const First_ & first) -> Verdict
    {
        int n = inst.graph.size();
        check_sizes(cov, n, stubborn_colors, stubborn_exhaustive_limit);
        auto packed = pack_lists(cov);
        long total = power(4, n);
        long bad = first(total, [&] (long i) {
            auto part = decode_index(i, 4, n);
            return verify_stubborn_solution(inst, part).maximal && ! covered(packed, pack_coloring(part, stubborn_colors));
        });
        if (bad < 0)
            return Verdict::pass();
        return Verdict::fail("uncovered-maximal-solution", coloring_string(decode_index(bad, 4, n), stubborn_colors));
    }

    auto parallel_first = [] (long count, const auto & pred) { return first_index_parallel(count, pred); };
    auto serial_first = [] (long count, const auto & pred) { return first_index_serial(count, pred); };
}

auto css::verify_ccp_covering(const EdgeColoring3 & inst, const TwoListCovering & cov, optional<VertexColor> fixed) -> Verdict
{
    return ccp_covering_check(inst, cov, fixed, parallel_first);
}

auto css::verify_ccp_covering_serial(const EdgeColoring3 & inst, const TwoListCovering & cov, optional<VertexColor> fixed) -> Verdict
{
    return ccp_covering_check(inst, cov, fixed, serial_first);
}

auto css::verify_stubborn_covering(const StubbornInstance & inst, const TwoListCovering & cov) -> Verdict
{
    return stubborn_covering_check(inst, cov, parallel_first);
}

auto css::verify_stubborn_covering_serial(const StubbornInstance & inst, const TwoListCovering & cov) -> Verdict
{
    return stubborn_covering_check(inst, cov, serial_first);
}

auto css::derived_stubborn(const EdgeColoring3 & inst, int x) -> DerivedStubborn
{
    if (x < 0 || x >= inst.size())
        throw CspError("vertex " + to_string(x) + " out of range");
    DerivedStubborn result;
    result.x = x;
    result.c_side = inst.neighborhood(x, color_c).members();
    result.b_side = inst.neighborhood(x, color_b).members();

    auto build = [&] (const vector<int> & side, auto keep) {
        int k = int(side.size());
        Graph h(k);
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                if (keep(inst.color(side[i], side[j])))
                    h.add_edge(i, j);
        return h;
    };
    auto b_or_c = [] (int c) { return c == color_b || c == color_c; };
    result.h_c = build(result.c_side, b_or_c);
    result.h_c_prime = build(result.c_side, [] (int c) { return c == color_b; });
    result.h_b = build(result.b_side, b_or_c);
    result.h_b_prime = build(result.b_side, [] (int c) { return c == color_c; });
    return result;
}

auto css::combine_rule(ColorMask f, ColorMask f_prime) -> optional<ColorMask>
{
    for (ColorMask m : { f, f_prime })
        if (m == 0 || m > 15 || std::popcount(m) > 2)
            throw CspError("stubborn list " + mask_string(m & 15, stubborn_colors) + " is not a 2-list");

    constexpr ColorMask a1 = 1, a2 = 2, a3 = 4, a4 = 8;
    constexpr ColorMask a = bit(color_a), b = bit(color_b), c = bit(color_c);

    switch (f & ~a1) {
        case a2:      return c;
        case a3:      return b | c;
        case a4:      return a;
        case a2 | a4: return a | c;
        case a2 | a3: return b | c;
        case a3 | a4:
            switch (f_prime & ~a1) {
                case a2:      return b;
                case a3:      return a | c;
                case a4:      return c;
                case a2 | a4: return b | c;
                case a2 | a3: return a | b;
                case a3 | a4: return a | c;
                default:      return nullopt;
            }
        default:
            return nullopt;
    }
}

namespace
{
    auto swap_b_c(ColorMask m) -> ColorMask
    {
        return (m & bit(color_a)) | ((m & bit(color_b)) ? bit(color_c) : 0) | ((m & bit(color_c)) ? bit(color_b) : 0);
    }

    auto check_sub_covering(const TwoListCovering & cov, int n, const string & name) -> void
    {
        auto v = check_two_list_covering(cov);
        if (cov.colors != stubborn_colors || cov.n != n || ! v)
            throw CspError("malformed sub-covering " + name + (v ? string() : ": " + v.kind + ", " + v.detail));
    }

    auto combine_side(const TwoListCovering & f, const TwoListCovering & f_prime, bool swapped) -> vector<ListAssignment>
    {
        TwoListCovering partial{ f.n, ccp_colors, {} };
        for (auto & la : f.assignments)
            for (auto & la_prime : f_prime.assignments) {
                ListAssignment out{ vector<ColorMask>(f.n) };
                bool ok = true;
                for (int i = 0 ; i < f.n && ok ; ++i) {
                    auto r = combine_rule(la.lists[i], la_prime.lists[i]);
                    if (r)
                        out.lists[i] = swapped ? swap_b_c(*r) : *r;
                    else
                        ok = false;
                }
                if (ok)
                    partial.assignments.push_back(std::move(out));
            }
        return prune_covering(partial).assignments;
    }
}

auto css::stubborn_to_3ccp_covering(const EdgeColoring3 & inst, int x, const DerivedCoverings & covs) -> TwoListCovering
{
    int n = inst.size();
    TwoListCovering result{ n, ccp_colors, {} };
    if (x < 0 || x >= n)
        throw CspError("vertex " + to_string(x) + " out of range");
    if (! really_3colorable(inst, x, color_a).ok)
        return result;
    for (int c : { color_b, color_c })
        if (! really_3colorable(inst, x, c).ok)
            throw CspError("vertex " + to_string(x) + " is not really 3-colourable for " + mask_string(bit(c), ccp_colors));

    auto d = derived_stubborn(inst, x);
    int kc = int(d.c_side.size()), kb = int(d.b_side.size());
    check_sub_covering(covs.h_c, kc, "H on the C side");
    check_sub_covering(covs.h_c_prime, kc, "H' on the C side");
    check_sub_covering(covs.h_b, kb, "H on the B side");
    check_sub_covering(covs.h_b_prime, kb, "H' on the B side");

    auto c_parts = combine_side(covs.h_c, covs.h_c_prime, false);
    auto b_parts = combine_side(covs.h_b, covs.h_b_prime, true);

    vector<ColorMask> base(n, 0);
    base[x] = bit(color_a);
    const auto & na = inst.neighborhood(x, color_a);
    for (int v = na.first() ; v != VertexSet::npos ; v = na.next(v))
        base[v] = bit(color_b) | bit(color_c);

    for (auto & pc : c_parts)
        for (auto & pb : b_parts) {
            ListAssignment la{ base };
            for (int i = 0 ; i < kc ; ++i)
                la.lists[d.c_side[i]] = pc.lists[i];
            for (int i = 0 ; i < kb ; ++i)
                la.lists[d.b_side[i]] = pb.lists[i];
            result.assignments.push_back(std::move(la));
        }
    return prune_covering(result);
}

namespace
{
    auto transposition(int a, int b) -> array<int, 3>
    {
        array<int, 3> p{ 0, 1, 2 };
        std::swap(p[a], p[b]);
        return p;
    }

    auto permute_mask(ColorMask m, const array<int, 3> & perm) -> ColorMask
    {
        ColorMask r = 0;
        for (int c = 0 ; c < ccp_colors ; ++c)
            if (m & bit(c))
                r |= bit(perm[c]);
        return r;
    }

    auto covering_from_stubborn(const EdgeColoring3 & inst, const VertexSet & alive, const StubbornOracle & oracle)
        -> vector<ListAssignment>
    {
        int n = inst.size();
        if (alive.empty())
            return { ListAssignment{ vector<ColorMask>(n, 0) } };

        auto members = alive.members();
        auto sub = induced(inst, alive);
        int x = members[0];

        ColorMask allowed = 0;
        for (int c = 0 ; c < ccp_colors ; ++c)
            if (really_3colorable(sub, 0, c).ok)
                allowed |= bit(c);

        vector<ListAssignment> result;
        if (allowed != 7) {
            if (allowed == 0)
                return result;
            VertexSet rest = alive;
            rest.erase(x);
            result = covering_from_stubborn(inst, rest, oracle);
            for (auto & la : result)
                la.lists[x] = allowed;
            return result;
        }

        for (int alpha = 0 ; alpha < ccp_colors ; ++alpha) {
            auto perm = transposition(color_a, alpha);
            auto permuted = permute_colors(sub, perm);
            auto d = derived_stubborn(permuted, 0);
            DerivedCoverings covs{ oracle(d.h_c), oracle(d.h_c_prime), oracle(d.h_b), oracle(d.h_b_prime) };
            auto local = stubborn_to_3ccp_covering(permuted, 0, covs);
            for (auto & la : local.assignments) {
                ListAssignment lifted{ vector<ColorMask>(n, 0) };
                for (std::size_t i = 0 ; i < members.size() ; ++i)
                    lifted.lists[members[i]] = permute_mask(la.lists[i], perm);
                result.push_back(std::move(lifted));
            }
        }
        return result;
    }
}

auto css::ccp_covering_from_stubborn(const EdgeColoring3 & inst, const StubbornOracle & oracle) -> TwoListCovering
{
    int n = inst.size();
    TwoListCovering result{ n, ccp_colors, covering_from_stubborn(inst, VertexSet::full(n), oracle) };
    return prune_covering(result);
}

auto css::separator_stubborn_oracle(uint64_t seed) -> StubbornOracle
{
    return [seed] (const Graph & h) -> TwoListCovering {
        if (h.size() == 0)
            return TwoListCovering{ 0, stubborn_colors, { ListAssignment{} } };
        auto built = build_random_separator(h, 0.5, seed, default_max_rounds(h.size()));
        if (! built.complete)
            throw logic_error("random separator did not complete on " + to_string(h.size()) + " vertices");
        auto full = extend_to_full_separator(h, built.family);
        return separator_to_stubborn_covering(trivial_stubborn_instance(h), square_cut_family(full));
    };
}

auto css::ccp_covering_to_separator(const Graph & g, const TwoListCovering & cov) -> CutFamily
{
    int n = g.size();
    if (cov.n != n || cov.colors != ccp_colors)
        throw CspError("covering does not match the graph");
    constexpr ColorMask a = bit(color_a), b = bit(color_b), c = bit(color_c);

    CutFamily result(n);
    for (std::size_t i = 0 ; i < cov.assignments.size() ; ++i) {
        const auto & la = cov.assignments[i];
        if (int(la.lists.size()) != n)
            throw CspError("assignment " + to_string(i) + " has the wrong size");
        VertexSet x(n), y(n), z(n);
        for (int v = 0 ; v < n ; ++v)
            switch (la.lists[v]) {
                case a | b:         x.insert(v); break;
                case b | c: case b: case c: y.insert(v); break;
                case a | c: case a: z.insert(v); break;
                default:
                    throw CspError("assignment " + to_string(i) + " vertex " + to_string(v) + " has list "
                            + mask_string(la.lists[v] & 7, ccp_colors));
            }
        auto sub = induced(g, x);
        for (auto & sp : split_partitions(sub.graph))
            result.add(lift(sub, sp.clique_part, n) | y);
    }
    return result;
}

auto css::square_cut_family(const CutFamily & f) -> CutFamily
{
    CutFamily result(f.host_n());
    for (int i = 0 ; i < f.size() ; ++i)
        for (int j = i ; j < f.size() ; ++j)
            result.add(f[i].side_a & f[j].side_a);
    return result;
}

auto css::verify_union_separation(const Graph & g, const CutFamily & f) -> Verdict
{
    int n = g.size();
    if (n > 16)
        throw CspError("union separation check limited to 16 vertices");
    if (f.host_n() != n)
        throw CspError("cut family host size does not match the graph");

    auto to_mask = [] (const VertexSet & s) {
        return s.word_count() ? s.words()[0] : uint64_t(0);
    };
    vector<uint64_t> adj(n), sides;
    for (int v = 0 ; v < n ; ++v)
        adj[v] = to_mask(g.neighborhood(v));
    for (auto & cut : f.cuts())
        sides.push_back(to_mask(cut.side_a));

    long subsets = long(1) << n;
    vector<char> bipartite(subsets, 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (long t = 0 ; t < subsets ; ++t) {
        uint64_t side[2] = { 0, 0 }, todo = uint64_t(t);
        bool ok = true;
        while (todo && ok) {
            int root = std::countr_zero(todo);
            side[0] |= uint64_t(1) << root;
            vector<int> queue{ root };
            todo &= ~(uint64_t(1) << root);
            while (! queue.empty() && ok) {
                int v = queue.back();
                queue.pop_back();
                int s = (side[0] >> v) & 1 ? 0 : 1;
                if (adj[v] & side[s] & uint64_t(t))
                    ok = false;
                uint64_t fresh = adj[v] & todo;
                side[1 - s] |= fresh;
                todo &= ~fresh;
                for (uint64_t w = fresh ; w ; w &= w - 1)
                    queue.push_back(std::countr_zero(w));
            }
        }
        bipartite[t] = ok;
    }

    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    for (auto & k : all_cliques(g)) {
        uint64_t km = to_mask(k), rest = all & ~km;
        for (uint64_t t = rest ; ; t = (t - 1) & rest) {
            if (bipartite[t]) {
                bool separated = false;
                for (auto s : sides)
                    if ((km & ~s) == 0 && (t & s) == 0) {
                        separated = true;
                        break;
                    }
                if (! separated) {
                    VertexSet ts(n);
                    for (uint64_t w = t ; w ; w &= w - 1)
                        ts.insert(std::countr_zero(w));
                    return Verdict::fail("unseparated-union", "K=" + k.to_string() + " T=" + ts.to_string());
                }
            }
            if (t == 0)
                break;
        }
    }
    return Verdict::pass();
}

auto css::separator_to_stubborn_covering(const StubbornInstance & inst, const CutFamily & f2) -> TwoListCovering
{
    int n = inst.graph.size();
    if (f2.host_n() != n)
        throw CspError("cut family host size does not match the graph");
    if (int(inst.lists.lists.size()) != n)
        throw CspError("instance lists do not match the graph");

    TwoListCovering result{ n, stubborn_colors, {} };
    for (auto & cut : f2.cuts()) {
        ListAssignment la{ vector<ColorMask>(n) };
        for (int v = 0 ; v < n ; ++v) {
            if (cut.side_a.contains(v))
                la.lists[v] = bit(2) | bit(3);
            else if (inst.lists.lists[v] & bit(2))
                la.lists[v] = bit(1) | bit(2);
            else
                la.lists[v] = bit(0) | bit(1);
        }
        result.assignments.push_back(std::move(la));
    }
    return result;
}
