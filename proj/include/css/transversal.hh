#ifndef CSS_GUARD_TRANSVERSAL_HH
#define CSS_GUARD_TRANSVERSAL_HH 1

#include <css/graph.hh>
#include <css/separator.hh>
#include <css/simplex.hh>
#include <css/vertex_set.hh>

#include <stdexcept>
#include <string>
#include <vector>

namespace css
{
    class TransversalError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /* Oriented graph: at most one of u->v, v->u. */
    class Digraph
    {
        private:
            int _n = 0;
            std::vector<VertexSet> _out, _in;

        public:
            Digraph() = default;
            explicit Digraph(int n);

            auto size() const -> int { return _n; }
            auto add_arc(int u, int v) -> void;
            auto arc(int u, int v) const -> bool;
            /// N+(v)
            auto out(int v) const -> const VertexSet & { return _out.at(v); }
            /// N-(v)
            auto in(int v) const -> const VertexSet & { return _in.at(v); }
    };

    /* The bipartite tournament between a clique K and a stable set S: x -> y
     * for x in K, y in S when xy is an edge, y -> x otherwise. Local vertex
     * i < |K| is the i-th member of K, the rest follow S. */
    struct ConflictDigraph
    {
        Digraph digraph;
        std::vector<int> labels;
        int clique_size = 0;
    };

    auto conflict_digraph(const Graph & g, const VertexSet & k, const VertexSet & s) -> ConflictDigraph;

    /// w >= 0 with sum 1 and w(N+(x)) >= w(N-(x)) for all x, checked exactly before returning.
    auto antisym_game_weights(const Digraph & d) -> std::vector<Rational>;
    auto check_game_weights(const Digraph & d, const std::vector<Rational> & w) -> bool;

    enum class WeightSide { clique, stable };

    struct SideWeights
    {
        WeightSide side;
        /// Indexed by local digraph vertex, zero off the chosen side, total 2.
        std::vector<Rational> weights;
    };

    /// Chooses the clique side when the game weights give it positive mass.
    auto side_weights(const ConflictDigraph & cd) -> SideWeights;
    /// w(N+(x)) >= 1 for every x on the side opposite the weights, and total 2.
    auto check_side_weights(const ConflictDigraph & cd, const SideWeights & sw) -> bool;

    /* Hyperedges over [0, n), kept as a multiset in generation order. */
    struct Hypergraph
    {
        int n = 0;
        std::vector<VertexSet> edges;

        auto operator== (const Hypergraph &) const -> bool = default;
    };

    enum class HyperedgeMode { nonneighbors, neighbors };

    struct BuiltHypergraph
    {
        Hypergraph hypergraph;
        /// labels[i] is the host vertex of local vertex i (the i-th member of base).
        std::vector<int> labels;
    };

    /// One hyperedge per member x of opposite: base \ N(x) or base ∩ N(x).
    auto build_hypergraph(const Graph & g, const VertexSet & base, const VertexSet & opposite, HyperedgeMode mode)
        -> BuiltHypergraph;

    struct FractionalTransversal
    {
        Rational value;
        /// optimal primal weights per vertex
        std::vector<Rational> weights;
        /// optimal dual: a fractional matching, one value per hyperedge, with the same total
        std::vector<Rational> matching;
    };

    auto fractional_transversality(const Hypergraph & h) -> FractionalTransversal;
    /// Both halves feasible and equal in total.
    auto check_fractional_certificate(const Hypergraph & h, const FractionalTransversal & f) -> bool;

    auto is_transversal(const Hypergraph & h, const VertexSet & t) -> bool;
    /// Repeatedly takes the vertex hitting most unhit hyperedges, lowest index on ties.
    auto greedy_transversal(const Hypergraph & h) -> VertexSet;
    /// Minimum transversal by enumeration; at most 20 vertices.
    auto exact_transversal(const Hypergraph & h) -> VertexSet;

    struct VcDimension
    {
        int value = 0;
        /// true when value == cap and larger shattered sets were not searched for
        bool capped = false;
        /// the hypergraph has no hyperedges, so not even the empty set is shattered
        bool degenerate = false;
    };

    auto vc_dimension(const Hypergraph & h, int cap) -> VcDimension;
    auto shattered(const Hypergraph & h, const VertexSet & a) -> bool;

    /// 16 d tau* log2(d tau*), the transversal bound for VC-dimension d.
    auto haussler_welzl_bound(int d, const Rational & tau_star) -> double;

    struct PairRun
    {
        CliqueStablePair pair;
        WeightSide side;
        Rational tau_star;
        VcDimension vc;
        VertexSet transversal;
        double hw_bound = 0;
        Cut cut;
    };

    struct SplitFreeResult
    {
        CutFamily family;
        std::vector<PairRun> runs;
        int phi = 0;
        /// 64 phi (log2 phi + 2)
        double t = 0;
        int vc_limit = 0;
        int vc_refined_limit = 0;
        int max_tau = 0;
        bool tau_star_ok = true;
        bool vc_ok = true;
        bool vc_refined_ok = true;
        bool hw_ok = true;
    };

    /// Lazy per-pair construction over the disjoint maximal pairs. Throws if g
    /// contains gamma, or if any exact per-pair check fails.
    auto build_split_free_separator(const Graph & g, const Graph & gamma, const SplitPartition & gamma_split)
        -> SplitFreeResult;
    auto build_split_free_separator_serial(const Graph & g, const Graph & gamma, const SplitPartition & gamma_split)
        -> SplitFreeResult;

    inline constexpr int pk_base_size = 12;

    struct PkFreeResult
    {
        CutFamily family;
        bool ok = false;
        int levels = 0;
        /// on failure: the depth, subproblem size and required side size
        int failed_level = -1;
        int failed_size = 0;
        int failed_side = 0;
        std::string failure;
        /// -1 / log2(1 - t_k)
        double exponent = 0;
    };

    /// Recursive construction for graphs with no induced P_k and no induced
    /// complement of P_k. The result separates every disjoint clique, stable
    /// set pair, not only maximal ones.
    auto build_pk_free_separator(const Graph & g, int k, double t_k) -> PkFreeResult;
}

#endif
