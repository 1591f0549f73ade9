#ifndef CSS_GUARD_GRAPH_HH
#define CSS_GUARD_GRAPH_HH 1

#include <css/vertex_set.hh>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace css
{
    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /* Undirected simple graph on [0, n), stored as a symmetric adjacency
     * matrix with one bitset row per vertex. */
    class Graph
    {
        private:
            int _n = 0;
            std::vector<VertexSet> _rows;

        public:
            Graph() = default;
            explicit Graph(int n);

            auto size() const -> int { return _n; }
            auto adjacent(int u, int v) const -> bool;
            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;

            /// N(v)
            auto neighborhood(int v) const -> const VertexSet &;
            /// N[v]
            auto closed_neighborhood(int v) const -> VertexSet;

            auto degree(int v) const -> int;
            auto edge_count() const -> long;
            /// All edges (u, v) with u < v, lexicographic.
            auto edges() const -> std::vector<std::pair<int, int>>;

            auto is_clique(const VertexSet & s) const -> bool;
            auto is_stable(const VertexSet & s) const -> bool;
            auto completely_adjacent(const VertexSet & a, const VertexSet & b) const -> bool;
            auto completely_nonadjacent(const VertexSet & a, const VertexSet & b) const -> bool;

            auto operator== (const Graph &) const -> bool = default;
    };

    struct SplitPartition
    {
        VertexSet clique_part;
        VertexSet stable_part;

        auto operator== (const SplitPartition &) const -> bool = default;
        auto operator<=> (const SplitPartition &) const = default;
    };

    struct InducedSubgraph
    {
        Graph graph;
        /// to_host[i] is the vertex of the host graph that became vertex i.
        std::vector<int> to_host;
    };

    enum class BicliqueMode { adjacent, nonadjacent };

    struct BicliquePair
    {
        VertexSet first;
        VertexSet second;
        BicliqueMode mode;
        /// False when the pair came from the greedy search used on large graphs.
        bool exact;
    };

    /// G(n, p) drawing pairs (u, v), u < v, in lexicographic order from SplitMix64(seed).
    auto gen_gnp(int n, double p, std::uint64_t seed) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    /// Triangle {0,1,2} with pendant edges 0-3, 1-4, 2-5.
    auto net_graph() -> Graph;
    /// Comparability graph of the transitive closure of a random DAG on 0 < 1 < ... < n-1,
    /// each forward pair drawn with probability density.
    auto comparability_from_random_poset(int n, double density, std::uint64_t seed) -> Graph;

    auto complement(const Graph & g) -> Graph;
    auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    /// Lifts a vertex set of an induced subgraph back to its host.
    auto lift(const InducedSubgraph & sub, const VertexSet & s, int host_n) -> VertexSet;

    /// Inclusion-maximal cliques, sorted lexicographically. The empty graph has one, the empty set.
    auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>;
    auto maximal_stables(const Graph & g) -> std::vector<VertexSet>;

    /// Every clique including the empty one, sorted lexicographically. Exponential.
    auto all_cliques(const Graph & g) -> std::vector<VertexSet>;
    auto all_stables(const Graph & g) -> std::vector<VertexSet>;

    /// Degree-sequence split test; returns one split partition if g is split.
    auto find_split_partition(const Graph & g) -> std::optional<SplitPartition>;
    /// Every (clique, stable) bipartition of V(g), sorted.
    auto split_partitions(const Graph & g) -> std::vector<SplitPartition>;

    /// Injective map pattern -> g realising pattern as an induced subgraph, if any.
    auto contains_induced(const Graph & g, const Graph & pattern) -> std::optional<std::vector<int>>;

    /// Largest n on which find_biclique_pair searches exhaustively.
    inline constexpr int biclique_exact_limit = 24;
    auto find_biclique_pair(const Graph & g, int min_size) -> std::optional<BicliquePair>;
}

#endif
