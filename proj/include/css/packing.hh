#ifndef CSS_GUARD_PACKING_HH
#define CSS_GUARD_PACKING_HH 1

#include <css/graph.hh>
#include <css/separator.hh>
#include <css/verdict.hh>
#include <css/vertex_set.hh>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace css
{
    class PackingError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// All edges go from a_side to b_side.
    struct OrientedBiclique
    {
        VertexSet a_side;
        VertexSet b_side;

        auto operator== (const OrientedBiclique &) const -> bool = default;
    };

    struct PackingCertificate
    {
        Graph host;
        std::vector<OrientedBiclique> bicliques;
    };

    /// Unoriented complete bipartite subgraph.
    struct Biclique
    {
        VertexSet left;
        VertexSet right;

        auto operator== (const Biclique &) const -> bool = default;
    };

    struct BicliqueCovering
    {
        Graph host;
        std::vector<Biclique> bicliques;
        int t = 1;
    };

    struct FoolingSet
    {
        Graph host;
        std::vector<CliqueStablePair> pairs;
    };

    struct Coloring
    {
        std::vector<int> colors;
        /// colors are drawn from [0, palette)
        int palette = 0;

        auto distinct() const -> int;
    };

    auto is_proper(const Graph & g, const Coloring & c) -> bool;
    /// First-fit in vertex order.
    auto greedy_coloring(const Graph & g) -> Coloring;

    /// Checks, in order: every biclique complete, every edge covered, no arc covered twice.
    auto verify_packing(const PackingCertificate & cert) -> Verdict;
    /// Every biclique complete and every edge covered between 1 and t times.
    auto verify_covering(const BicliqueCovering & cov) -> Verdict;
    auto verify_fooling_set(const FoolingSet & fs) -> Verdict;

    /// Forgets orientations; the result is a 2-covering.
    auto packing_to_covering(const PackingCertificate & cert) -> BicliqueCovering;
    /// The same bicliques with the multiplicity cap raised to t.
    auto relax_covering(const BicliqueCovering & cov, int t) -> BicliqueCovering;

    /// Size n + 1, built by recursion on the lowest vertex v over N(v) and V \ N[v].
    auto build_fooling_set(const Graph & g) -> FoolingSet;

    /// Packing of K_m, one biclique per vertex of the original graph whose
    /// clique side and stable side are both nonempty.
    auto fooling_to_packing(const FoolingSet & fs) -> PackingCertificate;
    /// The auxiliary graph on the bicliques and the pairs (K_x, S_x), one per vertex of the complete host.
    auto packing_to_fooling(const PackingCertificate & cert) -> FoolingSet;

    /// ({i}, {i+1, ..., n-1}) for i < n - 1.
    auto star_partition(int n) -> PackingCertificate;

    struct BruteForceCount
    {
        int value = 0;
        /// no solution of size <= cap exists; value is then cap + 1
        bool exceeded = false;
    };

    /// Minimum number of edge-disjoint bicliques partitioning E(g).
    auto min_bp_bruteforce(const Graph & g, int cap) -> BruteForceCount;
    /// Minimum size of a packing certificate.
    auto min_bp_or_bruteforce(const Graph & g, int cap) -> BruteForceCount;
    /// Minimum size of a t-biclique covering.
    auto min_bp_t_bruteforce(const Graph & g, int t, int cap) -> BruteForceCount;

    struct AlonBounds
    {
        double lower = 0;
        double upper = 0;
    };

    /// (t!/2^t)^(1/t) k^(1/t) and t k^(1/t), without their (1 + o(1)) factors.
    auto alon_bounds(int t, int k) -> AlonBounds;

    /// The graph on the bicliques, adjacent when their A sides meet.
    auto biclique_auxiliary_graph(const PackingCertificate & cert) -> Graph;
    /// (K_x, S_x) in the auxiliary graph for every vertex x of the host.
    auto associated_pairs(const PackingCertificate & cert) -> std::vector<CliqueStablePair>;

    /// Colours x by the index of the first cut of f separating (K_x, S_x).
    auto separator_to_coloring(const Graph & g, const PackingCertificate & cert, const CutFamily & f) -> Coloring;

    struct PairsPacking
    {
        std::vector<CliqueStablePair> pairs;
        Graph auxiliary;
        PackingCertificate certificate;
    };

    inline constexpr int pairs_packing_limit = 8;

    /// Every disjoint (clique, stable set) pair, empty ones included.
    auto pairs_packing(const Graph & g) -> PairsPacking;
    /// One cut per colour class: the union of its cliques against everything else.
    auto coloring_to_separator(const Graph & g, const PairsPacking & pp, const Coloring & c) -> CutFamily;

    /// Edge label of the refinement: covering indices ascending, and whether
    /// the label's first endpoint sits on the left of each of them.
    struct EdgeLabel
    {
        std::vector<int> bicliques;
        std::vector<int> signs;

        auto operator== (const EdgeLabel &) const -> bool = default;
        auto operator<=> (const EdgeLabel &) const = default;
    };

    struct TRefinement
    {
        /// edges covered exactly t times
        Graph exact;
        std::vector<EdgeLabel> labels;
        std::vector<Biclique> classes;
    };

    /// Groups the exactly-t edges by label; each class is checked complete
    /// bipartite and the classes checked to partition the edges.
    auto refine_t_covering(const BicliqueCovering & cov) -> TRefinement;
    auto verify_partition(const Graph & g, const std::vector<Biclique> & parts) -> Verdict;
    /// C(k, t) 2^(t-1), the number of labels the refinement can produce.
    auto label_count_bound(int k, int t) -> double;

    using BaseColorer = std::function<Coloring (const Graph &, const std::vector<Biclique> &)>;

    auto greedy_base_colorer() -> BaseColorer;

    /// Colours the exactly-t subgraph with base_colorer, then recurses on each
    /// colour class with multiplicity t - 1; colours are pairs, flattened.
    auto compose_coloring(const BicliqueCovering & cov, const BaseColorer & base_colorer) -> Coloring;

    /// Rank over the rationals of the sum of the 0/1 matrices A_i x B_i.
    auto packing_matrix_rank(const PackingCertificate & cert) -> int;
}

#endif
