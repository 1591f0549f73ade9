#ifndef CSS_GUARD_CSP_HH
#define CSS_GUARD_CSP_HH 1

#include <css/graph.hh>
#include <css/separator.hh>
#include <css/verdict.hh>
#include <css/vertex_set.hh>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace css
{
    class CspError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /* Colours are small integers: 0, 1, 2 for A, B, C in 3-CCP and 0..3 for
     * A1..A4 in the stubborn problem. A list is a bitmask over them. */
    using ColorMask = unsigned;

    inline constexpr int color_a = 0;
    inline constexpr int color_b = 1;
    inline constexpr int color_c = 2;

    inline constexpr int ccp_colors = 3;
    inline constexpr int stubborn_colors = 4;

    inline constexpr auto bit(int c) -> ColorMask { return ColorMask(1) << c; }

    /// "AB" for 3-CCP masks, "34" for stubborn masks.
    auto mask_string(ColorMask m, int colors) -> std::string;

    /* A 3-colouring of the edges of K_n. */
    class EdgeColoring3
    {
        private:
            int _n = 0;
            std::vector<std::uint8_t> _color;
            std::array<std::vector<VertexSet>, 3> _rows;

        public:
            EdgeColoring3() = default;
            /// Every pair starts coloured A.
            explicit EdgeColoring3(int n);

            auto size() const -> int { return _n; }
            auto color(int u, int v) const -> int;
            auto set_color(int u, int v, int c) -> void;
            /// The c-edge-neighbourhood of x.
            auto neighborhood(int x, int c) const -> const VertexSet & { return _rows[c].at(x); }
            /// The graph of c-coloured edges.
            auto color_graph(int c) const -> Graph;

            auto operator== (const EdgeColoring3 & other) const -> bool { return _n == other._n && _color == other._color; }
    };

    auto random_edge_coloring(int n, std::uint64_t seed) -> EdgeColoring3;
    /// A on the edges of g, B on its non-edges.
    auto derived_edge_coloring(const Graph & g) -> EdgeColoring3;
    /// Sub-instance on the members of s, in ascending order.
    auto induced(const EdgeColoring3 & inst, const VertexSet & s) -> EdgeColoring3;
    /// Renames colour c to perm[c] on every edge.
    auto permute_colors(const EdgeColoring3 & inst, const std::array<int, 3> & perm) -> EdgeColoring3;

    struct ListAssignment
    {
        std::vector<ColorMask> lists;

        auto operator== (const ListAssignment &) const -> bool = default;
        auto operator<=> (const ListAssignment &) const = default;
    };

    struct TwoListCovering
    {
        int n = 0;
        /// 3 for 3-CCP, 4 for the stubborn problem
        int colors = ccp_colors;
        std::vector<ListAssignment> assignments;
    };

    /// Sizes match, lists nonempty, at most two colours, inside the universe.
    auto check_two_list_covering(const TwoListCovering & cov) -> Verdict;
    auto compatible(const ListAssignment & la, const std::vector<int> & coloring) -> bool;
    /// Drops duplicates and assignments whose lists all sit inside another's; sorted.
    auto prune_covering(const TwoListCovering & cov) -> TwoListCovering;

    /// No pair with both endpoints coloured like the edge between them.
    auto verify_3ccp_solution(const EdgeColoring3 & inst, const std::vector<int> & coloring) -> bool;

    struct Literal
    {
        int var = 0;
        bool positive = true;

        auto operator== (const Literal &) const -> bool = default;
    };

    struct Clause
    {
        Literal a;
        Literal b;

        auto operator== (const Clause &) const -> bool = default;
    };

    struct TwoSatInstance
    {
        int variables = 0;
        std::vector<Clause> clauses;
    };

    auto satisfies(const TwoSatInstance & ts, const std::vector<bool> & assignment) -> bool;
    /// Implication graph and Tarjan's strongly connected components.
    auto solve_2sat(const TwoSatInstance & ts) -> std::optional<std::vector<bool>>;

    struct TwoSatEncoding
    {
        TwoSatInstance instance;
        /// var_of[v][c] is the variable x_c of vertex v, or -1
        std::vector<std::array<int, 3>> var_of;

        auto decode(const std::vector<bool> & assignment) const -> std::vector<int>;
    };

    /// One variable per listed colour, x_a | x_b and ~x_a | ~x_b per 2-list,
    /// x_a | x_a per singleton, and ~x_c | ~y_c per c-edge xy when both exist.
    auto two_list_to_2sat(const EdgeColoring3 & inst, const ListAssignment & la) -> TwoSatEncoding;

    struct TreeStep
    {
        int depth = 0;
        int remaining = 0;
        int removed = 0;
    };

    struct QuasipolyCovering
    {
        TwoListCovering covering;
        /// leaves of the tree before deduplication
        long leaves = 0;
        int height = 0;
        /// one entry per labelled child
        std::vector<TreeStep> steps;
    };

    /// The majority colour of x among the members of r other than x, lowest colour on ties.
    auto majority_color(const EdgeColoring3 & inst, int x, const VertexSet & r) -> int;
    auto build_quasipoly_covering(const EdgeColoring3 & inst) -> QuasipolyCovering;
    /// ceil(log_{3/2} n) + 1
    auto quasipoly_height_bound(int n) -> int;

    struct Really3Colorable
    {
        bool ok = true;
        /// on failure, a clique of non-alpha edges inside N_alpha(x) that is not split
        VertexSet witness;
    };

    auto really_3colorable(const EdgeColoring3 & inst, int x, int alpha) -> Really3Colorable;

    struct StubbornInstance
    {
        Graph graph;
        /// masks over A1..A4
        ListAssignment lists;
    };

    /// Every list {A1, A2, A3, A4}.
    auto trivial_stubborn_instance(const Graph & g) -> StubbornInstance;

    struct StubbornCheck
    {
        bool valid = false;
        bool maximal = false;
    };

    /// part[v] in 0..3 is the index of the part holding v.
    auto verify_stubborn_solution(const StubbornInstance & inst, const std::vector<int> & part) -> StubbornCheck;

    struct VertexColor
    {
        int vertex = 0;
        int color = 0;
    };

    inline constexpr int ccp_exhaustive_limit = 12;
    inline constexpr int stubborn_exhaustive_limit = 10;

    /// Every valid solution (optionally only those colouring vertex with color)
    /// is compatible with some assignment. Enumerates all 3^n colourings.
    auto verify_ccp_covering(const EdgeColoring3 & inst, const TwoListCovering & cov,
            std::optional<VertexColor> fixed = std::nullopt) -> Verdict;
    auto verify_ccp_covering_serial(const EdgeColoring3 & inst, const TwoListCovering & cov,
            std::optional<VertexColor> fixed = std::nullopt) -> Verdict;
    /// Every maximal solution is compatible with some assignment. Enumerates all 4^n partitions.
    auto verify_stubborn_covering(const StubbornInstance & inst, const TwoListCovering & cov) -> Verdict;
    auto verify_stubborn_covering_serial(const StubbornInstance & inst, const TwoListCovering & cov) -> Verdict;

    /* The stubborn instances around x used when x is coloured A: on N_C(x),
     * h_c keeps the B- and C-edges and h_c_prime the B-edges; on N_B(x), with
     * B and C exchanged, h_b keeps the B- and C-edges and h_b_prime the C-edges. */
    struct DerivedStubborn
    {
        int x = 0;
        std::vector<int> c_side;
        std::vector<int> b_side;
        Graph h_c;
        Graph h_c_prime;
        Graph h_b;
        Graph h_b_prime;
    };

    auto derived_stubborn(const EdgeColoring3 & inst, int x) -> DerivedStubborn;

    struct DerivedCoverings
    {
        TwoListCovering h_c;
        TwoListCovering h_c_prime;
        TwoListCovering h_b;
        TwoListCovering h_b_prime;
    };

    /// The row of the combination table for f(v), f'(v); empty when no
    /// inherited solution is compatible with the pair.
    auto combine_rule(ColorMask f, ColorMask f_prime) -> std::optional<ColorMask>;

    /// Covers every solution colouring x with A. Requires x to be really
    /// 3-colourable for B and C; returns an empty covering when it is not for A.
    auto stubborn_to_3ccp_covering(const EdgeColoring3 & inst, int x, const DerivedCoverings & covs) -> TwoListCovering;

    /// Maps a graph to a covering of the stubborn problem on it with trivial lists.
    using StubbornOracle = std::function<TwoListCovering (const Graph &)>;

    /// A covering of every solution: per colour of the lowest vertex when it is
    /// really 3-colourable, otherwise its at most two colours on a covering of the rest.
    auto ccp_covering_from_stubborn(const EdgeColoring3 & inst, const StubbornOracle & oracle) -> TwoListCovering;

    /// Random separator, extended to all pairs, squared, then turned into a stubborn covering.
    auto separator_stubborn_oracle(std::uint64_t seed) -> StubbornOracle;

    /// One cut (U_k + Y, V_k + Z) per assignment and split partition (U_k, V_k)
    /// of G[X] with U_k the clique, where X, Y, Z hold the lists AB, BC, AC.
    /// Singletons A, B, C go to Z, Y, Y.
    auto ccp_covering_to_separator(const Graph & g, const TwoListCovering & cov) -> CutFamily;

    /// (U ∩ U', V ∪ V') over all pairs of cuts.
    auto square_cut_family(const CutFamily & f) -> CutFamily;
    /// Every clique against every disjoint vertex set inducing a bipartite graph. Exponential.
    auto verify_union_separation(const Graph & g, const CutFamily & f) -> Verdict;

    /// One assignment per cut: U gets A3 A4; W gets A2 A3 if A3 is listed, otherwise A1 A2.
    auto separator_to_stubborn_covering(const StubbornInstance & inst, const CutFamily & f2) -> TwoListCovering;
}

#endif
