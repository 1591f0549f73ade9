#ifndef CSS_GUARD_SEPARATOR_HH
#define CSS_GUARD_SEPARATOR_HH 1

#include <css/graph.hh>
#include <css/vertex_set.hh>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace css
{
    /* A cut (A, B) of V. Only A is stored; B is its complement in the host. */
    struct Cut
    {
        VertexSet side_a;

        auto side_b() const -> VertexSet { return side_a.complement(); }

        auto operator== (const Cut &) const -> bool = default;
        auto operator<=> (const Cut &) const = default;
    };

    /* An ordered list of distinct cuts over a fixed host size. Adding a cut
     * that is already present is a no-op, so insertion order is kept and
     * duplicates never appear. */
    class CutFamily
    {
        private:
            int _host_n = 0;
            std::vector<Cut> _cuts;
            std::set<VertexSet> _seen;

        public:
            explicit CutFamily(int host_n = 0);

            auto host_n() const -> int { return _host_n; }
            auto size() const -> int { return int(_cuts.size()); }
            auto empty() const -> bool { return _cuts.empty(); }
            auto cuts() const -> const std::vector<Cut> & { return _cuts; }
            auto operator[] (int i) const -> const Cut & { return _cuts.at(i); }

            /// Returns false if the cut was already present.
            auto add(const Cut & c) -> bool;
            auto add(const VertexSet & side_a) -> bool { return add(Cut{ side_a }); }
            auto append(const CutFamily & other) -> void;

            auto operator== (const CutFamily & other) const -> bool
            {
                return _host_n == other._host_n && _cuts == other._cuts;
            }
    };

    /// A clique and a stable set, disjoint.
    struct CliqueStablePair
    {
        VertexSet clique;
        VertexSet stable;

        auto operator== (const CliqueStablePair &) const -> bool = default;
        auto operator<=> (const CliqueStablePair &) const = default;
    };

    struct SeparationReport
    {
        bool ok = true;
        std::optional<CliqueStablePair> witness;
        long pairs_checked = 0;

        auto operator== (const SeparationReport &) const -> bool = default;
    };

    class SeparatorError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    auto separates(const Cut & c, const VertexSet & k, const VertexSet & s) -> bool;

    /// Disjoint (maximal clique, maximal stable set) pairs, ordered by
    /// (index of the clique, index of the stable set) in the sorted lists.
    auto disjoint_maximal_pairs(const Graph & g) -> std::vector<CliqueStablePair>;

    /// Checks every disjoint maximal pair. The witness on failure is the
    /// first unseparated pair in the order of disjoint_maximal_pairs.
    auto verify_cs_separator(const Graph & g, const CutFamily & f) -> SeparationReport;
    auto verify_cs_separator_serial(const Graph & g, const CutFamily & f) -> SeparationReport;

    /// Same, over every disjoint (clique, stable set) pair including empty and
    /// non-maximal ones. Exponential; for small graphs.
    auto verify_all_pairs(const Graph & g, const CutFamily & f) -> SeparationReport;

    /// f plus (N[x], V \ N[x]) and (N(x), V \ N(x)) for every x.
    auto extend_to_full_separator(const Graph & g, const CutFamily & f) -> CutFamily;

    struct RandomSeparatorResult
    {
        CutFamily family;
        std::uint64_t rounds = 0;
        long pairs_total = 0;
        long pairs_remaining = 0;
        bool complete = false;
    };

    /// 2 n^7, saturating.
    auto default_max_rounds(int n) -> std::uint64_t;

    inline constexpr int candidates_per_round = 32;

    /// Greedy random-cut construction over the disjoint maximal pairs. Each
    /// round draws candidates_per_round cuts, putting each vertex on side A
    /// with probability p, and keeps the first one covering the most pairs
    /// still uncovered. Rounds covering nothing add no cut.
    auto build_random_separator(const Graph & g, double p, std::uint64_t seed, std::uint64_t max_rounds) -> RandomSeparatorResult;
    auto build_random_separator_serial(const Graph & g, double p, std::uint64_t seed, std::uint64_t max_rounds) -> RandomSeparatorResult;

    struct AppendixBound
    {
        double omega = 0;
        double alpha = 0;
        /// log2 of p^omega (1-p)^alpha
        double log2_value = 0;
        /// e such that the value equals n^-e
        double exponent = 0;
        bool ok = false;
        /// 2 log_{1/(1-p)} n < 2, where alpha is at most 3 and all cuts with |U| <= 3 suffice
        bool small_alpha_fallback = false;
    };

    /// Evaluates the expectation-one clique and independence numbers of
    /// G(n, p) without their o(1) terms and checks p^omega (1-p)^alpha >= n^-6,
    /// in log space with relative slack 1e-9.
    auto check_appendix_bound(double n, double p) -> AppendixBound;

    /// Every cut (U, V \ U) with |U| <= 3.
    auto small_side_family(int n) -> CutFamily;
}

#endif
