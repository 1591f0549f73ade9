#include <css/separator.hh>
#include <css/kernels.hh>
#include <css/rng.hh>

#include <cmath>
#include <limits>
#include <string>

using namespace css;

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

CutFamily::CutFamily(int host_n) :
    _host_n(host_n)
{
    if (host_n < 0)
        throw SeparatorError("negative host size");
}

auto CutFamily::add(const Cut & c) -> bool
{
    if (c.side_a.host_size() != _host_n)
        throw SeparatorError("cut over a host of size " + to_string(c.side_a.host_size())
                + " added to a family over " + to_string(_host_n));
    if (! _seen.insert(c.side_a).second)
        return false;
    _cuts.push_back(c);
    return true;
}

auto CutFamily::append(const CutFamily & other) -> void
{
    for (auto & c : other.cuts())
        add(c);
}

auto css::separates(const Cut & c, const VertexSet & k, const VertexSet & s) -> bool
{
    return k.is_subset_of(c.side_a) && ! s.intersects(c.side_a);
}

auto css::disjoint_maximal_pairs(const Graph & g) -> vector<CliqueStablePair>
{
    auto cliques = maximal_cliques(g);
    auto stables = maximal_stables(g);
    vector<CliqueStablePair> result;
    for (auto & k : cliques)
        for (auto & s : stables)
            if (! k.intersects(s))
                result.push_back(CliqueStablePair{ k, s });
    return result;
}

namespace
{
    struct PairTables
    {
        BitRows cliques, stables, pending;
        long pairs = 0;
    };

    auto make_tables(int n, const vector<VertexSet> & cliques, const vector<VertexSet> & stables) -> PairTables
    {
        PairTables t{ BitRows::from_sets(n, cliques), BitRows::from_sets(n, stables),
            BitRows(int(cliques.size()), int(stables.size())), 0 };
        for (int i = 0 ; i < int(cliques.size()) ; ++i)
            for (int j = 0 ; j < int(stables.size()) ; ++j)
                if (! cliques[i].intersects(stables[j])) {
                    t.pending.set(i, j);
                    ++t.pairs;
                }
        return t;
    }

    auto cut_rows(const CutFamily & f) -> BitRows
    {
        vector<VertexSet> sides;
        for (auto & c : f.cuts())
            sides.push_back(c.side_a);
        return BitRows::from_sets(f.host_n(), sides);
    }

    auto check_host(const Graph & g, const CutFamily & f) -> void
    {
        if (f.host_n() != g.size())
            throw SeparatorError("cut family over " + to_string(f.host_n()) + " vertices checked against a graph on "
                    + to_string(g.size()));
    }

    auto verify_over(const Graph & g, const CutFamily & f, const vector<VertexSet> & cliques,
            const vector<VertexSet> & stables, bool parallel) -> SeparationReport
    {
        check_host(g, f);
        auto t = make_tables(g.size(), cliques, stables);
        auto cuts = cut_rows(f);
        long first;
        if (parallel)
            first = first_unseparated(t.cliques, cuts, stables_avoiding(t.stables, cuts), t.pending);
        else
            first = first_unseparated_serial(t.cliques, cuts, stables_avoiding_serial(t.stables, cuts), t.pending);

        SeparationReport report;
        report.pairs_checked = t.pairs;
        if (first >= 0) {
            report.ok = false;
            report.witness = CliqueStablePair{ cliques[first / t.pending.cols()], stables[first % t.pending.cols()] };
        }
        return report;
    }
}

auto css::verify_cs_separator(const Graph & g, const CutFamily & f) -> SeparationReport
{
    return verify_over(g, f, maximal_cliques(g), maximal_stables(g), true);
}

auto css::verify_cs_separator_serial(const Graph & g, const CutFamily & f) -> SeparationReport
{
    return verify_over(g, f, maximal_cliques(g), maximal_stables(g), false);
}

auto css::verify_all_pairs(const Graph & g, const CutFamily & f) -> SeparationReport
{
    return verify_over(g, f, all_cliques(g), all_stables(g), true);
}

auto css::extend_to_full_separator(const Graph & g, const CutFamily & f) -> CutFamily
{
    check_host(g, f);
    CutFamily result = f;
    for (int x = 0 ; x < g.size() ; ++x)
        result.add(g.closed_neighborhood(x));
    for (int x = 0 ; x < g.size() ; ++x)
        result.add(g.neighborhood(x));
    return result;
}

auto css::default_max_rounds(int n) -> uint64_t
{
    uint64_t result = 2;
    for (int i = 0 ; i < 7 ; ++i) {
        if (n != 0 && result > std::numeric_limits<uint64_t>::max() / uint64_t(n))
            return std::numeric_limits<uint64_t>::max();
        result *= uint64_t(n);
    }
    return result;
}

namespace
{
    auto random_separator(const Graph & g, double p, uint64_t seed, uint64_t max_rounds, bool parallel) -> RandomSeparatorResult
    {
        if (g.size() == 0)
            throw SeparatorError("random separator needs a nonempty graph");
        if (! (p >= 0.0 && p <= 1.0))
            throw SeparatorError("cut probability must lie in [0, 1]");

        int n = g.size();
        auto cliques = maximal_cliques(g);
        auto stables = maximal_stables(g);
        auto t = make_tables(n, cliques, stables);

        RandomSeparatorResult result{ CutFamily(n), 0, t.pairs, t.pairs, false };
        SplitMix64 rng(seed);
        BitRows candidates(candidates_per_round, n);

        while (result.pairs_remaining > 0 && result.rounds < max_rounds) {
            ++result.rounds;
            candidates = BitRows(candidates_per_round, n);
            for (int c = 0 ; c < candidates_per_round ; ++c)
                for (int v = 0 ; v < n ; ++v)
                    if (rng.bernoulli(p))
                        candidates.set(c, v);

            auto gains = parallel ? separation_gains(t.cliques, t.stables, candidates, t.pending)
                : separation_gains_serial(t.cliques, t.stables, candidates, t.pending);
            int best = 0;
            for (int c = 1 ; c < candidates_per_round ; ++c)
                if (gains[c] > gains[best])
                    best = c;
            if (gains[best] == 0)
                continue;

            std::span<const uint64_t> row(candidates.row(best), candidates.words());
            result.pairs_remaining -= remove_separated(t.cliques, t.stables, row, t.pending);
            VertexSet side(n);
            for (int v = 0 ; v < n ; ++v)
                if (candidates.test(best, v))
                    side.insert(v);
            result.family.add(side);
        }

        result.complete = result.pairs_remaining == 0;
        return result;
    }
}

auto css::build_random_separator(const Graph & g, double p, uint64_t seed, uint64_t max_rounds) -> RandomSeparatorResult
{
    return random_separator(g, p, seed, max_rounds, true);
}

auto css::build_random_separator_serial(const Graph & g, double p, uint64_t seed, uint64_t max_rounds) -> RandomSeparatorResult
{
    return random_separator(g, p, seed, max_rounds, false);
}

auto css::check_appendix_bound(double n, double p) -> AppendixBound
{
    if (! (p > 0.0 && p < 1.0))
        throw SeparatorError("p must lie strictly between 0 and 1");
    if (! (n >= 3.0))
        throw SeparatorError("n must be at least 3");

    double log_b_n = std::log(n) / -std::log(p);
    double log_bp_n = std::log(n) / -std::log1p(-p);
    if (! (log_b_n > 1.0))
        throw SeparatorError("log_b n must exceed 1 (n = " + std::to_string(n) + ", p = " + std::to_string(p) + ")");

    auto threshold = [] (double log_base_n, double log_base) {
        // 2 log_c n - 2 log_c log_c n + 2 log_c (e/2) + 1, with log_base = ln c
        return 2.0 * log_base_n - 2.0 * std::log(log_base_n) / log_base + 2.0 * (1.0 - std::log(2.0)) / log_base + 1.0;
    };

    AppendixBound result;
    result.omega = threshold(log_b_n, -std::log(p));
    result.alpha = threshold(log_bp_n, -std::log1p(-p));
    result.log2_value = result.omega * std::log2(p) + result.alpha * std::log2(1.0 - p);
    result.exponent = -result.log2_value / std::log2(n);

    double limit = -6.0 * std::log2(n);
    result.ok = result.log2_value >= limit - 1e-9 * std::abs(limit);
    result.small_alpha_fallback = 2.0 * log_bp_n < 2.0;
    return result;
}

auto css::small_side_family(int n) -> CutFamily
{
    CutFamily result(n);
    result.add(VertexSet(n));
    for (int a = 0 ; a < n ; ++a)
        result.add(VertexSet(n, { a }));
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            result.add(VertexSet(n, { a, b }));
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            for (int c = b + 1 ; c < n ; ++c)
                result.add(VertexSet(n, { a, b, c }));
    return result;
}
