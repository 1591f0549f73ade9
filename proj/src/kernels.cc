#include <css/kernels.hh>

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace css;

using std::span;
using std::uint64_t;
using std::vector;

namespace
{
    auto subset(const uint64_t * a, const uint64_t * b, int words) -> bool
    {
        for (int w = 0 ; w < words ; ++w)
            if (a[w] & ~b[w])
                return false;
        return true;
    }

    auto disjoint(const uint64_t * a, const uint64_t * b, int words) -> bool
    {
        for (int w = 0 ; w < words ; ++w)
            if (a[w] & b[w])
                return false;
        return true;
    }

    auto fill_avoiding_row(const BitRows & stables, const uint64_t * cut, uint64_t * out) -> void
    {
        for (int i = 0 ; i < stables.rows() ; ++i)
            if (disjoint(stables.row(i), cut, stables.words()))
                out[i / 64] |= uint64_t(1) << (i % 64);
    }

    auto check_shapes(const BitRows & cliques, const BitRows & stables, const BitRows & pending) -> void
    {
        if (cliques.cols() != stables.cols() || pending.rows() != cliques.rows() || pending.cols() != stables.rows())
            throw std::invalid_argument("kernel operands have inconsistent shapes");
    }

    // pending pairs in row i separated by one cut, given that cut's avoiding mask
    auto row_gain(const uint64_t * pending_row, const uint64_t * avoid, int words) -> long
    {
        long result = 0;
        for (int w = 0 ; w < words ; ++w)
            result += std::popcount(pending_row[w] & avoid[w]);
        return result;
    }

    auto candidate_gain(const BitRows & cliques, const BitRows & stables, const uint64_t * cut,
            const BitRows & pending, vector<uint64_t> & avoid) -> long
    {
        std::fill(avoid.begin(), avoid.end(), 0);
        fill_avoiding_row(stables, cut, avoid.data());
        long total = 0;
        for (int i = 0 ; i < cliques.rows() ; ++i)
            if (subset(cliques.row(i), cut, cliques.words()))
                total += row_gain(pending.row(i), avoid.data(), pending.words());
        return total;
    }
}

BitRows::BitRows(int rows, int cols) :
    _rows(rows),
    _cols(cols),
    _words((cols + 63) / 64),
    _data(std::size_t(rows) * _words, 0)
{
}

auto BitRows::from_sets(int cols, span<const VertexSet> sets) -> BitRows
{
    BitRows result(int(sets.size()), cols);
    for (int i = 0 ; i < result.rows() ; ++i) {
        if (sets[i].host_size() != cols)
            throw std::invalid_argument("rows over different hosts");
        auto w = sets[i].words();
        std::copy(w.begin(), w.end(), result.row(i));
    }
    return result;
}

auto css::stables_avoiding(const BitRows & stables, const BitRows & cuts) -> BitRows
{
    BitRows result(cuts.rows(), stables.rows());
#pragma omp parallel for schedule(static)
    for (int c = 0 ; c < cuts.rows() ; ++c)
        fill_avoiding_row(stables, cuts.row(c), result.row(c));
    return result;
}

auto css::stables_avoiding_serial(const BitRows & stables, const BitRows & cuts) -> BitRows
{
    BitRows result(cuts.rows(), stables.rows());
    for (int c = 0 ; c < cuts.rows() ; ++c)
        fill_avoiding_row(stables, cuts.row(c), result.row(c));
    return result;
}

namespace
{
    // first j in row i of pending left unseparated by every cut, or -1
    auto first_in_row(const BitRows & cliques, const BitRows & cuts, const BitRows & avoiding,
            const BitRows & pending, int i, vector<uint64_t> & covered) -> long
    {
        std::fill(covered.begin(), covered.end(), 0);
        for (int c = 0 ; c < cuts.rows() ; ++c)
            if (subset(cliques.row(i), cuts.row(c), cliques.words())) {
                const uint64_t * a = avoiding.row(c);
                for (int w = 0 ; w < pending.words() ; ++w)
                    covered[w] |= a[w];
            }
        const uint64_t * p = pending.row(i);
        for (int w = 0 ; w < pending.words() ; ++w)
            if (uint64_t left = p[w] & ~covered[w])
                return long(w) * 64 + std::countr_zero(left);
        return -1;
    }
}

auto css::first_unseparated(const BitRows & cliques, const BitRows & cuts, const BitRows & avoiding,
        const BitRows & pending) -> long
{
    long rows = cliques.rows();
    long best = rows * pending.cols();
    long none = best;
#pragma omp parallel
    {
        vector<uint64_t> covered(pending.words());
#pragma omp for reduction(min:best) schedule(dynamic, 4)
        for (long i = 0 ; i < rows ; ++i) {
            if (i * pending.cols() >= best)
                continue;
            long j = first_in_row(cliques, cuts, avoiding, pending, int(i), covered);
            if (j >= 0)
                best = std::min(best, i * pending.cols() + j);
        }
    }
    return best == none ? -1 : best;
}

auto css::first_unseparated_serial(const BitRows & cliques, const BitRows & cuts, const BitRows & avoiding,
        const BitRows & pending) -> long
{
    vector<uint64_t> covered(pending.words());
    for (int i = 0 ; i < cliques.rows() ; ++i) {
        long j = first_in_row(cliques, cuts, avoiding, pending, i, covered);
        if (j >= 0)
            return long(i) * pending.cols() + j;
    }
    return -1;
}

auto css::separation_gains(const BitRows & cliques, const BitRows & stables, const BitRows & candidates,
        const BitRows & pending) -> vector<long>
{
    check_shapes(cliques, stables, pending);
    vector<long> result(candidates.rows(), 0);
#pragma omp parallel
    {
        vector<uint64_t> avoid(pending.words());
#pragma omp for schedule(dynamic, 1)
        for (int c = 0 ; c < candidates.rows() ; ++c)
            result[c] = candidate_gain(cliques, stables, candidates.row(c), pending, avoid);
    }
    return result;
}

auto css::separation_gains_serial(const BitRows & cliques, const BitRows & stables, const BitRows & candidates,
        const BitRows & pending) -> vector<long>
{
    check_shapes(cliques, stables, pending);
    vector<long> result(candidates.rows(), 0);
    vector<uint64_t> avoid(pending.words());
    for (int c = 0 ; c < candidates.rows() ; ++c)
        result[c] = candidate_gain(cliques, stables, candidates.row(c), pending, avoid);
    return result;
}

auto css::remove_separated(const BitRows & cliques, const BitRows & stables, span<const uint64_t> cut,
        BitRows & pending) -> long
{
    check_shapes(cliques, stables, pending);
    vector<uint64_t> avoid(pending.words(), 0);
    fill_avoiding_row(stables, cut.data(), avoid.data());
    long removed = 0;
    for (int i = 0 ; i < cliques.rows() ; ++i)
        if (subset(cliques.row(i), cut.data(), cliques.words())) {
            uint64_t * p = pending.row(i);
            for (int w = 0 ; w < pending.words() ; ++w) {
                removed += std::popcount(p[w] & avoid[w]);
                p[w] &= ~avoid[w];
            }
        }
    return removed;
}
