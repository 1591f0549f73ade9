#ifndef CSS_GUARD_KERNELS_HH
#define CSS_GUARD_KERNELS_HH 1

#include <css/vertex_set.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace css
{
    /* Hot loops shared by the verifiers and builders. Each kernel comes in an
     * OpenMP version and a plain serial version computing the same value; the
     * serial ones are the reference the tests compare against. Every parallel
     * kernel returns a result that does not depend on scheduling: searches
     * report the smallest matching index, never the first one found. */

    /// Row-major bit matrix, rows padded to whole words.
    class BitRows
    {
        private:
            int _rows = 0;
            int _cols = 0;
            int _words = 0;
            std::vector<std::uint64_t> _data;

        public:
            BitRows() = default;
            BitRows(int rows, int cols);
            /// One row per set; every set must be over a host of size cols.
            static auto from_sets(int cols, std::span<const VertexSet> sets) -> BitRows;

            auto rows() const -> int { return _rows; }
            auto cols() const -> int { return _cols; }
            auto words() const -> int { return _words; }

            auto row(int i) -> std::uint64_t * { return _data.data() + std::size_t(i) * _words; }
            auto row(int i) const -> const std::uint64_t * { return _data.data() + std::size_t(i) * _words; }

            auto test(int i, int j) const -> bool { return (row(i)[j / 64] >> (j % 64)) & 1; }
            auto set(int i, int j) -> void { row(i)[j / 64] |= std::uint64_t(1) << (j % 64); }

            auto operator== (const BitRows &) const -> bool = default;
    };

    /// Smallest i in [0, count) with pred(i), or -1. pred must be safe to call concurrently.
    template <typename Pred_>
    auto first_index_serial(long count, const Pred_ & pred) -> long
    {
        for (long i = 0 ; i < count ; ++i)
            if (pred(i))
                return i;
        return -1;
    }

    template <typename Pred_>
    auto first_index_parallel(long count, const Pred_ & pred) -> long
    {
        long best = count;
#pragma omp parallel for reduction(min:best) schedule(dynamic, 64)
        for (long i = 0 ; i < count ; ++i)
            if (i < best && pred(i))
                best = i;
        return best == count ? -1 : best;
    }

    /// Row j of the result: bit i set when stables[i] avoids cuts[j].
    auto stables_avoiding(const BitRows & stables, const BitRows & cuts) -> BitRows;
    auto stables_avoiding_serial(const BitRows & stables, const BitRows & cuts) -> BitRows;

    /// Linear index i * pending.cols() + j of the first pending (i, j) for which
    /// no cut c has cliques[i] inside c and stables[j] avoiding c, or -1.
    /// avoiding is the output of stables_avoiding.
    auto first_unseparated(const BitRows & cliques, const BitRows & cuts, const BitRows & avoiding,
            const BitRows & pending) -> long;
    auto first_unseparated_serial(const BitRows & cliques, const BitRows & cuts, const BitRows & avoiding,
            const BitRows & pending) -> long;

    /// For each candidate cut, the number of pending (i, j) it separates.
    auto separation_gains(const BitRows & cliques, const BitRows & stables, const BitRows & candidates,
            const BitRows & pending) -> std::vector<long>;
    auto separation_gains_serial(const BitRows & cliques, const BitRows & stables, const BitRows & candidates,
            const BitRows & pending) -> std::vector<long>;

    /// Clears from pending every (i, j) separated by cut, returning how many were cleared.
    auto remove_separated(const BitRows & cliques, const BitRows & stables, std::span<const std::uint64_t> cut,
            BitRows & pending) -> long;
}

#endif
