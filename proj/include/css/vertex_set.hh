#ifndef CSS_GUARD_VERTEX_SET_HH
#define CSS_GUARD_VERTEX_SET_HH 1

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace css
{
    /* A subset of [0, n) for some host graph on n vertices, stored as a
     * packed bitset. The host size is part of the value: two sets over
     * different hosts never compare equal. Ordering is lexicographic on
     * the sorted member lists, which is what every canonical output in
     * this library is sorted by. */
    class VertexSet
    {
        private:
            int _host_n = 0;
            std::vector<std::uint64_t> _words;

        public:
            static constexpr int npos = -1;

            VertexSet() = default;
            explicit VertexSet(int host_n);
            VertexSet(int host_n, std::initializer_list<int> members);

            static auto from_members(int host_n, std::span<const int> members) -> VertexSet;
            static auto full(int host_n) -> VertexSet;

            auto host_size() const -> int { return _host_n; }
            auto word_count() const -> int { return int(_words.size()); }
            auto words() const -> std::span<const std::uint64_t> { return _words; }

            auto contains(int v) const -> bool;
            auto insert(int v) -> void;
            auto erase(int v) -> void;
            auto clear() -> void;

            auto count() const -> int;
            auto empty() const -> bool;

            /// First member, or npos.
            auto first() const -> int;
            /// Smallest member strictly greater than v, or npos.
            auto next(int v) const -> int;
            auto members() const -> std::vector<int>;

            auto is_subset_of(const VertexSet & other) const -> bool;
            auto intersects(const VertexSet & other) const -> bool;

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;
            auto operator-= (const VertexSet & other) -> VertexSet &;

            /// Complement within the host.
            auto complement() const -> VertexSet;

            auto to_string() const -> std::string;

            auto operator== (const VertexSet & other) const -> bool = default;
            auto operator<=> (const VertexSet & other) const -> std::strong_ordering;
    };

    auto operator& (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator| (VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator- (VertexSet a, const VertexSet & b) -> VertexSet;
}

#endif
