#include <css/vertex_set.hh>

#include <bit>
#include <stdexcept>

using namespace css;

using std::invalid_argument;
using std::out_of_range;
using std::span;
using std::string;
using std::strong_ordering;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    auto words_for(int n) -> std::size_t
    {
        return (std::size_t(n) + 63) / 64;
    }

    auto check_same_host(const VertexSet & a, const VertexSet & b) -> void
    {
        if (a.host_size() != b.host_size())
            throw invalid_argument("vertex sets over different hosts (" + to_string(a.host_size())
                    + " vs " + to_string(b.host_size()) + ")");
    }
}

VertexSet::VertexSet(int host_n) :
    _host_n(host_n),
    _words(words_for(host_n), 0)
{
    if (host_n < 0)
        throw invalid_argument("negative host size");
}

VertexSet::VertexSet(int host_n, std::initializer_list<int> members) :
    VertexSet(host_n)
{
    for (int v : members)
        insert(v);
}

auto VertexSet::from_members(int host_n, span<const int> members) -> VertexSet
{
    VertexSet result(host_n);
    for (int v : members)
        result.insert(v);
    return result;
}

auto VertexSet::full(int host_n) -> VertexSet
{
    VertexSet result(host_n);
    for (auto & w : result._words)
        w = ~uint64_t(0);
    if (host_n % 64 != 0)
        result._words.back() = (uint64_t(1) << (host_n % 64)) - 1;
    return result;
}

auto VertexSet::contains(int v) const -> bool
{
    if (v < 0 || v >= _host_n)
        return false;
    return (_words[v / 64] >> (v % 64)) & 1;
}

auto VertexSet::insert(int v) -> void
{
    if (v < 0 || v >= _host_n)
        throw out_of_range("vertex " + std::to_string(v) + " outside host of size " + std::to_string(_host_n));
    _words[v / 64] |= uint64_t(1) << (v % 64);
}

auto VertexSet::erase(int v) -> void
{
    if (v < 0 || v >= _host_n)
        throw out_of_range("vertex " + std::to_string(v) + " outside host of size " + std::to_string(_host_n));
    _words[v / 64] &= ~(uint64_t(1) << (v % 64));
}

auto VertexSet::clear() -> void
{
    for (auto & w : _words)
        w = 0;
}

auto VertexSet::count() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    for (auto w : _words)
        if (w)
            return false;
    return true;
}

auto VertexSet::first() const -> int
{
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        if (_words[i])
            return int(i * 64) + std::countr_zero(_words[i]);
    return npos;
}

auto VertexSet::next(int v) const -> int
{
    int start = v + 1;
    if (start >= _host_n)
        return npos;
    std::size_t i = start / 64;
    uint64_t w = _words[i] & (~uint64_t(0) << (start % 64));
    while (true) {
        if (w)
            return int(i * 64) + std::countr_zero(w);
        if (++i == _words.size())
            return npos;
        w = _words[i];
    }
}

auto VertexSet::members() const -> vector<int>
{
    vector<int> result;
    for (int v = first() ; v != npos ; v = next(v))
        result.push_back(v);
    return result;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    check_same_host(*this, other);
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        if (_words[i] & ~other._words[i])
            return false;
    return true;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    check_same_host(*this, other);
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        if (_words[i] & other._words[i])
            return true;
    return false;
}

auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
{
    check_same_host(*this, other);
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        _words[i] &= other._words[i];
    return *this;
}

auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
{
    check_same_host(*this, other);
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        _words[i] |= other._words[i];
    return *this;
}

auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
{
    check_same_host(*this, other);
    for (std::size_t i = 0 ; i < _words.size() ; ++i)
        _words[i] &= ~other._words[i];
    return *this;
}

auto VertexSet::complement() const -> VertexSet
{
    return full(_host_n) - *this;
}

auto VertexSet::to_string() const -> string
{
    string result = "{";
    bool first_member = true;
    for (int v = first() ; v != npos ; v = next(v)) {
        if (! first_member)
            result += ",";
        result += std::to_string(v);
        first_member = false;
    }
    return result + "}";
}

auto VertexSet::operator<=> (const VertexSet & other) const -> strong_ordering
{
    if (auto c = _host_n <=> other._host_n ; c != 0)
        return c;

    // lexicographic on sorted member lists; a proper prefix sorts first
    int a = first(), b = other.first();
    while (a != npos && b != npos) {
        if (a != b)
            return a <=> b;
        a = next(a);
        b = other.next(b);
    }
    if (a == npos && b == npos)
        return strong_ordering::equal;
    return a == npos ? strong_ordering::less : strong_ordering::greater;
}

auto css::operator& (VertexSet a, const VertexSet & b) -> VertexSet
{
    return a &= b;
}

auto css::operator| (VertexSet a, const VertexSet & b) -> VertexSet
{
    return a |= b;
}

auto css::operator- (VertexSet a, const VertexSet & b) -> VertexSet
{
    return a -= b;
}
