#include <css/formats.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

using namespace css;

using std::set;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

ParseError::ParseError(int line, int column, const string & message) :
    std::runtime_error("line " + to_string(line) + (column > 0 ? ", column " + to_string(column) : string()) + ": " + message),
    _line(line),
    _column(column)
{
}

namespace
{
    struct Token
    {
        string_view text;
        int column;
    };

    struct Line
    {
        string_view text;
        int number;

        auto tokens() const -> vector<Token>
        {
            vector<Token> result;
            std::size_t i = 0;
            while (i < text.size()) {
                while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
                    ++i;
                if (i > start)
                    result.push_back(Token{ text.substr(start, i - start), int(start) + 1 });
            }
            return result;
        }

        auto fail(int column, const string & message) const -> ParseError
        {
            return ParseError(number, column, message);
        }
    };

    class Reader
    {
        private:
            vector<Line> _lines;
            std::size_t _pos = 0;

        public:
            explicit Reader(const string & text)
            {
                string_view rest(text);
                int number = 1;
                while (! rest.empty()) {
                    auto nl = rest.find('\n');
                    _lines.push_back(Line{ rest.substr(0, nl), number++ });
                    if (nl == string_view::npos)
                        break;
                    rest.remove_prefix(nl + 1);
                }
            }

            auto skip_comments() -> void
            {
                while (_pos < _lines.size() && (_lines[_pos].text.starts_with("#") || _lines[_pos].tokens().empty()))
                    ++_pos;
            }

            auto at_end() const -> bool { return _pos >= _lines.size(); }

            /// The next line, taken verbatim.
            auto raw() -> Line
            {
                if (at_end())
                    throw ParseError(last_number() + 1, 0, "unexpected end of input");
                return _lines[_pos++];
            }

            /// The next line that is neither blank nor a comment.
            auto content() -> Line
            {
                skip_comments();
                return raw();
            }

            auto expect_end() -> void
            {
                skip_comments();
                if (! at_end())
                    throw ParseError(_lines[_pos].number, 1, "trailing content");
            }

            auto last_number() const -> int { return _lines.empty() ? 0 : _lines.back().number; }
    };

    auto to_int(const Line & line, const Token & t, long lo, long hi, const string & what) -> int
    {
        long value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            throw line.fail(t.column, "expected " + what + ", found '" + string(t.text) + "'");
        if (value < lo || value > hi)
            throw line.fail(t.column, what + " " + to_string(value) + " out of range [" + to_string(lo) + ", " + to_string(hi) + "]");
        return int(value);
    }

    /// Header "<keyword> <a> <b> ...", returning the integer fields.
    auto header(Reader & r, const string & keyword, int fields, Line & line) -> vector<int>
    {
        line = r.content();
        auto t = line.tokens();
        if (t.empty() || t[0].text != keyword)
            throw line.fail(t.empty() ? 0 : t[0].column, "expected '" + keyword + "' header");
        if (int(t.size()) != fields + 1)
            throw line.fail(0, "'" + keyword + "' header takes " + to_string(fields) + " fields");
        vector<int> result;
        for (int i = 1 ; i <= fields ; ++i)
            result.push_back(to_int(line, t[i], 0, 1 << 24, "count"));
        return result;
    }

    auto vertex_list(const Line & line, const vector<Token> & tokens, std::size_t from, int n) -> VertexSet
    {
        VertexSet result(n);
        for (std::size_t i = from ; i < tokens.size() ; ++i) {
            int v = to_int(line, tokens[i], 0, n - 1, "vertex");
            if (result.contains(v))
                throw line.fail(tokens[i].column, "repeated vertex " + to_string(v));
            result.insert(v);
        }
        return result;
    }

    auto list_string(const VertexSet & s) -> string
    {
        string result;
        for (int v = s.first() ; v != VertexSet::npos ; v = s.next(v))
            result += (result.empty() ? "" : " ") + to_string(v);
        return result;
    }

    auto labelled_line(const string & label, const VertexSet & s) -> string
    {
        auto list = list_string(s);
        return label + ":" + (list.empty() ? "" : " " + list) + "\n";
    }

    auto labelled_set(Reader & r, const string & label, int n) -> VertexSet
    {
        auto line = r.content();
        auto t = line.tokens();
        if (t.empty() || t[0].text != label + ":")
            throw line.fail(t.empty() ? 0 : t[0].column, "expected '" + label + ":'");
        return vertex_list(line, t, 1, n);
    }

    auto check_host(const Line & line, int n, const Graph & host) -> void
    {
        if (n != host.size())
            throw line.fail(0, "certificate is over " + to_string(n) + " vertices but the graph has " + to_string(host.size()));
    }

    auto emit_bicliques(const vector<std::pair<VertexSet, VertexSet>> & sides) -> string
    {
        string out;
        for (auto & [a, b] : sides)
            out += labelled_line("A", a) + labelled_line("B", b);
        return out;
    }
}

auto css::emit_graph(const Graph & g) -> string
{
    string out = "graph " + to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + to_string(u) + " " + to_string(v) + "\n";
    return out;
}

auto css::parse_graph(const string & text) -> Graph
{
    Reader r(text);
    Line line;
    int n = header(r, "graph", 1, line)[0];
    Graph g(n);
    while (true) {
        r.skip_comments();
        if (r.at_end())
            break;
        line = r.raw();
        auto t = line.tokens();
        if (t[0].text != "e")
            throw line.fail(t[0].column, "expected 'e'");
        if (t.size() != 3)
            throw line.fail(0, "edge line takes two vertices");
        int u = to_int(line, t[1], 0, n - 1, "vertex"), v = to_int(line, t[2], 0, n - 1, "vertex");
        if (u == v)
            throw line.fail(t[2].column, "loop at vertex " + to_string(u));
        if (g.adjacent(u, v))
            throw line.fail(0, "repeated edge " + to_string(u) + " " + to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

auto css::emit_cuts(const CutFamily & f) -> string
{
    string out = "cuts " + to_string(f.host_n()) + " " + to_string(f.size()) + "\n";
    for (auto & c : f.cuts())
        out += list_string(c.side_a) + "\n";
    return out;
}

auto css::parse_cuts(const string & text) -> CutFamily
{
    Reader r(text);
    Line line;
    auto h = header(r, "cuts", 2, line);
    CutFamily f(h[0]);
    for (int i = 0 ; i < h[1] ; ++i) {
        line = r.raw();
        if (! f.add(vertex_list(line, line.tokens(), 0, h[0])))
            throw line.fail(0, "repeated cut");
    }
    r.expect_end();
    return f;
}

auto css::emit_hypergraph(const Hypergraph & h) -> string
{
    string out = "hgraph " + to_string(h.n) + " " + to_string(h.edges.size()) + "\n";
    for (auto & e : h.edges)
        out += list_string(e) + "\n";
    return out;
}

auto css::parse_hypergraph(const string & text) -> Hypergraph
{
    Reader r(text);
    Line line;
    auto h = header(r, "hgraph", 2, line);
    Hypergraph result{ h[0], {} };
    for (int i = 0 ; i < h[1] ; ++i) {
        line = r.raw();
        result.edges.push_back(vertex_list(line, line.tokens(), 0, h[0]));
    }
    r.expect_end();
    return result;
}

auto css::emit_packing(const PackingCertificate & cert) -> string
{
    vector<std::pair<VertexSet, VertexSet>> sides;
    for (auto & b : cert.bicliques)
        sides.emplace_back(b.a_side, b.b_side);
    return "packing " + to_string(cert.host.size()) + " " + to_string(cert.bicliques.size()) + "\n" + emit_bicliques(sides);
}

auto css::parse_packing(const string & text, const Graph & host) -> PackingCertificate
{
    Reader r(text);
    Line line;
    auto h = header(r, "packing", 2, line);
    check_host(line, h[0], host);
    PackingCertificate cert{ host, {} };
    for (int i = 0 ; i < h[1] ; ++i) {
        auto a = labelled_set(r, "A", h[0]);
        auto b = labelled_set(r, "B", h[0]);
        cert.bicliques.push_back(OrientedBiclique{ a, b });
    }
    r.expect_end();
    return cert;
}

auto css::emit_covering(const BicliqueCovering & cov) -> string
{
    vector<std::pair<VertexSet, VertexSet>> sides;
    for (auto & b : cov.bicliques)
        sides.emplace_back(b.left, b.right);
    return "packing " + to_string(cov.host.size()) + " " + to_string(cov.bicliques.size()) + " t " + to_string(cov.t) + "\n"
        + emit_bicliques(sides);
}

auto css::parse_covering(const string & text, const Graph & host) -> BicliqueCovering
{
    Reader r(text);
    auto line = r.content();
    auto t = line.tokens();
    if (t.size() != 5 || t[0].text != "packing" || t[3].text != "t")
        throw line.fail(0, "expected 'packing <n> <k> t <t>' header");
    int n = to_int(line, t[1], 0, 1 << 24, "count");
    int k = to_int(line, t[2], 0, 1 << 24, "count");
    int mult = to_int(line, t[4], 1, 1 << 24, "multiplicity");
    check_host(line, n, host);
    BicliqueCovering cov{ host, {}, mult };
    for (int i = 0 ; i < k ; ++i) {
        auto a = labelled_set(r, "A", n);
        auto b = labelled_set(r, "B", n);
        cov.bicliques.push_back(Biclique{ a, b });
    }
    r.expect_end();
    return cov;
}

auto css::emit_fooling(const FoolingSet & fs) -> string
{
    string out = "fooling " + to_string(fs.host.size()) + " " + to_string(fs.pairs.size()) + "\n";
    for (auto & p : fs.pairs)
        out += labelled_line("K", p.clique) + labelled_line("S", p.stable);
    return out;
}

auto css::parse_fooling(const string & text, const Graph & host) -> FoolingSet
{
    Reader r(text);
    Line line;
    auto h = header(r, "fooling", 2, line);
    check_host(line, h[0], host);
    FoolingSet fs{ host, {} };
    for (int i = 0 ; i < h[1] ; ++i) {
        auto k = labelled_set(r, "K", h[0]);
        auto s = labelled_set(r, "S", h[0]);
        fs.pairs.push_back(CliqueStablePair{ k, s });
    }
    r.expect_end();
    return fs;
}

auto css::emit_ccp(const EdgeColoring3 & inst) -> string
{
    string out = "ccp " + to_string(inst.size()) + "\n";
    for (int u = 0 ; u < inst.size() ; ++u)
        for (int v = u + 1 ; v < inst.size() ; ++v)
            out += to_string(u) + " " + to_string(v) + " " + char('A' + inst.color(u, v)) + "\n";
    return out;
}

auto css::parse_ccp(const string & text) -> EdgeColoring3
{
    Reader r(text);
    Line line;
    int n = header(r, "ccp", 1, line)[0];
    EdgeColoring3 inst(n);
    set<std::pair<int, int>> seen;
    long pairs = long(n) * (n - 1) / 2;
    for (long i = 0 ; i < pairs ; ++i) {
        line = r.content();
        auto t = line.tokens();
        if (t.size() != 3)
            throw line.fail(0, "expected '<u> <v> <A|B|C>'");
        int u = to_int(line, t[0], 0, n - 1, "vertex"), v = to_int(line, t[1], 0, n - 1, "vertex");
        if (u == v)
            throw line.fail(t[1].column, "loop at vertex " + to_string(u));
        if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw line.fail(0, "repeated pair " + to_string(u) + " " + to_string(v));
        if (t[2].text.size() != 1 || t[2].text[0] < 'A' || t[2].text[0] > 'C')
            throw line.fail(t[2].column, "expected colour A, B or C");
        inst.set_color(u, v, t[2].text[0] - 'A');
    }
    r.expect_end();
    return inst;
}

namespace
{
    auto list_line(ColorMask m, int colors) -> string
    {
        return mask_string(m, colors) + "\n";
    }

    auto parse_list_body(Reader & r, int n, int colors) -> ListAssignment
    {
        ListAssignment la{ vector<ColorMask>(n, 0) };
        for (int v = 0 ; v < n ; ++v) {
            auto line = r.raw();
            auto t = line.tokens();
            if (t.size() != 1)
                throw line.fail(0, "expected one list of colours");
            for (std::size_t i = 0 ; i < t[0].text.size() ; ++i) {
                char ch = t[0].text[i];
                int c = colors == ccp_colors ? ch - 'A' : ch - '1';
                if (c < 0 || c >= colors)
                    throw line.fail(t[0].column + int(i), string("unknown colour '") + ch + "'");
                if (la.lists[v] & bit(c))
                    throw line.fail(t[0].column + int(i), string("repeated colour '") + ch + "'");
                la.lists[v] |= bit(c);
            }
        }
        return la;
    }

    auto check_colors(int colors) -> void
    {
        if (colors != ccp_colors && colors != stubborn_colors)
            throw CspError("colour universe must have 3 or 4 colours");
    }
}

auto css::emit_lists(const ListAssignment & la, int colors) -> string
{
    check_colors(colors);
    string out = "lists " + to_string(la.lists.size()) + "\n";
    for (auto m : la.lists)
        out += list_line(m, colors);
    return out;
}

auto css::parse_lists(const string & text, int colors) -> ListAssignment
{
    check_colors(colors);
    Reader r(text);
    Line line;
    int n = header(r, "lists", 1, line)[0];
    auto la = parse_list_body(r, n, colors);
    r.expect_end();
    return la;
}

auto css::emit_two_list_covering(const TwoListCovering & cov) -> string
{
    string out;
    for (std::size_t i = 0 ; i < cov.assignments.size() ; ++i) {
        if (i > 0)
            out += "--\n";
        out += emit_lists(cov.assignments[i], cov.colors);
    }
    return out;
}

auto css::parse_two_list_covering(const string & text, int n, int colors) -> TwoListCovering
{
    check_colors(colors);
    Reader r(text);
    TwoListCovering cov{ n, colors, {} };
    r.skip_comments();
    while (! r.at_end()) {
        if (! cov.assignments.empty()) {
            auto sep = r.content();
            if (sep.text != "--")
                throw sep.fail(1, "expected '--' between assignments");
        }
        Line line;
        int m = header(r, "lists", 1, line)[0];
        if (m != n)
            throw line.fail(0, "assignment over " + to_string(m) + " vertices, expected " + to_string(n));
        cov.assignments.push_back(parse_list_body(r, n, colors));
        r.skip_comments();
    }
    return cov;
}

auto css::emit_coloring(const Coloring & c) -> string
{
    string out = "coloring " + to_string(c.colors.size()) + "\n";
    for (int x : c.colors)
        out += to_string(x) + "\n";
    return out;
}

auto css::parse_coloring(const string & text) -> Coloring
{
    Reader r(text);
    Line line;
    int n = header(r, "coloring", 1, line)[0];
    Coloring c{ vector<int>(n), 0 };
    for (int v = 0 ; v < n ; ++v) {
        line = r.content();
        auto t = line.tokens();
        if (t.size() != 1)
            throw line.fail(0, "expected one colour");
        c.colors[v] = to_int(line, t[0], 0, 1 << 24, "colour");
        c.palette = std::max(c.palette, c.colors[v] + 1);
    }
    r.expect_end();
    return c;
}

auto css::read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

auto css::write_file(const string & path, const string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out || ! (out << text))
        throw std::runtime_error("cannot write " + path);
}
