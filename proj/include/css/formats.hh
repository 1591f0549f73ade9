#ifndef CSS_GUARD_FORMATS_HH
#define CSS_GUARD_FORMATS_HH 1

#include <css/csp.hh>
#include <css/graph.hh>
#include <css/packing.hh>
#include <css/separator.hh>
#include <css/transversal.hh>

#include <stdexcept>
#include <string>

namespace css
{
    /* A malformed certificate file. line and column are 1-based; column 0
     * means the whole line. */
    class ParseError : public std::runtime_error
    {
        private:
            int _line, _column;

        public:
            ParseError(int line, int column, const std::string & message);

            auto line() const -> int { return _line; }
            auto column() const -> int { return _column; }
    };

    /* Every emitter produces the canonical form, and parsing a canonical
     * form then emitting it reproduces it byte for byte. Lines starting
     * with '#' are comments, except inside cut and list bodies. */

    /// "graph <n>" then "e <u> <v>" per edge, u < v, lexicographic.
    auto emit_graph(const Graph & g) -> std::string;
    auto parse_graph(const std::string & text) -> Graph;

    /// "cuts <n> <m>" then one line per cut listing side A; an empty line is the empty side.
    auto emit_cuts(const CutFamily & f) -> std::string;
    auto parse_cuts(const std::string & text) -> CutFamily;

    /// "hgraph <n> <m>" then one line per hyperedge.
    auto emit_hypergraph(const Hypergraph & h) -> std::string;
    auto parse_hypergraph(const std::string & text) -> Hypergraph;

    /// "packing <n> <k>" then "A: ..." and "B: ..." per biclique.
    auto emit_packing(const PackingCertificate & cert) -> std::string;
    auto parse_packing(const std::string & text, const Graph & host) -> PackingCertificate;

    /// "packing <n> <k> t <t>" then "A: ..." and "B: ..." per biclique.
    auto emit_covering(const BicliqueCovering & cov) -> std::string;
    auto parse_covering(const std::string & text, const Graph & host) -> BicliqueCovering;

    /// "fooling <n> <m>" then "K: ..." and "S: ..." per pair.
    auto emit_fooling(const FoolingSet & fs) -> std::string;
    auto parse_fooling(const std::string & text, const Graph & host) -> FoolingSet;

    /// "ccp <n>" then "<u> <v> <A|B|C>" per pair u < v, lexicographic.
    auto emit_ccp(const EdgeColoring3 & inst) -> std::string;
    auto parse_ccp(const std::string & text) -> EdgeColoring3;

    /// "lists <n>" then one line of colour letters per vertex: A B C, or 1 2 3 4 for the stubborn problem.
    auto emit_lists(const ListAssignment & la, int colors) -> std::string;
    auto parse_lists(const std::string & text, int colors) -> ListAssignment;

    /// Assignments in "lists" form separated by "--" lines.
    auto emit_two_list_covering(const TwoListCovering & cov) -> std::string;
    auto parse_two_list_covering(const std::string & text, int n, int colors) -> TwoListCovering;

    /// "coloring <n>" then one colour per line; the palette is one more than the largest.
    auto emit_coloring(const Coloring & c) -> std::string;
    auto parse_coloring(const std::string & text) -> Coloring;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, const std::string & text) -> void;
}

#endif
