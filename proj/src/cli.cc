#include <css/cli.hh>
#include <css/csp.hh>
#include <css/formats.hh>
#include <css/graph.hh>
#include <css/packing.hh>
#include <css/pipelines.hh>
#include <css/report.hh>
#include <css/separator.hh>
#include <css/simplex.hh>
#include <css/transversal.hh>

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace css;

using std::function;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    /// Raised by a command to report a certificate violation.
    struct Violation
    {
        string witness;
    };

    auto default_seed() -> uint64_t
    {
        if (const char * s = std::getenv("CSS_SEED")) {
            try {
                return std::stoull(s);
            }
            catch (const std::exception &) {
                throw std::invalid_argument(string("CSS_SEED is not an unsigned integer: ") + s);
            }
        }
        return 1;
    }

    struct Options
    {
        string in1, in2, in3;
        string output, aux_output;
        int n = 0;
        double p = 0.5;
        double density = 0.3;
        uint64_t seed = 1;
        uint64_t max_rounds = 0;
        int k = 5;
        double tk = 0.25;
        int cap = 8;
        int t = 2;
        int d = 1;
        string tau = "1";
        double big_n = 1e6;
    };

    struct Context
    {
        Options & o;
        RunReport & report;
        std::ostream & out;

        auto load(const string & path) -> string
        {
            auto text = read_file(path);
            report.add_input(path, text);
            return text;
        }

        auto graph(const string & path) -> Graph { return parse_graph(load(path)); }

        auto write(const string & text) -> void
        {
            if (! o.output.empty())
                write_file(o.output, text);
        }

        auto check(const Verdict & v) -> void
        {
            if (! v)
                throw Violation{ v.kind + ": " + v.detail };
        }

        auto check(const SeparationReport & r) -> void
        {
            report.metric("pairs_checked", r.pairs_checked);
            if (! r.ok)
                throw Violation{ "unseparated-pair: K=" + r.witness->clique.to_string() + " S=" + r.witness->stable.to_string() };
        }

        auto check(bool ok, const string & witness) -> void
        {
            if (! ok)
                throw Violation{ witness };
        }
    };

    using Action = function<void (Context &)>;

    struct Registry
    {
        Options & o;
        vector<std::pair<CLI::App *, Action>> leaves;
        std::map<CLI::App *, string> names;

        auto leaf(CLI::App * parent, const string & name, const string & help, Action action) -> CLI::App *
        {
            auto sub = parent->add_subcommand(name, help);
            leaves.emplace_back(sub, std::move(action));
            names[sub] = parent->get_name() + " " + name;
            return sub;
        }

        auto files(CLI::App * sub, std::initializer_list<std::pair<const char *, const char *>> args) -> void
        {
            string * slots[] = { &o.in1, &o.in2, &o.in3 };
            int i = 0;
            for (auto & [name, help] : args)
                sub->add_option(name, *slots[i++], help)->required();
        }

        auto output(CLI::App * sub) -> void
        {
            sub->add_option("-o,--output", o.output, "write the certificate here");
        }

        auto seed(CLI::App * sub) -> void
        {
            sub->add_option("--seed", o.seed, "random seed (default: CSS_SEED or 1)");
        }
    };

    auto witness_of(const PkFreeResult & r) -> string
    {
        return "biclique-pair-not-found: level " + to_string(r.failed_level) + " size " + to_string(r.failed_size)
            + " side " + to_string(r.failed_side) + ": " + r.failure;
    }

    auto register_gen(Registry & reg, CLI::App & app) -> void
    {
        auto & o = reg.o;
        auto gen = app.add_subcommand("gen", "generate a graph or 3-CCP instance");
        gen->require_subcommand(1);

        auto emit = [] (Context & c, const Graph & g) {
            c.report.metric("vertices", g.size());
            c.report.metric("edges", g.edge_count());
            c.write(emit_graph(g));
        };

        auto s = reg.leaf(gen, "gnp", "G(n, p)", [emit] (Context & c) { emit(c, gen_gnp(c.o.n, c.o.p, c.o.seed)); });
        s->add_option("--n", o.n)->required();
        s->add_option("--p", o.p);
        reg.seed(s);
        reg.output(s);

        s = reg.leaf(gen, "complete", "K_n", [emit] (Context & c) { emit(c, complete_graph(c.o.n)); });
        s->add_option("--n", o.n)->required();
        reg.output(s);

        s = reg.leaf(gen, "cycle", "C_n", [emit] (Context & c) { emit(c, cycle_graph(c.o.n)); });
        s->add_option("--n", o.n)->required();
        reg.output(s);

        s = reg.leaf(gen, "path", "P_n", [emit] (Context & c) { emit(c, path_graph(c.o.n)); });
        s->add_option("--n", o.n)->required();
        reg.output(s);

        s = reg.leaf(gen, "net", "the net: a triangle with a pendant edge at each corner",
                [emit] (Context & c) { emit(c, net_graph()); });
        reg.output(s);

        s = reg.leaf(gen, "comparability-from-random-poset", "comparability graph of a random poset",
                [emit] (Context & c) { emit(c, comparability_from_random_poset(c.o.n, c.o.density, c.o.seed)); });
        s->add_option("--n", o.n)->required();
        s->add_option("--density", o.density);
        reg.seed(s);
        reg.output(s);

        s = reg.leaf(gen, "ccp", "uniformly random 3-edge-colouring of K_n", [] (Context & c) {
            auto inst = random_edge_coloring(c.o.n, c.o.seed);
            c.report.metric("vertices", inst.size());
            c.write(emit_ccp(inst));
        });
        s->add_option("--n", o.n)->required();
        reg.seed(s);
        reg.output(s);
    }

    auto register_build(Registry & reg, CLI::App & app) -> void
    {
        auto & o = reg.o;
        auto build = app.add_subcommand("build", "construct a certificate, verify it, then write it");
        build->require_subcommand(1);

        auto s = reg.leaf(build, "random-separator", "greedy random-cut CS-separator", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto rounds = c.o.max_rounds ? c.o.max_rounds : default_max_rounds(g.size());
            auto r = build_random_separator(g, c.o.p, c.o.seed, rounds);
            c.report.metric("family_size", r.family.size());
            c.report.metric("rounds", long(r.rounds));
            c.report.metric("pairs_total", r.pairs_total);
            c.report.metric("complete", r.complete);
            c.check(r.complete, "round-cap: " + to_string(r.pairs_remaining) + " pairs left after " + to_string(r.rounds) + " rounds");
            c.check(verify_cs_separator(g, r.family));
            c.write(emit_cuts(r.family));
        });
        reg.files(s, { { "graph", "graph file" } });
        s->add_option("--p", o.p, "probability of side A");
        s->add_option("--max-rounds", o.max_rounds, "round cap (default 2 n^7)");
        reg.seed(s);
        reg.output(s);

        s = reg.leaf(build, "split-free", "separator for graphs without an induced copy of a split graph", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            Graph gamma = c.o.in2.empty() ? net_graph() : c.graph(c.o.in2);
            auto split = find_split_partition(gamma);
            if (! split)
                throw std::invalid_argument("forbidden graph is not split");
            auto r = build_split_free_separator(g, gamma, *split);
            c.report.metric("family_size", r.family.size());
            c.report.metric("pairs", long(r.runs.size()));
            c.report.metric("phi", r.phi);
            c.report.metric("t", r.t);
            c.report.metric("max_tau", r.max_tau);
            c.report.metric("tau_star_ok", r.tau_star_ok);
            c.report.metric("vc_ok", r.vc_ok);
            c.report.metric("vc_refined_ok", r.vc_refined_ok);
            c.report.metric("hw_ok", r.hw_ok);
            c.check(r.tau_star_ok, "tau-star-above-2");
            c.check(r.vc_ok, "vc-above-2phi-1");
            c.check(verify_cs_separator(g, r.family));
            if (! r.vc_refined_ok || ! r.hw_ok)
                c.report.outcome = Outcome::advisory;
            c.write(emit_cuts(r.family));
        });
        reg.files(s, { { "graph", "graph file" } });
        s->add_option("--gamma", o.in2, "forbidden split graph (default: the net)");
        reg.output(s);

        s = reg.leaf(build, "pk-free", "recursive separator for graphs without induced P_k or its complement", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto r = build_pk_free_separator(g, c.o.k, c.o.tk);
            c.report.metric("levels", r.levels);
            c.report.metric("exponent", r.exponent);
            c.check(r.ok, witness_of(r));
            c.report.metric("family_size", r.family.size());
            c.check(verify_cs_separator(g, r.family));
            c.write(emit_cuts(r.family));
        });
        reg.files(s, { { "graph", "graph file" } });
        s->add_option("--k", o.k, "forbidden path length");
        s->add_option("--tk", o.tk, "biclique-pair fraction t_k");
        reg.output(s);

        s = reg.leaf(build, "fooling", "fooling set of size n + 1", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto fs = build_fooling_set(g);
            c.report.metric("fooling_size", long(fs.pairs.size()));
            c.check(verify_fooling_set(fs));
            c.write(emit_fooling(fs));
        });
        reg.files(s, { { "graph", "graph file" } });
        reg.output(s);

        s = reg.leaf(build, "star-partition", "packing of K_n by n - 1 stars", [] (Context & c) {
            auto cert = star_partition(c.o.n);
            c.report.metric("packing_size", long(cert.bicliques.size()));
            c.check(verify_packing(cert));
            c.write(emit_packing(cert));
        });
        s->add_option("--n", o.n)->required();
        reg.output(s);

        s = reg.leaf(build, "quasipoly-covering", "2-list covering of a 3-CCP instance from the majority-colour tree", [] (Context & c) {
            auto inst = parse_ccp(c.load(c.o.in1));
            auto q = build_quasipoly_covering(inst);
            int bound = quasipoly_height_bound(inst.size());
            c.report.metric("leaves", q.leaves);
            c.report.metric("covering_size", long(q.covering.assignments.size()));
            c.report.metric("height", q.height);
            c.report.metric("height_bound", bound);
            c.report.metric("leaf_bound", std::pow(double(inst.size() + 1), double(q.height)));
            c.check(q.height <= bound, "height-above-bound");
            if (inst.size() <= ccp_exhaustive_limit) {
                c.check(verify_ccp_covering(inst, q.covering));
                c.report.metric("verified", true);
            }
            else {
                c.report.metric("verified", false);
                c.report.outcome = Outcome::advisory;
            }
            c.write(emit_two_list_covering(q.covering));
        });
        reg.files(s, { { "instance", "3-CCP instance file" } });
        reg.output(s);
    }

    auto register_verify(Registry & reg, CLI::App & app) -> void
    {
        auto verify = app.add_subcommand("verify", "check a certificate");
        verify->require_subcommand(1);

        auto s = reg.leaf(verify, "separator", "CS-separator against every disjoint maximal pair", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto f = parse_cuts(c.load(c.o.in2));
            c.check(f.host_n() == g.size(), "size-mismatch: cuts over " + to_string(f.host_n()) + " vertices");
            c.report.metric("family_size", f.size());
            c.check(verify_cs_separator(g, f));
        });
        reg.files(s, { { "graph", "graph file" }, { "cuts", "cut family file" } });

        s = reg.leaf(verify, "packing", "oriented biclique packing", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cert = parse_packing(c.load(c.o.in2), g);
            c.report.metric("packing_size", long(cert.bicliques.size()));
            c.check(verify_packing(cert));
        });
        reg.files(s, { { "graph", "graph file" }, { "certificate", "packing file" } });

        s = reg.leaf(verify, "covering-t", "t-biclique covering", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cov = parse_covering(c.load(c.o.in2), g);
            c.report.metric("covering_size", long(cov.bicliques.size()));
            c.report.metric("t", cov.t);
            c.check(verify_covering(cov));
        });
        reg.files(s, { { "graph", "graph file" }, { "covering", "covering file" } });

        s = reg.leaf(verify, "fooling", "fooling set", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto fs = parse_fooling(c.load(c.o.in2), g);
            c.report.metric("fooling_size", long(fs.pairs.size()));
            c.check(verify_fooling_set(fs));
        });
        reg.files(s, { { "graph", "graph file" }, { "fooling", "fooling set file" } });

        s = reg.leaf(verify, "ccp-covering", "2-list covering of every 3-CCP solution, by enumeration", [] (Context & c) {
            auto inst = parse_ccp(c.load(c.o.in1));
            auto cov = parse_two_list_covering(c.load(c.o.in2), inst.size(), ccp_colors);
            c.report.metric("covering_size", long(cov.assignments.size()));
            c.check(check_two_list_covering(cov));
            c.check(verify_ccp_covering(inst, cov));
        });
        reg.files(s, { { "instance", "3-CCP instance file" }, { "covering", "covering file" } });

        s = reg.leaf(verify, "stubborn-covering", "2-list covering of every maximal stubborn solution, by enumeration", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto lists = parse_lists(c.load(c.o.in2), stubborn_colors);
            auto cov = parse_two_list_covering(c.load(c.o.in3), g.size(), stubborn_colors);
            c.report.metric("covering_size", long(cov.assignments.size()));
            c.check(check_two_list_covering(cov));
            c.check(verify_stubborn_covering(StubbornInstance{ g, lists }, cov));
        });
        reg.files(s, { { "graph", "graph file" }, { "lists", "list assignment over 1..4" }, { "covering", "covering file" } });
    }

    auto aux_separator(const Graph & h, uint64_t seed) -> CutFamily
    {
        if (h.size() == 0)
            return CutFamily(0);
        return build_random_separator(h, 0.5, seed, default_max_rounds(h.size())).family;
    }

    auto register_reduce(Registry & reg, CLI::App & app) -> void
    {
        auto & o = reg.o;
        auto reduce = app.add_subcommand("reduce", "transform a certificate into another formulation");
        reduce->require_subcommand(1);

        auto s = reg.leaf(reduce, "fooling-to-packing", "fooling set of size m to a packing of K_m", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto fs = parse_fooling(c.load(c.o.in2), g);
            c.check(verify_fooling_set(fs));
            auto cert = fooling_to_packing(fs);
            c.report.metric("packing_size", long(cert.bicliques.size()));
            c.report.metric("host_size", cert.host.size());
            c.check(verify_packing(cert));
            c.write(emit_packing(cert));
            if (! c.o.aux_output.empty())
                write_file(c.o.aux_output, emit_graph(cert.host));
        });
        reg.files(s, { { "graph", "graph file" }, { "fooling", "fooling set file" } });
        reg.output(s);
        s->add_option("--graph-output", o.aux_output, "write the complete host here");

        s = reg.leaf(reduce, "packing-to-fooling", "packing of a complete graph to a fooling set of its auxiliary graph", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cert = parse_packing(c.load(c.o.in2), g);
            c.check(verify_packing(cert));
            auto fs = packing_to_fooling(cert);
            c.report.metric("fooling_size", long(fs.pairs.size()));
            c.check(verify_fooling_set(fs));
            c.write(emit_fooling(fs));
            if (! c.o.aux_output.empty())
                write_file(c.o.aux_output, emit_graph(fs.host));
        });
        reg.files(s, { { "graph", "complete graph file" }, { "certificate", "packing file" } });
        reg.output(s);
        s->add_option("--graph-output", o.aux_output, "write the auxiliary graph here");

        s = reg.leaf(reduce, "pairs-packing", "packing of the graph on all disjoint clique, stable set pairs", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto pp = pairs_packing(g);
            c.report.metric("pairs", long(pp.pairs.size()));
            c.report.metric("packing_size", long(pp.certificate.bicliques.size()));
            c.check(verify_packing(pp.certificate));
            c.write(emit_packing(pp.certificate));
            if (! c.o.aux_output.empty())
                write_file(c.o.aux_output, emit_graph(pp.auxiliary));
        });
        reg.files(s, { { "graph", "graph file" } });
        reg.output(s);
        s->add_option("--graph-output", o.aux_output, "write the graph on the pairs here");

        s = reg.leaf(reduce, "coloring-to-separator", "colouring of the pairs graph to a CS-separator", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto pp = pairs_packing(g);
            Coloring col = c.o.in2.empty() ? greedy_coloring(pp.auxiliary) : parse_coloring(c.load(c.o.in2));
            c.check(is_proper(pp.auxiliary, col), "improper-coloring");
            auto f = coloring_to_separator(g, pp, col);
            c.report.metric("colors", col.palette);
            c.report.metric("family_size", f.size());
            c.check(verify_cs_separator(g, f));
            c.write(emit_cuts(f));
        });
        reg.files(s, { { "graph", "graph file" } });
        s->add_option("coloring", o.in2, "colouring of the pairs graph (default: first fit)");
        reg.output(s);

        s = reg.leaf(reduce, "separator-to-coloring", "separator of the auxiliary graph of a packing to a colouring", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cert = parse_packing(c.load(c.o.in2), g);
            c.check(verify_packing(cert));
            auto h = biclique_auxiliary_graph(cert);
            auto f = c.o.in3.empty() ? aux_separator(h, c.o.seed) : parse_cuts(c.load(c.o.in3));
            c.check(f.host_n() == h.size(), "size-mismatch: cuts over " + to_string(f.host_n()) + " vertices");
            c.check(verify_cs_separator(h, f));
            f = extend_to_full_separator(h, f);
            auto col = separator_to_coloring(g, cert, f);
            c.report.metric("family_size", f.size());
            c.report.metric("colors", col.distinct());
            c.check(is_proper(g, col) && col.distinct() <= f.size(), "improper-coloring");
            c.write(emit_coloring(col));
        });
        reg.files(s, { { "graph", "graph file" }, { "certificate", "packing file" } });
        s->add_option("cuts", o.in3, "separator of the auxiliary graph (default: random)");
        reg.seed(s);
        reg.output(s);

        s = reg.leaf(reduce, "ccp-to-separator", "covering of the derived 3-CCP instance to a CS-separator", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cov = parse_two_list_covering(c.load(c.o.in2), g.size(), ccp_colors);
            auto f = ccp_covering_to_separator(g, cov);
            c.report.metric("family_size", f.size());
            c.check(verify_cs_separator(g, f));
            c.write(emit_cuts(f));
        });
        reg.files(s, { { "graph", "graph file" }, { "covering", "covering of the derived 3-CCP instance" } });
        reg.output(s);

        s = reg.leaf(reduce, "separator-to-stubborn", "CS-separator to a covering of every maximal stubborn solution", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto lists = parse_lists(c.load(c.o.in2), stubborn_colors);
            auto f = parse_cuts(c.load(c.o.in3));
            c.check(f.host_n() == g.size(), "size-mismatch: cuts over " + to_string(f.host_n()) + " vertices");
            c.check(verify_cs_separator(g, f));
            auto squared = square_cut_family(extend_to_full_separator(g, f));
            StubbornInstance inst{ g, lists };
            auto cov = separator_to_stubborn_covering(inst, squared);
            c.report.metric("squared_size", squared.size());
            c.report.metric("covering_size", long(cov.assignments.size()));
            if (g.size() <= stubborn_exhaustive_limit)
                c.check(verify_stubborn_covering(inst, cov));
            else
                c.report.outcome = Outcome::advisory;
            c.write(emit_two_list_covering(cov));
        });
        reg.files(s, { { "graph", "graph file" }, { "lists", "list assignment over 1..4" }, { "cuts", "CS-separator" } });
        reg.output(s);

        s = reg.leaf(reduce, "stubborn-to-ccp", "3-CCP covering from stubborn coverings of the neighbourhood instances", [] (Context & c) {
            auto inst = parse_ccp(c.load(c.o.in1));
            auto cov = ccp_covering_from_stubborn(inst, separator_stubborn_oracle(c.o.seed));
            c.report.metric("covering_size", long(cov.assignments.size()));
            if (inst.size() <= ccp_exhaustive_limit)
                c.check(verify_ccp_covering(inst, cov));
            else
                c.report.outcome = Outcome::advisory;
            c.write(emit_two_list_covering(cov));
        });
        reg.files(s, { { "instance", "3-CCP instance file" } });
        reg.seed(s);
        reg.output(s);

        s = reg.leaf(reduce, "refine-t", "edges covered exactly t times, partitioned by label", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto cov = parse_covering(c.load(c.o.in2), g);
            c.check(verify_covering(cov));
            auto r = refine_t_covering(cov);
            int k = int(cov.bicliques.size());
            c.report.metric("classes", long(r.classes.size()));
            c.report.metric("label_bound", label_count_bound(k, cov.t));
            c.report.metric("class_bound", std::pow(2.0 * k, double(cov.t)));
            c.check(verify_partition(r.exact, r.classes));
            c.check(double(r.classes.size()) <= std::pow(2.0 * k, double(cov.t)), "too-many-classes");
            c.write(emit_covering(BicliqueCovering{ r.exact, r.classes, 1 }));
        });
        reg.files(s, { { "graph", "graph file" }, { "covering", "t-covering file" } });
        reg.output(s);

        s = reg.leaf(reduce, "square", "pairwise intersections of the A sides", [] (Context & c) {
            auto f = parse_cuts(c.load(c.o.in1));
            auto sq = square_cut_family(f);
            c.report.metric("family_size", f.size());
            c.report.metric("squared_size", sq.size());
            c.check(long(sq.size()) <= long(f.size()) * f.size(), "square-too-large");
            c.write(emit_cuts(sq));
        });
        reg.files(s, { { "cuts", "cut family file" } });
        reg.output(s);
    }

    auto register_roundtrip(Registry & reg, CLI::App & app) -> void
    {
        auto roundtrip = app.add_subcommand("roundtrip", "run a chain of transformations and verify every stage");
        roundtrip->require_subcommand(1);

        auto s = reg.leaf(roundtrip, "theorem7", "fooling set -> packing of K_m -> fooling set", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto r = theorem7_roundtrip(g);
            c.report.metric("fooling_size", long(r.fooling.pairs.size()));
            c.report.metric("packing_size", long(r.packing.bicliques.size()));
            c.report.metric("roundtrip_size", long(r.back.pairs.size()));
            c.check(r.fooling_ok);
            c.check(r.packing_ok);
            c.check(r.back_ok);
            c.check(r.sizes_ok, "size-not-preserved");
        });
        reg.files(s, { { "graph", "graph file" } });

        s = reg.leaf(roundtrip, "theorem16-loop", "separator -> square -> stubborn -> 3-CCP -> separator", [] (Context & c) {
            auto g = c.graph(c.o.in1);
            auto lists = c.o.in2.empty() ? trivial_stubborn_instance(g).lists : parse_lists(c.load(c.o.in2), stubborn_colors);
            auto loop = theorem16_loop(StubbornInstance{ g, lists }, c.o.seed);
            for (auto & st : loop.stages) {
                c.report.metric(st.name + "_size", st.size);
                c.check(st.verdict);
            }
        });
        reg.files(s, { { "graph", "graph file" } });
        s->add_option("lists", reg.o.in2, "list assignment over 1..4 (default: all four everywhere)");
        reg.seed(s);
    }

    auto register_bounds(Registry & reg, CLI::App & app) -> void
    {
        auto & o = reg.o;
        auto bounds = app.add_subcommand("bound-check", "evaluate a numeric bound");
        bounds->require_subcommand(1);

        auto s = reg.leaf(bounds, "appendix-a", "p^omega (1-p)^alpha >= n^-6 for G(n, p)", [] (Context & c) {
            auto b = check_appendix_bound(c.o.big_n, c.o.p);
            c.report.metric("omega", b.omega);
            c.report.metric("alpha", b.alpha);
            c.report.metric("log2_value", b.log2_value);
            c.report.metric("exponent", b.exponent);
            c.report.metric("small_alpha_fallback", b.small_alpha_fallback);
            c.report.metric("ok", b.ok);
            c.check(b.ok, "bound-violated: value n^-" + to_string(b.exponent));
        });
        s->add_option("--n", o.big_n)->required();
        s->add_option("--p", o.p)->required();

        s = reg.leaf(bounds, "haussler-welzl", "16 d tau* log2(d tau*)", [] (Context & c) {
            auto tau = parse_rational(c.o.tau);
            c.report.metric("bound", haussler_welzl_bound(c.o.d, tau));
        });
        s->add_option("--d", o.d)->required();
        s->add_option("--tau", o.tau, "fractional transversality, as p/q")->required();

        s = reg.leaf(bounds, "label-count", "C(k, t) 2^(t-1) against (2k)^t", [] (Context & c) {
            double labels = label_count_bound(c.o.k, c.o.t);
            double bound = std::pow(2.0 * c.o.k, double(c.o.t));
            c.report.metric("labels", labels);
            c.report.metric("bound", bound);
            c.check(labels <= bound, "label-count-above-bound");
        });
        s->add_option("--k", o.k)->required();
        s->add_option("--t", o.t)->required();
    }
}

auto css::run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    try {
        o.seed = default_seed();
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    CLI::App app{ "Certificates for clique / stable set separation and its equivalent formulations", "csslab" };
    app.require_subcommand(1);
    Registry reg{ o, {}, {} };
    register_gen(reg, app);
    register_build(reg, app);
    register_verify(reg, app);
    register_reduce(reg, app);
    register_roundtrip(reg, app);
    register_bounds(reg, app);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    for (auto & [sub, action] : reg.leaves) {
        if (! sub->parsed())
            continue;
        RunReport report;
        report.command = reg.names[sub];
        Context c{ o, report, out };
        try {
            action(c);
        }
        catch (const Violation & v) {
            report.outcome = Outcome::fail;
            report.witness = v.witness;
            out << report.text();
            return exit_violation;
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::runtime_error & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::exception & e) {
            report.outcome = Outcome::fail;
            report.witness = string("internal-error: ") + e.what();
            out << report.text();
            return exit_violation;
        }
        out << report.text();
        return exit_pass;
    }
    err << "no command given\n";
    return exit_usage;
}
