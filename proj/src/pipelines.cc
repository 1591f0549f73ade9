#include <css/pipelines.hh>

using namespace css;

using std::string;
using std::to_string;

auto css::theorem7_roundtrip(const Graph & g) -> Theorem7Roundtrip
{
    Theorem7Roundtrip r;
    r.fooling = build_fooling_set(g);
    r.fooling_ok = verify_fooling_set(r.fooling);
    r.packing = fooling_to_packing(r.fooling);
    r.packing_ok = verify_packing(r.packing);
    r.back = packing_to_fooling(r.packing);
    r.back_ok = verify_fooling_set(r.back);

    int m = int(r.fooling.pairs.size());
    r.sizes_ok = m == g.size() + 1 && r.packing.host == complete_graph(m) && int(r.back.pairs.size()) == m;
    return r;
}

auto Theorem16Loop::ok() const -> bool
{
    for (auto & s : stages)
        if (! s.verdict)
            return false;
    return ! stages.empty();
}

auto css::theorem16_loop(const StubbornInstance & inst, std::uint64_t seed) -> Theorem16Loop
{
    const Graph & g = inst.graph;
    Theorem16Loop loop;
    auto stage = [&] (const string & name, Verdict v, long size) {
        loop.stages.push_back(LoopStage{ name, std::move(v), size });
        return loop.stages.back().verdict.ok;
    };
    auto report_verdict = [] (const SeparationReport & rep) {
        if (rep.ok)
            return Verdict::pass();
        return Verdict::fail("unseparated-pair", rep.witness->clique.to_string() + " " + rep.witness->stable.to_string());
    };

    CutFamily f(g.size());
    if (g.size() > 0) {
        auto built = build_random_separator(g, 0.5, seed, default_max_rounds(g.size()));
        f = built.family;
    }
    f = extend_to_full_separator(g, f);
    if (! stage("separator", report_verdict(verify_all_pairs(g, f)), f.size()))
        return loop;

    auto squared = square_cut_family(f);
    Verdict square_ok = verify_union_separation(g, squared);
    if (square_ok && long(squared.size()) > long(f.size()) * f.size())
        square_ok = Verdict::fail("square-too-large", to_string(squared.size()) + " > " + to_string(f.size()) + "^2");
    if (! stage("square", square_ok, squared.size()))
        return loop;

    auto stubborn = separator_to_stubborn_covering(inst, squared);
    if (! stage("stubborn-covering", verify_stubborn_covering(inst, stubborn), long(stubborn.assignments.size())))
        return loop;

    auto derived = derived_edge_coloring(g);
    auto ccp = ccp_covering_from_stubborn(derived, separator_stubborn_oracle(seed));
    if (! stage("ccp-covering", verify_ccp_covering(derived, ccp), long(ccp.assignments.size())))
        return loop;

    auto back = ccp_covering_to_separator(g, ccp);
    stage("separator-from-ccp", report_verdict(verify_cs_separator(g, back)), back.size());
    return loop;
}
