#include <css/csp.hh>
#include <css/graph.hh>
#include <css/separator.hh>
#include <css/transversal.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

using namespace css;

namespace
{
    auto seconds(const std::function<void ()> & f, int reps) -> double
    {
        auto start = std::chrono::steady_clock::now();
        for (int i = 0 ; i < reps ; ++i)
            f();
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
        return d.count() / reps;
    }

    auto row(const std::string & name, double serial, double parallel, bool agree) -> void
    {
        std::printf("%-34s %12.6f %12.6f %8.2fx  %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
    }
}

auto main() -> int
{
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    bool all = true;

    for (int n : { 30, 40 }) {
        auto g = gen_gnp(n, 0.5, 42);
        auto built = build_random_separator(g, 0.5, 7, default_max_rounds(n));
        SeparationReport a, b;
        double s = seconds([&] { a = verify_cs_separator_serial(g, built.family); }, 5);
        double p = seconds([&] { b = verify_cs_separator(g, built.family); }, 5);
        row("verify_cs_separator gnp(" + std::to_string(n) + ")", s, p, a == b);
        all = all && a == b;

        RandomSeparatorResult rs, rp;
        s = seconds([&] { rs = build_random_separator_serial(g, 0.5, 7, default_max_rounds(n)); }, 1);
        p = seconds([&] { rp = build_random_separator(g, 0.5, 7, default_max_rounds(n)); }, 1);
        bool same = rs.family == rp.family && rs.rounds == rp.rounds;
        row("build_random_separator gnp(" + std::to_string(n) + ")", s, p, same);
        all = all && same;
    }

    {
        auto g = comparability_from_random_poset(18, 0.3, 5);
        auto gamma = net_graph();
        auto split = *find_split_partition(gamma);
        SplitFreeResult rs, rp;
        double s = seconds([&] { rs = build_split_free_separator_serial(g, gamma, split); }, 1);
        double p = seconds([&] { rp = build_split_free_separator(g, gamma, split); }, 1);
        bool same = rs.family == rp.family;
        row("build_split_free_separator n=18", s, p, same);
        all = all && same;
    }

    {
        auto inst = random_edge_coloring(10, 3);
        auto q = build_quasipoly_covering(inst);
        Verdict a, b;
        double s = seconds([&] { a = verify_ccp_covering_serial(inst, q.covering); }, 1);
        double p = seconds([&] { b = verify_ccp_covering(inst, q.covering); }, 1);
        bool same = a.ok == b.ok && a.detail == b.detail;
        row("verify_ccp_covering n=10", s, p, same);
        all = all && same;
    }

    return all ? 0 : 1;
}
