#ifndef CSS_GUARD_PIPELINES_HH
#define CSS_GUARD_PIPELINES_HH 1

#include <css/csp.hh>
#include <css/packing.hh>
#include <css/verdict.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace css
{
    struct Theorem7Roundtrip
    {
        FoolingSet fooling;
        PackingCertificate packing;
        FoolingSet back;
        Verdict fooling_ok;
        Verdict packing_ok;
        Verdict back_ok;
        /// |fooling| = n + 1, the packing lives on K_m and the fooling set read back has size m.
        bool sizes_ok = false;

        auto ok() const -> bool { return fooling_ok.ok && packing_ok.ok && back_ok.ok && sizes_ok; }
    };

    /// Fooling set of g, the packing of K_m it yields, and the fooling set of that packing.
    auto theorem7_roundtrip(const Graph & g) -> Theorem7Roundtrip;

    struct LoopStage
    {
        std::string name;
        Verdict verdict;
        long size = 0;
    };

    struct Theorem16Loop
    {
        std::vector<LoopStage> stages;

        auto ok() const -> bool;
    };

    /* separator of g, extended to all pairs -> square -> stubborn covering of
     * inst -> 3-CCP covering of the instance derived from g -> separator of g,
     * each stage checked by its own verifier. Stops at the first failure. */
    auto theorem16_loop(const StubbornInstance & inst, std::uint64_t seed) -> Theorem16Loop;
}

#endif
