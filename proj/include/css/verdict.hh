#ifndef CSS_GUARD_VERDICT_HH
#define CSS_GUARD_VERDICT_HH 1

#include <string>
#include <utility>

namespace css
{
    /* Outcome of a certificate check. On failure, kind names the violated
     * condition and detail locates the first violation. */
    struct Verdict
    {
        bool ok = true;
        std::string kind;
        std::string detail;

        static auto pass() -> Verdict { return Verdict{}; }
        static auto fail(std::string kind, std::string detail) -> Verdict
        {
            return Verdict{ false, std::move(kind), std::move(detail) };
        }

        explicit operator bool() const { return ok; }
    };
}

#endif
