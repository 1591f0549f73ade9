#ifndef CSS_GUARD_REPORT_HH
#define CSS_GUARD_REPORT_HH 1

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace css
{
    enum class Outcome { pass, fail, advisory };

    auto outcome_string(Outcome o) -> std::string;

    /// 64-bit FNV-1a.
    auto fnv1a64(const std::string & bytes) -> std::uint64_t;
    /// 16 lowercase hex digits.
    auto digest_string(std::uint64_t d) -> std::string;

    /* The line-oriented summary a command prints on standard output:
     * "command", one "input" line per file, "outcome", then metrics sorted
     * by key, and on failure the witness. */
    struct RunReport
    {
        std::string command;
        std::vector<std::pair<std::string, std::string>> inputs;
        Outcome outcome = Outcome::pass;
        std::map<std::string, std::string> metrics;
        std::string witness;

        auto add_input(const std::string & name, const std::string & contents) -> void;
        auto metric(const std::string & key, long value) -> void;
        auto metric(const std::string & key, double value) -> void;
        auto metric(const std::string & key, const std::string & value) -> void;
        auto metric(const std::string & key, bool value) -> void;
        auto metric(const std::string & key, const char * value) -> void { metric(key, std::string(value)); }
        auto metric(const std::string & key, int value) -> void { metric(key, long(value)); }

        auto text() const -> std::string;
    };
}

#endif
