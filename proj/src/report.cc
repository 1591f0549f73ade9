#include <css/report.hh>

#include <cstdio>

using namespace css;

using std::string;

auto css::outcome_string(Outcome o) -> string
{
    switch (o) {
        case Outcome::pass:     return "pass";
        case Outcome::fail:     return "fail";
        case Outcome::advisory: return "advisory";
    }
    return "unknown";
}

auto css::fnv1a64(const string & bytes) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

auto css::digest_string(std::uint64_t d) -> string
{
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

auto RunReport::add_input(const string & name, const string & contents) -> void
{
    inputs.emplace_back(name, digest_string(fnv1a64(contents)));
}

auto RunReport::metric(const string & key, long value) -> void
{
    metrics[key] = std::to_string(value);
}

auto RunReport::metric(const string & key, double value) -> void
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    metrics[key] = buf;
}

auto RunReport::metric(const string & key, const string & value) -> void
{
    metrics[key] = value;
}

auto RunReport::metric(const string & key, bool value) -> void
{
    metrics[key] = value ? "true" : "false";
}

auto RunReport::text() const -> string
{
    string out = "command " + command + "\n";
    for (auto & [name, digest] : inputs)
        out += "input " + name + " " + digest + "\n";
    out += "outcome " + outcome_string(outcome) + "\n";
    for (auto & [key, value] : metrics)
        out += key + " " + value + "\n";
    if (! witness.empty())
        out += "witness " + witness + "\n";
    return out;
}
