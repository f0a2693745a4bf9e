#include "dyckolab/caps.hpp"

#include "dyckolab/error.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <string>

namespace dyckolab {

namespace {

std::size_t parse_number(std::string_view text)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError("DYCKOLAB_CAP: bad number '" + std::string(text) + "'");
    return value;
}

void apply_pair(Caps& c, std::string_view key, std::string_view value)
{
    const std::size_t n = parse_number(value);
    if (key == "scan") c.scan = n;
    else if (key == "enum_nodes") c.enum_nodes = n;
    else if (key == "enum_len") c.enum_len = n;
    else if (key == "census_prefix") c.census_prefix = n;
    else if (key == "cubefree_t") c.cubefree_t = static_cast<unsigned>(n);
    else if (key == "seventhirds_t") c.seventhirds_t = static_cast<unsigned>(n);
    else if (key == "seventhirds_t_optin") c.seventhirds_t_optin = static_cast<unsigned>(n);
    else if (key == "rs_n") c.rs_n = static_cast<unsigned>(n);
    else throw ParseError("DYCKOLAB_CAP: unknown key '" + std::string(key) + "'");
}

std::mutex caps_mutex;
Caps* current = nullptr;

} // namespace

void Caps::apply(std::string_view spec)
{
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) apply_pair(*this, "scan", item);
        else apply_pair(*this, item.substr(0, eq), item.substr(eq + 1));
    }
}

const Caps& caps()
{
    std::lock_guard lock(caps_mutex);
    if (current == nullptr) {
        static Caps storage;
        if (const char* env = std::getenv("DYCKOLAB_CAP")) storage.apply(env);
        current = &storage;
    }
    return *current;
}

void set_caps(const Caps& c)
{
    caps();
    std::lock_guard lock(caps_mutex);
    *current = c;
}

} // namespace dyckolab
