#include "fvlab/caps.hpp"

#include <charconv>
#include <cstdlib>

#include "fvlab/bigint.hpp"

namespace fvlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidInput("bad value for cap '" + std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

Caps Caps::parse(std::string_view text, const Caps& base) {
    Caps caps = base;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InvalidInput("cap entry without '=': '" + std::string(item) + "'");
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view value = trim(item.substr(eq + 1));
        if (key == "max_flag_elements") {
            caps.max_flag_elements = parse_number<std::size_t>(key, value);
        } else if (key == "max_gorenstein_rank") {
            caps.max_gorenstein_rank = parse_number<int>(key, value);
        } else if (key == "max_gorenstein_proper") {
            caps.max_gorenstein_proper = parse_number<std::size_t>(key, value);
        } else if (key == "max_search_nodes") {
            caps.max_search_nodes = parse_number<std::uint64_t>(key, value);
        } else if (key == "max_brute_rank5") {
            caps.max_brute_rank5 = parse_number<std::uint64_t>(key, value);
        } else if (key == "max_ray_doublings") {
            caps.max_ray_doublings = parse_number<unsigned>(key, value);
        } else {
            throw InvalidInput("unknown cap '" + std::string(key) + "'");
        }
    }
    return caps;
}

Caps Caps::from_environment() {
    const char* env = std::getenv("FVLAB_CAPS");
    return env ? parse(env) : Caps{};
}

}  // namespace fvlab
