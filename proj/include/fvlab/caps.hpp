#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace fvlab {

/// Size limits for the exhaustive procedures.
///
/// Overridable from a "key=value,key=value" string; the CLI reads it from
/// the FVLAB_CAPS environment variable.
struct Caps {
    std::size_t max_flag_elements = 12;    // sum of rank sizes in decide_flag_gorenstein
    int max_gorenstein_rank = 5;           // rank of the poset in is_gorenstein_star
    std::size_t max_gorenstein_proper = 64;
    std::uint64_t max_search_nodes = 50'000'000;
    std::uint64_t max_brute_rank5 = 30;    // bound on A and B for the brute-force oracle
    unsigned max_ray_doublings = 256;

    /// Keys: max_flag_elements, max_gorenstein_rank, max_gorenstein_proper,
    /// max_search_nodes, max_brute_rank5, max_ray_doublings.
    static Caps parse(std::string_view text, const Caps& base);
    static Caps parse(std::string_view text);
    /// Defaults overridden by FVLAB_CAPS when it is set.
    static Caps from_environment();
};

}  // namespace fvlab
