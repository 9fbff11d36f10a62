#pragma once

#include <cstddef>
#include <cstdint>

namespace bareo {

/// Enumeration caps. Exceeding a cap raises TooLarge; nothing is sampled.
/// BAREO_CAP (positive integer, number of points) overrides `points`.
struct Caps {
    std::size_t points = 16;               // |B(G)| for open-set enumeration
    std::uint64_t candidate_maps = 10'000'000; // point-map / coloring enumerations
    std::size_t walk_edges = 20;            // postman bitmask state space
};

/// Process-wide caps, read once from the environment.
const Caps& caps();

} // namespace bareo
