#pragma once

#include <optional>
#include <span>

#include "oddcolor/coloring.hpp"

namespace oddcolor::detail {

/// Tries every assignment of colors 1..palette to `free` (which must be
/// uncolored in `c`) and returns the first, in lexicographic order, that
/// leaves every vertex in free ∪ N(free) properly and oddly colored.
/// Throws std::invalid_argument if a vertex within distance two of `free`
/// is uncolored and not itself free.
std::optional<Coloring> recolor_locally(const Graph& g, const Coloring& c, std::span<const Vertex> free,
                                        int palette);

}  // namespace oddcolor::detail
