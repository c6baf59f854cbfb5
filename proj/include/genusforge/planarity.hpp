#pragma once

#include "genusforge/graph.hpp"

namespace genusforge {

// Polynomial planarity test (Demoucron-Malgrange-Pertuiset per biconnected
// block). Handles disconnected inputs and isolated vertices.
bool is_planar(const SimpleGraph& g);

}  // namespace genusforge
