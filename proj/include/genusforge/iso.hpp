#pragma once

#include <string>

#include "genusforge/graph.hpp"

namespace genusforge {

// True iff an isomorphism of underlying graphs maps {x1,y1} onto {x2,y2}
// (possibly exchanging x and y). Backtracking with degree refinement.
bool are_isomorphic(const TerminalGraph& a, const TerminalGraph& b);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Canonical code: lexicographically minimal adjacency bitstring over all
// admissible vertex orders. Terminal variant pins {x,y} to positions 0,1
// (both orders tried), so equal codes <=> are_isomorphic. Deterministic
// across runs and platforms.
std::string canonical_code(const TerminalGraph& g);
std::string canonical_code(const SimpleGraph& g);

// Lowercase hex rendering of a code (for the profile cache).
std::string code_hex(const std::string& code);

}  // namespace genusforge
