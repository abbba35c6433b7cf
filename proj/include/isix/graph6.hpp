#pragma once

#include "isix/graph.hpp"

#include <string>

namespace isix {

/// graph6 short form, n <= 62: leading byte n+63, then the column-major
/// upper-triangular adjacency bits in 6-bit chunks offset by 63.
std::string encode_g6(const Graph& g);

/// Inverse of encode_g6. Throws std::invalid_argument on malformed
/// characters, length mismatch, or nonzero padding bits.
Graph decode_g6(const std::string& line);

}  // namespace isix
