#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "somborlike/graph.hpp"

namespace somborlike {

// Malformed graph6 input; position is the byte offset of the offending
// character (or the string length for truncation).
struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t position_)
        : std::runtime_error(what + " at byte " + std::to_string(position_)),
          position(position_) {}
    std::size_t position;
};

// Standard graph6 text form: the order as printable bytes, then the
// upper-triangle adjacency bits column by column, packed six per byte
// with offset 63. decode(encode(g)) == g bit-exactly.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

} // namespace somborlike
