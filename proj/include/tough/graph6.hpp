#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tough/graph.hpp"

namespace tough {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 string (no trailing newline). Supports the one-byte
/// order header (n <= 62) and the four-byte form for 63 <= n <= 512.
Graph parse_graph6(std::string_view text);

/// Encodes with the shortest header for the graph's order.
std::string write_graph6(const Graph& g);

}  // namespace tough
