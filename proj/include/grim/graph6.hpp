#pragma once

#include <string>
#include <string_view>

#include "grim/graph.hpp"

namespace grim {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Short-form graph6 only (n <= 62).
inline constexpr std::size_t kGraph6MaxOrder = 62;

// Result has dense ids 0..n-1.
Graph parse_graph6(std::string_view text);

// Vertex i of the encoding is the i-th entry of g.vertices().
std::string emit_graph6(const Graph& g);

}  // namespace grim
