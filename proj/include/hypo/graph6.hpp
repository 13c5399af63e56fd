#ifndef HYPO_GRAPH6_HPP
#define HYPO_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hypo/graph.hpp"

namespace hypo {

// Standard graph6: order byte(s), then the upper triangle of the adjacency
// matrix column by column, six bits per printable character offset 63.
std::string encode_graph6(const Graph& g);

// Accepts an optional leading ">>graph6<<" header. Throws
// std::invalid_argument on malformed input (bad length, characters outside
// 63..126, order above 64, trailing garbage).
Graph decode_graph6(std::string_view s);

}  // namespace hypo

#endif
