#ifndef OHMCURVE_GRAPH6_HPP
#define OHMCURVE_GRAPH6_HPP

#include <string>
#include <string_view>

#include "ohmcurve/graph.hpp"

namespace ohmcurve {

// graph6 codec, bit-exact against McKay's formats.txt: the order in the
// leading byte(s) (offset 63, with '~' escapes for n >= 63), then the upper
// triangle in column-major order packed 6 bits per character. sparse6 and
// digraph6 inputs are rejected. Parse errors name the offending byte offset.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list text: first line is the vertex count, each following non-empty
// line is "u v" with 0 <= u,v < n and u != v. Duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

} // namespace ohmcurve

#endif
