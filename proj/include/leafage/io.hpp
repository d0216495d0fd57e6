#pragma once

#include <istream>
#include <string>

#include "leafage/graph.hpp"

namespace leafage {

/// Edge list: optional header "p <n> <m>", then "<u> <v>" per line; '#' starts
/// a comment line. Without a header n is one more than the largest id.
/// Throws Parse on malformed lines, out-of-range ids, loops and duplicate edges.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

/// Header line followed by the edges in sorted order.
std::string format_edge_list(const Graph& g);

}
