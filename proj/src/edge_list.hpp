#pragma once

#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace surplus {

// Edge-list text format: optional '#' comment lines, first data line "n m",
// then m lines "u v" with 0 <= u < v < n. The writer emits edges in
// canonical sorted order; the reader accepts them in any order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace surplus
