#pragma once

#include <iosfwd>
#include <string>

#include "sg/signed_graph.hpp"

namespace sg {

// Signed graph file format:
//   sg <n>
//   e <u> <v> <+|->
// with '#' comment lines. Parse errors carry 1-based line numbers.
SignedGraph read_signed_graph(std::istream& in);
SignedGraph parse_signed_graph(const std::string& text);
SignedGraph load_signed_graph(const std::string& path);

// Header plus edges sorted by (u, v); no comments. parse . serialize is a
// fixed point.
std::string serialize_signed_graph(const SignedGraph& g);
void save_signed_graph(const SignedGraph& g, const std::string& path);

}  // namespace sg
