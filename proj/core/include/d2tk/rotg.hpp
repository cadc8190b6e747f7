#pragma once

#include <iosfwd>
#include <string>

#include "d2tk/plane_graph.hpp"

namespace d2tk {

// ROTG text: header `n m`, then n lines `v: u1 u2 ... uk` (clockwise).
// '#' starts a comment. Anything after the n-th vertex line is rejected.
PlaneGraph parse_rotg(std::istream& in);
PlaneGraph parse_rotg_string(const std::string& text);
PlaneGraph read_rotg_file(const std::string& path);

void write_rotg(std::ostream& out, const PlaneGraph& g);
std::string to_rotg(const PlaneGraph& g);

}  // namespace d2tk
