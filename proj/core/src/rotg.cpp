#include "d2tk/rotg.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "d2tk/error.hpp"

namespace d2tk {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<long> parse_ints(const std::string& text, int line_no) {
  std::vector<long> out;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j)
      throw ParseError(line_no, "bad integer '" + text.substr(i, j - i) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

PlaneGraph parse_rotg(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long n = -1, m = -1;
  RotationSpec spec;
  long degree_sum = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (n < 0) {
      auto head = parse_ints(line, line_no);
      if (head.size() != 2) throw ParseError(line_no, "header must be `n m`");
      n = head[0];
      m = head[1];
      if (n < 1 || m < 0) throw ParseError(line_no, "header counts out of range");
      continue;
    }
    if (static_cast<long>(spec.size()) == n)
      throw ParseError(line_no, "trailing content after " + std::to_string(n) + " vertex lines");
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected `v: neighbours`");
    auto id = parse_ints(line.substr(0, colon), line_no);
    if (id.size() != 1) throw ParseError(line_no, "expected a single vertex id before ':'");
    auto nbrs = parse_ints(line.substr(colon + 1), line_no);
    std::vector<VertexId> rot(nbrs.begin(), nbrs.end());
    degree_sum += static_cast<long>(rot.size());
    spec.emplace_back(static_cast<VertexId>(id[0]), std::move(rot));
  }
  if (n < 0) throw ParseError(line_no, "missing header");
  if (static_cast<long>(spec.size()) != n)
    throw ParseError(line_no, "expected " + std::to_string(n) + " vertex lines, got " +
                                  std::to_string(spec.size()));
  if (degree_sum != 2 * m)
    throw ParseError(1, "header says m=" + std::to_string(m) + " but rotations give " +
                            std::to_string(degree_sum) + " edge ends");
  return build_from_rotation(spec);
}

PlaneGraph parse_rotg_string(const std::string& text) {
  std::istringstream in(text);
  return parse_rotg(in);
}

PlaneGraph read_rotg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return parse_rotg(in);
}

void write_rotg(std::ostream& out, const PlaneGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId v : g.vertices()) {
    out << v << ':';
    for (VertexId u : g.rotation(v)) out << ' ' << u;
    out << '\n';
  }
}

std::string to_rotg(const PlaneGraph& g) {
  std::ostringstream out;
  write_rotg(out, g);
  return out.str();
}

}  // namespace d2tk
