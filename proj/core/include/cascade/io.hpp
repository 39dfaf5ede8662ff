// Text formats: edge lists, graph6, terminal TSV sidecars.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cascade/graph.hpp"

namespace cascade {

struct ParseError : GraphError {
  int line = 0;
  ParseError(const std::string& msg, int ln)
      : GraphError(msg + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

// Edge-list format: `n <vertex_count>`, optional `t <x> <y>`, then one
// `u v` pair per line, 0-indexed. Blank lines and `#` comments ignored.
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph read_edge_list_file(const std::string& path);
std::string write_edge_list(const LabeledGraph& g);

// graph6, one terminal-free graph per line.
std::string to_graph6(const LabeledGraph& g);
LabeledGraph from_graph6(const std::string& line, int lineno = 0);
std::vector<LabeledGraph> read_graph6_file(const std::string& path);

// TSV sidecar rows `g6<TAB>x<TAB>y` attaching terminals to graph6 bodies.
std::vector<LabeledGraph> read_terminal_tsv(std::istream& in);
std::vector<LabeledGraph> read_terminal_tsv_file(const std::string& path);

}  // namespace cascade
