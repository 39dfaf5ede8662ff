#include "cascade/io.hpp"

#include <fstream>
#include <sstream>

namespace cascade {

LabeledGraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, tx = -1, ty = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "n") {
      if (!(ls >> n) || n < 0 || n > kMaxVertices)
        throw ParseError("bad vertex count", lineno);
    } else if (head == "t") {
      if (!(ls >> tx >> ty)) throw ParseError("bad terminal line", lineno);
    } else {
      int u, v;
      std::istringstream es(line);
      if (!(es >> u >> v)) throw ParseError("bad edge line", lineno);
      edges.emplace_back(u, v);
    }
  }
  if (n < 0) throw ParseError("missing 'n' header", lineno);
  LabeledGraph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw ParseError("edge endpoint out of range", 0);
    g.add_edge(e.u, e.v);
  }
  if (tx >= 0 || ty >= 0) {
    if (tx < 0 || ty < 0 || tx >= n || ty >= n || tx == ty)
      throw ParseError("bad terminals", 0);
    g.set_terminals(tx, ty);
  }
  return g;
}

LabeledGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_edge_list(in);
}

std::string write_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  if (g.has_terminals())
    out << "t " << g.terminal_x() << " " << g.terminal_y() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string to_graph6(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    s.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) s.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return s;
}

LabeledGraph from_graph6(const std::string& line, int lineno) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw ParseError("truncated graph6", lineno);
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError("bad graph6 byte", lineno);
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxVertices) throw ParseError("graph6 order beyond vertex cap", lineno);
  LabeledGraph g(n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) g.add_edge(i, j);
      --bits;
    }
  }
  return g;
}

std::vector<LabeledGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::vector<LabeledGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    out.push_back(from_graph6(line, lineno));
  }
  return out;
}

std::vector<LabeledGraph> read_terminal_tsv(std::istream& in) {
  std::vector<LabeledGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string g6;
    int x, y;
    if (!(ls >> g6 >> x >> y)) throw ParseError("bad tsv row", lineno);
    LabeledGraph g = from_graph6(g6, lineno);
    if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count() ||
        x == y)
      throw ParseError("bad terminals in tsv row", lineno);
    g.set_terminals(x, y);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<LabeledGraph> read_terminal_tsv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_terminal_tsv(in);
}

}  // namespace cascade
