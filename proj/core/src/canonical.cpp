#include "cascade/canonical.hpp"

#include <algorithm>
#include <map>

namespace cascade {

namespace {

// Individualization-refinement canonical labeling. The partition starts as
// [nonterminals, terminals] so terminals always occupy the final positions
// (the x/y swap stays legal: both share one cell). Refinement splits cells
// by neighbor counts toward every cell; sub-cells inherit their parent's
// position, keeping the cell order isomorphism-invariant. When a partition
// is discrete its vertex order yields a candidate adjacency string; the
// canonical code is the lexicographic minimum over all branches.
struct Canonicalizer {
  const LabeledGraph& g;
  int n;
  std::vector<uint8_t> best;
  bool have_best = false;

  explicit Canonicalizer(const LabeledGraph& graph)
      : g(graph), n(graph.vertex_count()) {}

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() <= 1) continue;
        // Signature: neighbor counts toward every current cell.
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cells[ci]) {
          std::vector<int> sig;
          sig.reserve(cells.size());
          for (const auto& cell : cells) {
            int cnt = 0;
            for (int u : cell)
              if (g.has_edge(u, v)) ++cnt;
            sig.push_back(cnt);
          }
          split[sig].push_back(v);
        }
        if (split.size() <= 1) continue;
        Cells replaced;
        replaced.reserve(cells.size() + split.size());
        for (size_t cj = 0; cj < cells.size(); ++cj) {
          if (cj != ci) {
            replaced.push_back(std::move(cells[cj]));
          } else {
            for (auto& [sig, verts] : split) replaced.push_back(verts);
          }
        }
        cells = std::move(replaced);
        changed = true;
      }
    }
  }

  void candidate(const Cells& cells) {
    std::vector<int> order;
    for (const auto& cell : cells) order.push_back(cell.front());
    std::vector<uint8_t> bits;
    bits.reserve(n * (n - 1) / 2);
    bool tight = have_best;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        uint8_t b = g.has_edge(order[i], order[j]) ? 1 : 0;
        if (tight) {
          uint8_t bb = best[bits.size()];
          if (b > bb) return;  // prefix already larger
          if (b < bb) tight = false;
        }
        bits.push_back(b);
      }
    }
    if (!have_best || bits < best) {
      best = std::move(bits);
      have_best = true;
    }
  }

  void dfs(Cells cells) {
    refine(cells);
    size_t target = cells.size();
    for (size_t ci = 0; ci < cells.size(); ++ci)
      if (cells[ci].size() > 1) {
        target = ci;
        break;
      }
    if (target == cells.size()) {
      candidate(cells);
      return;
    }
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (ci != target) {
          child.push_back(cells[ci]);
        } else {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[target])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        }
      }
      dfs(std::move(child));
    }
  }

  std::vector<uint8_t> run() {
    Cells cells;
    std::vector<int> plain, term;
    for (int v = 0; v < n; ++v)
      (g.is_terminal(v) ? term : plain).push_back(v);
    if (!plain.empty()) cells.push_back(std::move(plain));
    if (!term.empty()) cells.push_back(std::move(term));
    dfs(std::move(cells));
    return best;
  }
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::string code;
  code.push_back(static_cast<char>(n));
  code.push_back(g.has_terminals() ? 1 : 0);
  std::vector<uint8_t> bitvec;
  if (n > 0) {
    Canonicalizer c(g);
    std::vector<uint8_t> adj = c.run();
    // Terminal flags in canonical order: terminals sit at the end by
    // construction of the initial partition.
    for (int i = 0; i < n; ++i)
      bitvec.push_back(g.has_terminals() && i >= n - 2 ? 1 : 0);
    bitvec.insert(bitvec.end(), adj.begin(), adj.end());
  }
  uint8_t acc = 0;
  int nb = 0;
  for (uint8_t b : bitvec) {
    acc = static_cast<uint8_t>((acc << 1) | b);
    if (++nb == 8) {
      code.push_back(static_cast<char>(acc));
      acc = 0;
      nb = 0;
    }
  }
  if (nb > 0) code.push_back(static_cast<char>(acc << (8 - nb)));
  return {code};
}

CanonicalForm canonical_form_underlying(const LabeledGraph& g) {
  return canonical_form(g.underlying());
}

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  if (a.has_terminals() != b.has_terminals()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string code_hex(const CanonicalForm& cf) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(cf.canonical_code.size() * 2);
  for (unsigned char c : cf.canonical_code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace cascade
