#include "mwi/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mwi {

namespace {

// In-edges carry the node's strings whose lengths fall in
// [min_len(src)+|label|, max_len(src)+|label|]; those ranges partition
// [min_len(dst), max_len(dst)]. The slot order (and the suffix-link chain
// of the path tree) relies on this, so it is checked here once per build.
void check_range_partition(const Cdawg& c, int32_t v,
                           const std::vector<int32_t>& in_edges) {
  int64_t expect_high = c.nodes[v].max_len;
  for (int32_t e : in_edges) {
    const CdawgEdge& ed = c.edges[e];
    int64_t high = c.nodes[ed.src].max_len + ed.label_len;
    int64_t low = c.nodes[ed.src].min_len + ed.label_len;
    if (high != expect_high)
      throw std::logic_error("grammar: in-edge length ranges do not partition");
    expect_high = low - 1;
  }
  if (expect_high != c.nodes[v].min_len - 1)
    throw std::logic_error("grammar: in-edge length ranges do not cover the node");
}

}  // namespace

Grammar build_grammar(const Cdawg& c, const std::string* text) {
  const int32_t V = static_cast<int32_t>(c.nodes.size());
  Grammar g;
  g.root = c.sink();
  g.p_len.assign(V, 0);
  g.shortcut.assign(V, -1);
  g.effective.assign(V, -1);
  g.begin.assign(V + 1, 0);

  std::vector<std::vector<int32_t>> in_edges(V);
  for (int32_t e = 0; e < static_cast<int32_t>(c.edges.size()); ++e)
    in_edges[c.edges[e].dst].push_back(e);

  for (int32_t v = 0; v < V; ++v) {
    // Decreasing in-path length; lengths are distinct since the ranges
    // partition, so the order is total.
    std::sort(in_edges[v].begin(), in_edges[v].end(), [&](int32_t x, int32_t y) {
      int64_t lx = c.nodes[c.edges[x].src].max_len + c.edges[x].label_len;
      int64_t ly = c.nodes[c.edges[y].src].max_len + c.edges[y].label_len;
      if (lx != ly) return lx > ly;
      return c.edges[x].first_char < c.edges[y].first_char;
    });
    if (v != c.source()) check_range_partition(c, v, in_edges[v]);

    g.begin[v] = static_cast<int32_t>(g.slots.size());
    int64_t plen = 0;
    for (int32_t e : in_edges[v]) {
      const CdawgEdge& ed = c.edges[e];
      GrammarSlot s;
      if (ed.src == c.source()) {
        s.terminal = true;
        s.ch = ed.first_char;
        plen += 1;
      } else {
        s.terminal = false;
        s.node = ed.src;
        plen += g.p_len[ed.src];  // src < v, already filled
      }
      g.slots.push_back(s);
    }
    g.p_len[v] = plen;
    if (v != c.source() && plen != c.nodes[v].max_len - c.nodes[v].min_len + 1)
      throw std::logic_error("grammar: expansion length != string count of node");

    if (static_cast<int32_t>(g.slots.size()) - g.begin[v] == 1) {
      const GrammarSlot& s = g.slots[g.begin[v]];
      if (s.terminal) {
        g.effective[v] = s.ch;
      } else if (g.effective[s.node] >= 0) {
        g.effective[v] = g.effective[s.node];
      } else {
        g.shortcut[v] = g.shortcut[s.node] >= 0 ? g.shortcut[s.node] : s.node;
      }
    }
  }
  g.begin[V] = static_cast<int32_t>(g.slots.size());

  if (text) {
    std::string sink_str = decompress_node(g, c, c.sink());
    if (sink_str != *text)
      throw std::logic_error("grammar: sink does not decompress to the text");
  }
  return g;
}

void expand_p(const Grammar& g, int32_t v, std::string& out, int64_t* work) {
  std::vector<GrammarSlot> stack;
  GrammarSlot start;
  start.node = v;
  stack.push_back(start);
  while (!stack.empty()) {
    GrammarSlot s = stack.back();
    stack.pop_back();
    if (work) ++*work;
    if (s.terminal) {
      out.push_back(static_cast<char>(s.ch));
      continue;
    }
    int32_t x = s.node;
    if (g.effective[x] >= 0) {
      out.push_back(static_cast<char>(g.effective[x]));
      continue;
    }
    if (g.shortcut[x] >= 0) x = g.shortcut[x];
    for (int32_t i = g.begin[x + 1] - 1; i >= g.begin[x]; --i) stack.push_back(g.slots[i]);
  }
}

std::string decompress_node(const Grammar& g, const Cdawg& c, int32_t v, int64_t* work) {
  std::string out;
  out.reserve(static_cast<size_t>(c.nodes[v].max_len));
  for (int32_t z = v; z != c.source(); z = c.nodes[z].slink) {
    if (work) ++*work;
    expand_p(g, z, out, work);
  }
  assert(static_cast<int64_t>(out.size()) == c.nodes[v].max_len);
  return out;
}

}  // namespace mwi
