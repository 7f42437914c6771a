#include "mwi/lpt.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mwi {

LptPlus build_lpt_plus(const Cdawg& c) {
  const int32_t V = static_cast<int32_t>(c.nodes.size());
  LptPlus t;
  t.white_count = V;
  t.nodes.resize(V);
  for (int32_t v = 0; v < V; ++v) {
    t.nodes[v].str_len = c.nodes[v].max_len;
    t.nodes[v].cdawg_node = v;
  }
  for (int32_t e = 0; e < static_cast<int32_t>(c.edges.size()); ++e) {
    const CdawgEdge& ed = c.edges[e];
    if (ed.primary) {
      LptNode& nd = t.nodes[ed.dst];
      nd.parent = ed.src;
      nd.pedge_first = ed.first_char;
      nd.pedge_len = ed.label_len;
      nd.cedge = e;
    } else {
      LptNode nd;
      nd.parent = ed.src;
      nd.pedge_first = ed.first_char;
      nd.pedge_len = ed.label_len;
      nd.cedge = e;
      nd.str_len = c.nodes[ed.src].max_len + ed.label_len;
      nd.cdawg_node = ed.dst;
      nd.gray = true;
      t.nodes.push_back(nd);
    }
  }
  const int32_t total = static_cast<int32_t>(t.nodes.size());

  // Suffix-link chains: white(v), then v's grays by strictly decreasing
  // str_len, then white(slink(v)). Equal gray lengths cannot happen (the
  // in-edge length ranges partition); the first-char tie-break below is a
  // guard and is flagged if ever taken.
  std::vector<std::vector<int32_t>> grays_of(V);
  for (int32_t x = V; x < total; ++x) grays_of[t.nodes[x].cdawg_node].push_back(x);
  for (int32_t v = 0; v < V; ++v) {
    auto& gs = grays_of[v];
    std::sort(gs.begin(), gs.end(), [&](int32_t a, int32_t b) {
      if (t.nodes[a].str_len != t.nodes[b].str_len)
        return t.nodes[a].str_len > t.nodes[b].str_len;
      assert(!"duplicate split length in a suffix-link chain");
      return t.nodes[a].pedge_first < t.nodes[b].pedge_first;
    });
    int32_t prev = t.white(v);
    for (int32_t gx : gs) {
      t.nodes[prev].slink = gx;
      prev = gx;
    }
    t.nodes[prev].slink = c.nodes[v].slink >= 0 ? t.white(c.nodes[v].slink) : -1;
    // The chain must descend strictly through (min_len(v)-1, max_len(v)].
    int64_t upper = c.nodes[v].max_len;
    for (int32_t gx : gs) {
      if (!(t.nodes[gx].str_len < upper && t.nodes[gx].str_len >= c.nodes[v].min_len))
        throw std::logic_error("split chain lengths out of range");
      upper = t.nodes[gx].str_len;
    }
  }

  // Depths: parents always have strictly smaller str_len.
  std::vector<int32_t> by_len(total);
  for (int32_t i = 0; i < total; ++i) by_len[i] = i;
  std::stable_sort(by_len.begin(), by_len.end(),
                   [&](int32_t a, int32_t b) { return t.nodes[a].str_len < t.nodes[b].str_len; });
  for (int32_t x : by_len)
    t.nodes[x].depth = t.nodes[x].parent < 0 ? 0 : t.nodes[t.nodes[x].parent].depth + 1;

  t.edge_order.reserve(total - 1);
  for (int32_t x = 0; x < total; ++x)
    if (t.nodes[x].parent >= 0) t.edge_order.push_back(x);
  std::sort(t.edge_order.begin(), t.edge_order.end(), [&](int32_t a, int32_t b) {
    if (t.nodes[a].parent != t.nodes[b].parent) return t.nodes[a].parent < t.nodes[b].parent;
    return a < b;
  });
  t.child_begin.assign(total + 1, 0);
  for (int32_t x : t.edge_order) ++t.child_begin[t.nodes[x].parent + 1];
  for (int32_t i = 1; i <= total; ++i) t.child_begin[i] += t.child_begin[i - 1];

  int levels = 1;
  while ((1 << levels) < total) ++levels;
  t.up.assign(levels, std::vector<int32_t>(total, -1));
  for (int32_t x = 0; x < total; ++x) t.up[0][x] = t.nodes[x].parent;
  for (int k = 1; k < levels; ++k)
    for (int32_t x = 0; x < total; ++x) {
      int32_t mid = t.up[k - 1][x];
      t.up[k][x] = mid < 0 ? -1 : t.up[k - 1][mid];
    }
  return t;
}

namespace {

// Label bytes of the automaton edge mirrored by x's parent edge.
const char* edge_label(const Cdawg& c, const std::string& text, const LptNode& x) {
  const CdawgEdge& ed = c.edges[x.cedge];
  return text.data() + (ed.label_end - ed.label_len + 1);
}

void verify_fast_link(const LptPlus& t, const Cdawg& c, const std::string& text, int32_t x) {
  const LptNode& nd = t.nodes[x];
  const char* label = edge_label(c, text, nd);
  int64_t len = nd.pedge_len;
  // For source edges the chain runs through the root, which represents the
  // label with its first symbol removed.
  int64_t skip = nd.top < 0 ? 1 : 0;
  int32_t cur = nd.top < 0 ? t.white(c.source()) : nd.top;
  int64_t pos = skip;
  while (pos < len) {
    uint8_t want = static_cast<uint8_t>(label[pos]);
    int32_t next = -1;
    for (int32_t i = t.child_begin[cur]; i < t.child_begin[cur + 1]; ++i) {
      int32_t ch = t.edge_order[i];
      if (t.nodes[ch].pedge_first == want) {
        next = ch;
        break;
      }
    }
    if (next < 0) throw std::logic_error("fast link: descent has no matching branch");
    const LptNode& cn = t.nodes[next];
    if (cn.pedge_len > len - pos)
      throw std::logic_error("fast link: descent overshoots the label");
    const char* clabel = edge_label(c, text, cn);
    for (int64_t j = 0; j < cn.pedge_len; ++j)
      if (clabel[j] != label[pos + j])
        throw std::logic_error("fast link: descent spells a different label");
    pos += cn.pedge_len;
    cur = next;
  }
  if (cur != nd.bottom) throw std::logic_error("fast link: descent does not land on bottom");
}

}  // namespace

void compute_fast_links(LptPlus& lpt, const Cdawg& c, const std::string* text, bool verify) {
  for (int32_t x = 0; x < static_cast<int32_t>(lpt.nodes.size()); ++x) {
    LptNode& nd = lpt.nodes[x];
    if (nd.parent < 0) continue;
    const CdawgEdge& ed = c.edges[nd.cedge];
    nd.top = ed.src == c.source() ? -1 : lpt.white(c.nodes[ed.src].slink);
    nd.bottom = nd.slink;
    if (nd.bottom < 0) throw std::logic_error("fast link: missing chain successor");
    int64_t bottom_len = lpt.nodes[nd.bottom].str_len;
    if (bottom_len != c.nodes[ed.src].min_len + ed.label_len - 1)
      throw std::logic_error("fast link: bottom length mismatch");
    if (nd.top >= 0 && bottom_len - lpt.nodes[nd.top].str_len != ed.label_len)
      throw std::logic_error("fast link: top/bottom span != label length");
    // The shortest string over this edge starts with the source's wchar (or
    // is the label itself); the build text, when present, must agree.
    nd.a_char = ed.src == c.source() ? ed.first_char : c.nodes[ed.src].wchar;
    if (text) {
      const CdawgNode& z = c.nodes[nd.cdawg_node];
      if (nd.a_char != static_cast<uint8_t>((*text)[z.end_pos - bottom_len]))
        throw std::logic_error("fast link: a_char disagrees with the text");
      if (verify) verify_fast_link(lpt, c, *text, x);
    }
  }
}

int32_t level_ancestor(const LptPlus& lpt, int32_t node, int64_t target_len) {
  if (target_len > lpt.nodes[node].str_len)
    throw std::invalid_argument("level_ancestor: target longer than the node's string");
  int32_t cur = node;
  for (int k = static_cast<int>(lpt.up.size()) - 1; k >= 0; --k) {
    int32_t anc = lpt.up[k][cur];
    if (anc >= 0 && lpt.nodes[anc].str_len >= target_len) cur = anc;
  }
  return cur;
}

}  // namespace mwi
