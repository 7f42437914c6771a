#include "mwi/cdawg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mwi/suffix_automaton.hpp"

namespace mwi {

Cdawg build_cdawg(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("build_cdawg: empty text");
  SuffixAutomaton sa(text);
  const size_t m = sa.size();

  std::vector<char> kept(m, 0);
  for (size_t x = 0; x < m; ++x)
    kept[x] = sa.states[x].next.size() >= 2 || sa.states[x].is_final;
  assert(kept[0]);

  // Ids in ascending len order; ties resolved by construction order.
  std::vector<int32_t> order = sa.order_by_len();
  std::vector<int32_t> id(m, -1);
  int32_t node_count = 0;
  for (int32_t x : order)
    if (kept[x]) id[x] = node_count++;

  std::vector<int32_t> left = sa.left_extension_counts();

  // Dropped states form unary chains; resolve each to its kept endpoint in
  // one descending-length pass (transition targets are always longer), so
  // compaction stays linear instead of re-walking chains per edge.
  std::vector<int32_t> skip_to(m, -1);
  std::vector<int64_t> skip_hops(m, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int32_t x = *it;
    if (kept[x]) continue;
    assert(sa.states[x].next.size() == 1 && !sa.states[x].is_final);
    int32_t t = sa.states[x].next[0].second;
    if (kept[t]) {
      skip_to[x] = t;
      skip_hops[x] = 1;
    } else {
      skip_to[x] = skip_to[t];
      skip_hops[x] = skip_hops[t] + 1;
    }
  }

  Cdawg c;
  c.n = static_cast<int64_t>(text.size());
  c.nodes.resize(node_count);
  for (int32_t x : order) {
    if (!kept[x]) continue;
    const auto& st = sa.states[x];
    CdawgNode& nd = c.nodes[id[x]];
    nd.max_len = st.len;
    nd.end_pos = st.end_pos;
    nd.is_final = st.is_final;
    nd.left_cnt = left[x];
    if (st.link >= 0) {
      assert(kept[st.link]);
      nd.slink = id[st.link];
      nd.min_len = sa.states[st.link].len + 1;
      nd.wchar = static_cast<uint8_t>(text[st.end_pos - sa.states[st.link].len]);
    } else {
      nd.slink = -1;
      nd.min_len = 0;
    }
    nd.edge_begin = static_cast<int32_t>(c.edges.size());
    for (const auto& [ch, t0] : st.next) {
      int32_t t = t0;
      int64_t label_len = 1;
      if (!kept[t]) {
        label_len += skip_hops[t];
        t = skip_to[t];
      }
      CdawgEdge e;
      e.src = id[x];
      e.dst = id[t];
      e.first_char = ch;
      e.label_len = label_len;
      e.label_end = sa.states[t].end_pos;
      e.primary = (st.len + label_len == sa.states[t].len);
      c.edges.push_back(e);
    }
    nd.edge_end = static_cast<int32_t>(c.edges.size());
  }

  // Occurrence counts: every target id exceeds its source id, so one
  // descending pass suffices.
  for (int32_t v = node_count - 1; v >= 0; --v) {
    int64_t total = c.nodes[v].is_final ? 1 : 0;
    for (int32_t e = c.nodes[v].edge_begin; e < c.nodes[v].edge_end; ++e) {
      assert(c.edges[e].dst > v);
      total += c.nodes[c.edges[e].dst].occ;
    }
    c.nodes[v].occ = total;
  }
  assert(c.nodes[0].occ == c.n + 1);
  assert(c.nodes[c.sink()].max_len == c.n);
  return c;
}

IndexStats compute_stats(const std::string& text) {
  IndexStats s;
  s.n = static_cast<int64_t>(text.size());
  s.sigma = sigma(text);
  {
    Cdawg fwd = build_cdawg(text);
    s.e_R = static_cast<int64_t>(fwd.edges.size());
    s.node_count = static_cast<int64_t>(fwd.nodes.size());
  }
  {
    std::string rev(text.rbegin(), text.rend());
    Cdawg bwd = build_cdawg(rev);
    s.e_L = static_cast<int64_t>(bwd.edges.size());
  }
  s.e_min = std::min(s.e_R, s.e_L);
  s.reversed = s.e_L < s.e_R;
  return s;
}

std::pair<Cdawg, IndexStats> choose_orientation(const std::string& raw, SentinelMode mode) {
  std::string text = wrap_text(raw, mode);
  IndexStats s = compute_stats(text);
  if (s.reversed) {
    std::string rev(text.rbegin(), text.rend());
    return {build_cdawg(rev), s};
  }
  return {build_cdawg(text), s};
}

}  // namespace mwi
