#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwi/text.hpp"

namespace mwi {

// One node of the compacted automaton. Node ids are assigned in ascending
// max_len order, so 0 is the source, nodes.size()-1 the sink, and both the
// suffix link and every edge source have smaller ids than their targets.
struct CdawgNode {
  int64_t max_len = 0;   // length of the longest string ending here
  int64_t min_len = 0;   // length of the shortest (= max_len of slink + 1)
  int32_t slink = -1;    // node id; -1 for the source
  int64_t end_pos = -1;  // one occurrence end (0-based, inclusive) in the build text
  uint8_t wchar = 0;     // first symbol of the shortest string (undefined for source)
  bool is_final = false; // some string ending here is a suffix of the text
  int64_t occ = 0;       // occurrence count, identical for all strings of the node
  int32_t left_cnt = 0;  // number of distinct symbols a with a·(longest string) occurring
  int32_t edge_begin = 0, edge_end = 0;  // out-edge span in Cdawg::edges
};

struct CdawgEdge {
  int32_t src = 0, dst = 0;
  uint8_t first_char = 0;
  int64_t label_len = 0;
  int64_t label_end = -1;  // end position of the label in the build text
  bool primary = false;    // src's longest string extended by the label is dst's longest
};

struct Cdawg {
  std::vector<CdawgNode> nodes;
  std::vector<CdawgEdge> edges;  // sorted by (src, first_char)
  int64_t n = 0;                 // build text length

  int32_t source() const { return 0; }
  int32_t sink() const { return static_cast<int32_t>(nodes.size()) - 1; }
  int out_degree(int32_t v) const { return nodes[v].edge_end - nodes[v].edge_begin; }

  // Out-edge of v whose label starts with c, or -1.
  int32_t find_edge(int32_t v, uint8_t c) const {
    for (int32_t e = nodes[v].edge_begin; e < nodes[v].edge_end; ++e)
      if (edges[e].first_char == c) return e;
    return -1;
  }
};

struct IndexStats {
  int64_t n = 0;
  int32_t sigma = 0;
  int64_t e_R = 0;
  int64_t e_L = 0;
  int64_t e_min = 0;
  int64_t node_count = 0;
  bool reversed = false;
};

// Compacts the suffix automaton of `text`: keeps branching and final states,
// merges unary non-final chains into labeled edges.
Cdawg build_cdawg(const std::string& text);

// Builds both orientations to fill e_R/e_L; reversed = (e_L < e_R).
IndexStats compute_stats(const std::string& text);

// Retains the orientation with fewer edges (forward on ties). The returned
// automaton is built on reverse(text) iff stats.reversed.
std::pair<Cdawg, IndexStats> choose_orientation(const std::string& raw, SentinelMode mode);

}  // namespace mwi
