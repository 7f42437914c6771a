#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwi/cdawg.hpp"

namespace mwi {

// Node of the extended longest-path tree. White nodes [0, white_count) are
// the automaton nodes (same ids); gray nodes follow, one leaf per secondary
// edge, standing for the longest string that reaches the edge's target over
// that edge. Tree edges mirror automaton edges one-to-one, so the tree has
// exactly e_R edges.
struct LptNode {
  int32_t parent = -1;
  uint8_t pedge_first = 0;  // first symbol of the parent-edge label
  int64_t pedge_len = 0;
  int64_t str_len = 0;      // length of the represented string
  int32_t slink = -1;       // longest proper suffix that is also a tree node
  int32_t cdawg_node = 0;   // own node for whites; copied-from node for grays
  bool gray = false;
  int32_t cedge = -1;       // automaton edge mirrored by the parent edge
  int32_t depth = 0;
  // Fast link of the parent edge: its label, prefixed with the string of
  // `top`, spells the string of `bottom`. top is -1 when the parent is the
  // source (the suffix chain then runs through the root). a_char is the
  // symbol extending str(bottom) to the shortest string carried by the edge.
  int32_t top = -1;
  int32_t bottom = -1;
  uint8_t a_char = 0;
};

struct LptPlus {
  std::vector<LptNode> nodes;
  int32_t white_count = 0;
  std::vector<int32_t> edge_order;   // non-root nodes sorted by (parent, id)
  std::vector<int32_t> child_begin;  // per node: span in edge_order; size nodes+1
  std::vector<std::vector<int32_t>> up;  // binary-lifting ancestor table

  int32_t white(int32_t cdawg_node) const { return cdawg_node; }
  bool is_white(int32_t x) const { return x < white_count; }
};

LptPlus build_lpt_plus(const Cdawg& c);

// Fills top/bottom/a_char for every tree edge. When `text` is given, a_char
// is cross-checked against the build text; when `verify` is also set, the
// label of every edge is re-spelled through the tree from `top` (from the
// root for source edges, skipping the first symbol) and must land on
// `bottom`. Any mismatch throws std::logic_error.
void compute_fast_links(LptPlus& lpt, const Cdawg& c, const std::string* text, bool verify);

// Shallowest ancestor-or-self of `node` whose string length is still
// >= target_len. Requires target_len <= str_len(node).
int32_t level_ancestor(const LptPlus& lpt, int32_t node, int64_t target_len);

}  // namespace mwi
