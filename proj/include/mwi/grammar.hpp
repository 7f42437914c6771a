#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwi/cdawg.hpp"

namespace mwi {

// One right-hand-side entry of a production. Terminal slots stand for the
// single string that reaches the node straight from the source along this
// in-edge; non-terminal slots expand to the first characters contributed by
// all strings arriving over the in-edge.
struct GrammarSlot {
  bool terminal = false;
  uint8_t ch = 0;    // terminal symbol (first symbol of the in-edge label)
  int32_t node = 0;  // source node of the in-edge, for non-terminal slots
};

// Straight-line grammar whose derivation DAG mirrors the automaton with all
// edges reversed: one non-terminal per node, one slot per in-edge, ordered by
// decreasing in-path length. p(v), the expansion of node v's production,
// is the string of first characters of the strings of v by decreasing length,
// and concatenating p along the suffix-link chain of v spells v's longest
// string front to back.
struct Grammar {
  std::vector<int32_t> begin;      // slot span per node; size node_count+1
  std::vector<GrammarSlot> slots;  // all productions, node-major
  std::vector<int64_t> p_len;      // |p(v)| = number of strings of node v
  // Unary-chain shortcuts: productions that are a single non-terminal are
  // chased to the first multi-slot descendant (shortcut) or, when the chain
  // ends in a single terminal, resolved to that symbol (effective >= 0).
  std::vector<int32_t> shortcut;
  std::vector<int16_t> effective;
  int32_t root = 0;  // non-terminal of the sink

  int slot_count(int32_t v) const { return begin[v + 1] - begin[v]; }
};

// Builds the grammar; `text`, when given, is only used to verify that the
// sink expands back to it. Throws std::logic_error when verification fails.
Grammar build_grammar(const Cdawg& c, const std::string* text = nullptr);

// Appends p(v) to out. `work` (if given) accumulates the number of expansion
// steps taken.
void expand_p(const Grammar& g, int32_t v, std::string& out, int64_t* work = nullptr);

// Longest string of node v, rebuilt without the text by walking suffix
// links and concatenating p; work is linear in the result length.
std::string decompress_node(const Grammar& g, const Cdawg& c, int32_t v,
                            int64_t* work = nullptr);

}  // namespace mwi
