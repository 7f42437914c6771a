#pragma once

#include <string>

#include "mwi/cdawg.hpp"
#include "mwi/grammar.hpp"
#include "mwi/lpt.hpp"
#include "mwi/text.hpp"
#include "mwi/words.hpp"

namespace mwi {

enum class Orientation { kAuto, kForward, kReversed };

struct BuildOptions {
  SentinelMode mode = SentinelMode::kNone;
  // kAuto picks the orientation with fewer automaton edges (forward on ties).
  Orientation orientation = Orientation::kAuto;
  // Keep the (wrapped, possibly reversed) build text in the index. Needed by
  // consistency checks and dot rendering, not by enumeration.
  bool retain_text = true;
  // Build texts up to this size get the full fast-link re-spelling check,
  // which is quadratic in the worst case.
  int64_t verify_limit = 512;
};

struct Index {
  SentinelMode mode = SentinelMode::kNone;
  IndexStats stats;
  // The build text ends in a byte occurring nowhere else; every climb visit
  // is then guaranteed to report at least one MAW.
  bool every_visit_emits = false;
  std::string text;  // build orientation; empty when not retained
  Cdawg cdawg;
  Grammar grammar;
  LptPlus lpt;
  StoredPrefixSet stored_maws;
  StoredPrefixSet stored_ebfs;

  bool reversed() const { return stats.reversed; }
};

// Wraps `raw` per the sentinel mode and builds all index layers.
// Throws ReservedByteError on sentinel collisions and std::logic_error when
// any construction self-check fails.
Index build_index(const std::string& raw, const BuildOptions& opts = {});

}  // namespace mwi
