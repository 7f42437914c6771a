#pragma once

#include <cstdint>
#include <vector>

namespace mwi {

enum class WordKind : uint8_t { kMaw = 0, kEbf = 1, kMrw = 2, kMus = 3 };

const char* word_kind_name(WordKind k);

// A reported word a·u·b, with u referenced as a white tree node instead of
// being spelled out. Handles are in build orientation; materialization
// reverses the spelled word when the index was built on the reversed text.
struct WordHandle {
  uint8_t a = 0;
  uint8_t b = 0;
  int32_t u_node = -1;  // white tree node; u = its (longest) string
  WordKind kind = WordKind::kMaw;
  int64_t k = 0;    // occurrence count of a·u·b (0 for MAW)
  int64_t len = 0;  // |a·u·b|
  // Sole occurrence in original-orientation coordinates, inclusive; only for
  // kind == kMus, -1 otherwise.
  int64_t begin = -1;
  int64_t end = -1;
  bool reversed = false;
};

// Traversal instrumentation: path nodes visited, child-list entries
// compared, visits that reported nothing, and words emitted.
struct Counters {
  int64_t visits = 0;
  int64_t comparisons = 0;
  int64_t barren = 0;
  int64_t emitted = 0;
};

// Eagerly enumerated short words, replayed for bounded-length queries.
// m_star is the largest m with |set^{<=m}| <= e_min (text length + 2 when
// the whole set fits); items holds exactly those words, sorted by length
// with the enumeration order preserved within a length.
struct StoredPrefixSet {
  int64_t m_star = 0;
  std::vector<WordHandle> items;
};

}  // namespace mwi
