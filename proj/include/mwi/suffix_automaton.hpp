#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mwi {

// Online suffix automaton (DAWG). States are right-extension classes of the
// text; `len` is the longest member, `link` the class of the longest proper
// suffix outside the state, `end_pos` one end position (0-based, inclusive)
// of an occurrence of every member.
struct SuffixAutomaton {
  struct State {
    int64_t len = 0;
    int32_t link = -1;
    int64_t end_pos = -1;
    bool is_final = false;
    std::vector<std::pair<uint8_t, int32_t>> next;  // sorted by char

    int32_t get(uint8_t c) const {
      for (const auto& [ch, to] : next)
        if (ch == c) return to;
      return -1;
    }
    void set(uint8_t c, int32_t to) {
      for (auto& [ch, t] : next) {
        if (ch == c) {
          t = to;
          return;
        }
      }
      next.emplace_back(c, to);
      for (size_t i = next.size() - 1; i > 0 && next[i - 1].first > next[i].first; --i)
        std::swap(next[i - 1], next[i]);
    }
  };

  std::vector<State> states;
  int32_t last = 0;

  explicit SuffixAutomaton(const std::string& text);

  size_t size() const { return states.size(); }

  // States sorted by ascending len (root first); every link precedes its
  // children, so this is a topological order of the link tree and a reverse
  // topological order of the transition DAG w.r.t. summing occurrence counts.
  std::vector<int32_t> order_by_len() const;

  // Occurrence count per state: sum over transitions plus one for finals.
  std::vector<int64_t> occurrence_counts() const;

  // Number of link-children per state == number of distinct left-extension
  // characters of the state's longest member.
  std::vector<int32_t> left_extension_counts() const;
};

}  // namespace mwi
