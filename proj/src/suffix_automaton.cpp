#include "mwi/suffix_automaton.hpp"

#include <algorithm>

namespace mwi {

SuffixAutomaton::SuffixAutomaton(const std::string& text) {
  states.reserve(text.size() * 2 + 1);
  states.emplace_back();  // root: the class of the empty string
  last = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    uint8_t c = static_cast<uint8_t>(text[i]);
    int32_t cur = static_cast<int32_t>(states.size());
    states.emplace_back();
    states[cur].len = states[last].len + 1;
    states[cur].end_pos = static_cast<int64_t>(i);
    int32_t p = last;
    while (p != -1 && states[p].get(c) == -1) {
      states[p].set(c, cur);
      p = states[p].link;
    }
    if (p == -1) {
      states[cur].link = 0;
    } else {
      int32_t q = states[p].get(c);
      if (states[p].len + 1 == states[q].len) {
        states[cur].link = q;
      } else {
        int32_t clone = static_cast<int32_t>(states.size());
        states.push_back(states[q]);
        states[clone].len = states[p].len + 1;
        while (p != -1 && states[p].get(c) == q) {
          states[p].set(c, clone);
          p = states[p].link;
        }
        states[q].link = clone;
        states[cur].link = clone;
      }
    }
    last = cur;
  }
  for (int32_t p = last; p != -1; p = states[p].link) states[p].is_final = true;
}

std::vector<int32_t> SuffixAutomaton::order_by_len() const {
  size_t max_len = 0;
  for (const State& s : states) max_len = std::max(max_len, static_cast<size_t>(s.len));
  std::vector<int32_t> bucket(max_len + 2, 0);
  for (const State& s : states) ++bucket[static_cast<size_t>(s.len) + 1];
  for (size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
  std::vector<int32_t> order(states.size());
  for (int32_t v = 0; v < static_cast<int32_t>(states.size()); ++v)
    order[bucket[static_cast<size_t>(states[v].len)]++] = v;
  return order;
}

std::vector<int64_t> SuffixAutomaton::occurrence_counts() const {
  std::vector<int64_t> occ(states.size(), 0);
  std::vector<int32_t> order = order_by_len();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int32_t v = *it;
    int64_t total = states[v].is_final ? 1 : 0;
    for (const auto& [c, to] : states[v].next) total += occ[to];
    occ[v] = total;
  }
  return occ;
}

std::vector<int32_t> SuffixAutomaton::left_extension_counts() const {
  std::vector<int32_t> cnt(states.size(), 0);
  for (size_t v = 1; v < states.size(); ++v) ++cnt[states[v].link];
  return cnt;
}

}  // namespace mwi
