#include "mwi/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace mwi {

const char* word_kind_name(WordKind k) {
  switch (k) {
    case WordKind::kMaw: return "maw";
    case WordKind::kEbf: return "ebf";
    case WordKind::kMrw: return "mrw";
    case WordKind::kMus: return "mus";
  }
  return "?";
}

namespace {

constexpr int64_t kNoLimit = std::numeric_limits<int64_t>::max();

// One pass over all tree edges, reporting MAWs or EBFs whose total length
// falls in [lo, hi]. Every edge contributes the merge at its lowest carried
// string (only when that lands on a white node) and one visit per tree node
// strictly between the fast link's bottom and top.
struct Walk {
  const Index& ix;
  bool maw;  // report MAWs; otherwise EBFs
  int64_t lo;
  int64_t hi;
  const EmitFn& emit;
  Counters& ctr;

  bool stopped = false;
  int64_t count = 0;

  bool send(uint8_t a, int32_t u_node, uint8_t b, int64_t occ) {
    WordHandle h;
    h.a = a;
    h.b = b;
    h.u_node = u_node;
    h.kind = maw ? WordKind::kMaw : WordKind::kEbf;
    h.k = occ;
    h.len = ix.lpt.nodes[u_node].str_len + 2;
    h.reversed = ix.reversed();
    ++ctr.emitted;
    ++count;
    if (!emit(h)) stopped = true;
    return !stopped;
  }

  // True when the strings of node z have at least two left and two right
  // single-symbol extensions, i.e. candidates over z pass the EBF filter.
  bool two_sided(int32_t z) const {
    ++ctr.comparisons;
    return ix.cdawg.nodes[z].left_cnt >= 2 && ix.cdawg.out_degree(z) >= 2;
  }

  void merge_at_bottom(uint8_t a, int32_t bottom, int32_t y);
  void visit(uint8_t a, int32_t cur, uint8_t c, int64_t occ);
  void run();
};

void Walk::merge_at_bottom(uint8_t a, int32_t bottom, int32_t y) {
  const Cdawg& c = ix.cdawg;
  const int32_t z = ix.lpt.nodes[bottom].cdawg_node;
  assert(z == c.nodes[y].slink);
  const CdawgNode& ny = c.nodes[y];
  const CdawgNode& nz = c.nodes[z];
  if (maw) {
    // children(y) ⊆ children(z); the complement is exactly the MAW symbols.
    int32_t j = ny.edge_begin;
    for (int32_t i = nz.edge_begin; i < nz.edge_end; ++i) {
      ++ctr.comparisons;
      uint8_t cz = c.edges[i].first_char;
      if (j < ny.edge_end && c.edges[j].first_char == cz) {
        ++j;
        continue;
      }
      assert(j >= ny.edge_end || c.edges[j].first_char > cz);
      if (!send(a, bottom, cz, 0)) return;
    }
    assert(j == ny.edge_end);
  } else {
    if (!two_sided(z)) return;
    for (int32_t j = ny.edge_begin; j < ny.edge_end; ++j) {
      ++ctr.comparisons;
      assert(c.find_edge(z, c.edges[j].first_char) >= 0);
      if (!send(a, bottom, c.edges[j].first_char, c.nodes[c.edges[j].dst].occ)) return;
    }
  }
}

void Walk::visit(uint8_t a, int32_t cur, uint8_t c, int64_t occ) {
  const Cdawg& cd = ix.cdawg;
  assert(ix.lpt.is_white(cur));
  const int32_t z = ix.lpt.nodes[cur].cdawg_node;
  assert(z == cur);
  ++ctr.visits;
  if (maw) {
    bool found = false;
    int64_t emitted_here = 0;
    const CdawgNode& nz = cd.nodes[z];
    for (int32_t i = nz.edge_begin; i < nz.edge_end; ++i) {
      ++ctr.comparisons;
      if (cd.edges[i].first_char == c) {
        found = true;
        continue;
      }
      ++emitted_here;
      if (!send(a, cur, cd.edges[i].first_char, 0)) return;
    }
    assert(found);
    (void)found;
    if (emitted_here == 0) {
      ++ctr.barren;
      // With a unique final byte every visit reports something (the text
      // never branches into "only the continuation symbol").
      assert(!ix.every_visit_emits);
    }
  } else {
    if (two_sided(z)) send(a, cur, c, occ);
  }
}

void Walk::run() {
  const LptPlus& t = ix.lpt;
  const Cdawg& c = ix.cdawg;
  const bool bounded_above = hi != kNoLimit;
  for (int32_t x = 1; x < static_cast<int32_t>(t.nodes.size()) && !stopped; ++x) {
    const LptNode& nd = t.nodes[x];
    assert(nd.parent >= 0);
    const int32_t bottom = nd.bottom;
    const int32_t top = nd.top;
    // Nothing on this edge is short enough.
    if (bounded_above && top >= 0 && t.nodes[top].str_len >= hi - 1) continue;

    if (t.is_white(bottom)) {
      int64_t len1 = t.nodes[bottom].str_len + 2;
      if (len1 >= lo && len1 <= hi) {
        assert(nd.cdawg_node == c.edges[nd.cedge].dst);
        merge_at_bottom(nd.a_char, bottom, nd.cdawg_node);
        if (stopped) return;
      }
    }

    int32_t child = bottom;
    if (bounded_above && t.nodes[bottom].str_len >= hi - 1)
      child = level_ancestor(t, bottom, hi - 1);
    const int64_t occ = c.nodes[c.edges[nd.cedge].dst].occ;
    int32_t cur = t.nodes[child].parent;
    bool broke = false;
    while (cur != top && cur != -1) {
      if (t.nodes[cur].str_len + 2 < lo) {
        broke = true;
        break;
      }
      visit(nd.a_char, cur, t.nodes[child].pedge_first, occ);
      if (stopped) return;
      child = cur;
      cur = t.nodes[cur].parent;
    }
    if (!broke) assert(top == -1 ? cur == -1 : cur == top);
  }
}

int64_t run_walk(const Index& ix, bool maw, int64_t lo, int64_t hi, const EmitFn& emit,
                 Counters* ctr) {
  Counters local;
  Walk w{ix, maw, lo, hi, emit, ctr ? *ctr : local};
  w.run();
  return w.count;
}

// Bounded-above queries stream in non-decreasing length order so that the
// stored-set replay and the live traversal are interchangeable.
int64_t run_sorted(const Index& ix, bool maw, int64_t ell, const EmitFn& emit, Counters* ctr) {
  std::vector<WordHandle> got;
  run_walk(
      ix, maw, 2, ell, [&](const WordHandle& h) { got.push_back(h); return true; }, ctr);
  std::stable_sort(got.begin(), got.end(),
                   [](const WordHandle& a, const WordHandle& b) { return a.len < b.len; });
  int64_t count = 0;
  for (const WordHandle& h : got) {
    ++count;
    if (!emit(h)) break;
  }
  return count;
}

int64_t replay(const StoredPrefixSet& s, int64_t ell, const EmitFn& emit) {
  int64_t count = 0;
  for (const WordHandle& h : s.items) {
    if (h.len > ell) break;
    ++count;
    if (!emit(h)) break;
  }
  return count;
}

int64_t length_bounded(const Index& ix, bool maw, int64_t ell, Bound dir, const EmitFn& emit,
                       Counters* ctr, bool force_traversal) {
  if (ell < 2) throw std::invalid_argument("length bound must be at least 2");
  if (dir == Bound::kAtLeast) return run_walk(ix, maw, ell, kNoLimit, emit, ctr);
  const StoredPrefixSet& s = maw ? ix.stored_maws : ix.stored_ebfs;
  if (!force_traversal && ell <= s.m_star) return replay(s, ell, emit);
  return run_sorted(ix, maw, ell, emit, ctr);
}

StoredPrefixSet build_stored(const Index& ix, bool maw) {
  std::vector<WordHandle> all;
  run_walk(
      ix, maw, 2, kNoLimit, [&](const WordHandle& h) { all.push_back(h); return true; },
      nullptr);
  std::stable_sort(all.begin(), all.end(),
                   [](const WordHandle& a, const WordHandle& b) { return a.len < b.len; });
  const int64_t budget = ix.stats.e_min;
  size_t keep = 0;
  int64_t kept = 0;
  while (keep < all.size()) {
    size_t j = keep;
    while (j < all.size() && all[j].len == all[keep].len) ++j;
    if (kept + static_cast<int64_t>(j - keep) > budget) break;
    kept += static_cast<int64_t>(j - keep);
    keep = j;
  }
  StoredPrefixSet s;
  s.m_star = keep == all.size() ? ix.stats.n + 2 : all[keep].len - 1;
  s.items.assign(all.begin(), all.begin() + keep);
  return s;
}

}  // namespace

int64_t enumerate_maws(const Index& ix, const EmitFn& emit, Counters* ctr) {
  return run_walk(ix, true, 2, kNoLimit, emit, ctr);
}

int64_t enumerate_ebfs(const Index& ix, const EmitFn& emit, Counters* ctr) {
  return run_walk(ix, false, 2, kNoLimit, emit, ctr);
}

int64_t maws_length_bounded(const Index& ix, int64_t ell, Bound dir, const EmitFn& emit,
                            Counters* ctr, bool force_traversal) {
  return length_bounded(ix, true, ell, dir, emit, ctr, force_traversal);
}

int64_t ebfs_length_bounded(const Index& ix, int64_t ell, Bound dir, const EmitFn& emit,
                            Counters* ctr, bool force_traversal) {
  return length_bounded(ix, false, ell, dir, emit, ctr, force_traversal);
}

namespace {

// Every occurring minimal rare word a·u·b sits exactly one symbol past a
// branching non-source node v₁: a·u is v₁'s shortest string (a its Weiner
// symbol, u the longest string of slink(v₁)) and b starts one of v₁'s
// out-edges. occ(a·u·b) is the occ of that edge's target; occ(u·b) is read
// off the matching out-edge of slink(v₁).
int64_t rare_words(const Index& ix, bool unique_only, const EmitFn& emit) {
  const Cdawg& c = ix.cdawg;
  int64_t count = 0;
  for (const CdawgEdge& e : c.edges) {
    if (e.src == c.source()) continue;
    const CdawgNode& v1 = c.nodes[e.src];
    const int64_t k = c.nodes[e.dst].occ;
    assert(v1.occ > k);
    if (unique_only && k != 1) continue;
    const int32_t ub_edge = c.find_edge(v1.slink, e.first_char);
    assert(ub_edge >= 0);
    if (c.nodes[c.edges[ub_edge].dst].occ <= k) continue;

    WordHandle h;
    h.a = v1.wchar;
    h.b = e.first_char;
    h.u_node = v1.slink;
    h.kind = unique_only ? WordKind::kMus : WordKind::kMrw;
    h.k = k;
    h.len = v1.min_len + 1;
    h.reversed = ix.reversed();
    if (unique_only) {
      // The word's sole occurrence ends one symbol past v₁ inside the sole
      // occurrence of v₂'s strings.
      int64_t end = c.nodes[e.dst].end_pos - e.label_len + 1;
      int64_t begin = end - h.len + 1;
      assert(begin >= 0 && end < ix.stats.n);
      if (h.reversed) {
        h.begin = ix.stats.n - 1 - end;
        h.end = ix.stats.n - 1 - begin;
      } else {
        h.begin = begin;
        h.end = end;
      }
    }
    ++count;
    if (!emit(h)) break;
  }
  return count;
}

}  // namespace

int64_t enumerate_occurring_mrws(const Index& ix, const EmitFn& emit) {
  return rare_words(ix, false, emit);
}

int64_t enumerate_mus(const Index& ix, const EmitFn& emit) {
  return rare_words(ix, true, emit);
}

std::string materialize(const Index& ix, const WordHandle& h) {
  assert(ix.lpt.is_white(h.u_node));
  std::string w;
  w.reserve(static_cast<size_t>(h.len));
  w.push_back(static_cast<char>(h.a));
  w += decompress_node(ix.grammar, ix.cdawg, h.u_node);
  w.push_back(static_cast<char>(h.b));
  assert(static_cast<int64_t>(w.size()) == h.len);
  if (h.reversed) std::reverse(w.begin(), w.end());
  return w;
}

void precompute_stored_sets(Index& ix) {
  ix.stored_maws = build_stored(ix, true);
  ix.stored_ebfs = build_stored(ix, false);
}

}  // namespace mwi
