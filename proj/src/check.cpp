#include "mwi/check.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "mwi/enumerate.hpp"
#include "mwi/oracle.hpp"

namespace mwi {
namespace {

struct Checker {
  const Index& ix;
  CheckReport rep;

  bool expect(bool cond, const char* fmt, long long a = 0, long long b = 0, long long c = 0) {
    ++rep.checks;
    if (!cond && rep.failures.size() < 64) {
      char buf[256];
      snprintf(buf, sizeof(buf), fmt, a, b, c);
      rep.failures.emplace_back(buf);
    }
    return cond;
  }
  void note(const std::string& msg) {
    ++rep.checks;
    if (rep.failures.size() < 64) rep.failures.push_back(msg);
  }

  void structural() {
    const Cdawg& g = ix.cdawg;
    int64_t n = g.n;
    if (!expect(!g.nodes.empty(), "automaton has no nodes")) return;
    int32_t nn = static_cast<int32_t>(g.nodes.size());
    int32_t sink = g.sink();
    expect(ix.stats.n == n, "stats n %lld != automaton n %lld", ix.stats.n, n);
    expect(ix.stats.node_count == nn, "stats node count %lld != %lld", ix.stats.node_count, nn);
    int64_t e_built = ix.stats.reversed ? ix.stats.e_L : ix.stats.e_R;
    expect(static_cast<int64_t>(g.edges.size()) == e_built,
           "edge count %lld != stats %lld", static_cast<long long>(g.edges.size()), e_built);

    const auto& src = g.nodes[0];
    expect(src.slink == -1 && src.min_len == 0 && src.max_len == 0, "source node malformed");
    expect(src.occ == n + 1, "source occ %lld != n+1 = %lld", src.occ, n + 1);
    expect(src.is_final, "source not final");
    expect(g.nodes[sink].max_len == n, "sink length %lld != n %lld", g.nodes[sink].max_len, n);
    expect(g.nodes[sink].occ == 1, "sink occ %lld != 1", g.nodes[sink].occ);

    for (int32_t v = 1; v < nn; ++v) {
      const auto& nd = g.nodes[v];
      expect(nd.max_len >= g.nodes[v - 1].max_len, "node %lld out of length order", v);
      if (!expect(nd.slink >= 0 && nd.slink < v, "node %lld: bad suffix link", v)) continue;
      expect(nd.min_len == g.nodes[nd.slink].max_len + 1, "node %lld: min_len mismatch", v);
      expect(nd.min_len >= 1 && nd.min_len <= nd.max_len, "node %lld: length range empty", v);
      expect(nd.end_pos >= nd.max_len - 1 && nd.end_pos < n, "node %lld: end_pos out of range", v);
      expect(nd.occ >= 1, "node %lld: nonpositive occurrence count", v);
    }
    // Every node is either branching or on the final chain.
    std::vector<char> on_chain(static_cast<size_t>(nn), 0);
    for (int32_t v = sink; v >= 0; v = g.nodes[v].slink) on_chain[static_cast<size_t>(v)] = 1;
    for (int32_t v = 0; v < nn; ++v) {
      expect(g.nodes[v].is_final == (on_chain[static_cast<size_t>(v)] != 0),
             "node %lld: final flag off the sink chain", v);
      expect(g.out_degree(v) >= 2 || g.nodes[v].is_final, "node %lld: neither branching nor final", v);
      int64_t total = g.nodes[v].is_final ? 1 : 0;
      for (int32_t e = g.nodes[v].edge_begin; e < g.nodes[v].edge_end; ++e)
        total += g.nodes[g.edges[e].dst].occ;
      expect(g.nodes[v].occ == total, "node %lld: occ %lld != children sum %lld", v,
             g.nodes[v].occ, total);
    }

    int32_t at = 0;
    for (int32_t v = 0; v < nn; ++v) {
      const auto& nd = g.nodes[v];
      if (!expect(nd.edge_begin == at && nd.edge_end >= at, "node %lld: edge span broken", v))
        return;
      at = nd.edge_end;
      for (int32_t e = nd.edge_begin; e < nd.edge_end; ++e) {
        const auto& ed = g.edges[e];
        expect(ed.src == v, "edge %lld: src %lld outside its node span", e, ed.src);
        expect(ed.dst > v && ed.dst < nn, "edge %lld: dst out of range", e);
        expect(ed.label_len >= 1, "edge %lld: empty label", e);
        if (e > nd.edge_begin)
          expect(ed.first_char > g.edges[e - 1].first_char, "node %lld: edge chars unsorted", v);
        if (ed.dst < nn) {
          const auto& dn = g.nodes[ed.dst];
          expect(nd.max_len + ed.label_len <= dn.max_len &&
                     nd.min_len + ed.label_len >= dn.min_len,
                 "edge %lld: walk lengths escape target range", e);
          expect(ed.primary == (nd.max_len + ed.label_len == dn.max_len),
                 "edge %lld: primary flag wrong", e);
        }
      }
    }
    expect(at == static_cast<int32_t>(g.edges.size()), "edge spans do not cover the edge list");

    expect(ix.every_visit_emits == (g.nodes[sink].min_len == 1),
           "single-occurrence terminator flag disagrees with sink range");

    if (!ix.text.empty()) {
      expect(static_cast<int64_t>(ix.text.size()) == n, "text length != n");
      expect(sigma(ix.text) == ix.stats.sigma, "stats sigma mismatch");
      expect(unique_last_byte(ix.text) == ix.every_visit_emits,
             "single-occurrence terminator flag disagrees with the text");
      for (int32_t v = 1; v < nn; ++v) {
        const auto& nd = g.nodes[v];
        if (nd.end_pos - nd.min_len + 1 < 0 || nd.end_pos >= n) continue;  // reported above
        expect(static_cast<uint8_t>(ix.text[static_cast<size_t>(nd.end_pos - nd.min_len + 1)]) ==
                   nd.wchar,
               "node %lld: stored first symbol disagrees with the text", v);
      }
      for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        bool in_range = ed.label_end >= ed.label_len - 1 && ed.label_end < n;
        expect(in_range, "edge %lld: label outside the text", static_cast<long long>(e));
        if (in_range)
          expect(static_cast<uint8_t>(
                     ix.text[static_cast<size_t>(ed.label_end - ed.label_len + 1)]) ==
                     ed.first_char,
                 "edge %lld: first symbol disagrees with the text", static_cast<long long>(e));
      }
    }
  }

  void rebuild_compare() {
    Cdawg r;
    try {
      r = build_cdawg(ix.text);
    } catch (const std::exception& ex) {
      note(std::string("rebuild from text failed: ") + ex.what());
      return;
    }
    if (!expect(r.nodes.size() == ix.cdawg.nodes.size(), "rebuild: node count %lld != %lld",
                static_cast<long long>(r.nodes.size()),
                static_cast<long long>(ix.cdawg.nodes.size())) ||
        !expect(r.edges.size() == ix.cdawg.edges.size(), "rebuild: edge count %lld != %lld",
                static_cast<long long>(r.edges.size()),
                static_cast<long long>(ix.cdawg.edges.size())))
      return;
    for (size_t v = 0; v < r.nodes.size(); ++v) {
      const auto &a = ix.cdawg.nodes[v], &b = r.nodes[v];
      if (!expect(a.max_len == b.max_len && a.min_len == b.min_len && a.slink == b.slink &&
                      a.end_pos == b.end_pos && a.wchar == b.wchar && a.is_final == b.is_final &&
                      a.occ == b.occ && a.left_cnt == b.left_cnt && a.edge_begin == b.edge_begin &&
                      a.edge_end == b.edge_end,
                  "rebuild: node %lld differs", static_cast<long long>(v)))
        return;
    }
    for (size_t e = 0; e < r.edges.size(); ++e) {
      const auto &a = ix.cdawg.edges[e], &b = r.edges[e];
      if (!expect(a.src == b.src && a.dst == b.dst && a.first_char == b.first_char &&
                      a.label_len == b.label_len && a.label_end == b.label_end &&
                      a.primary == b.primary,
                  "rebuild: edge %lld differs", static_cast<long long>(e)))
        return;
    }
  }

  void derived_layers() {
    const std::string* text = ix.text.empty() ? nullptr : &ix.text;
    try {
      Grammar g2 = build_grammar(ix.cdawg, text);
      bool same = g2.begin == ix.grammar.begin && g2.p_len == ix.grammar.p_len &&
                  g2.shortcut == ix.grammar.shortcut && g2.effective == ix.grammar.effective &&
                  g2.root == ix.grammar.root && g2.slots.size() == ix.grammar.slots.size();
      for (size_t i = 0; same && i < g2.slots.size(); ++i)
        same = g2.slots[i].terminal == ix.grammar.slots[i].terminal &&
               g2.slots[i].ch == ix.grammar.slots[i].ch && g2.slots[i].node == ix.grammar.slots[i].node;
      expect(same, "grammar differs from one rebuilt off the automaton");
    } catch (const std::exception& ex) {
      note(std::string("grammar rebuild failed: ") + ex.what());
    }
    try {
      LptPlus t2 = build_lpt_plus(ix.cdawg);
      compute_fast_links(t2, ix.cdawg, text, text && ix.cdawg.n <= 2048);
      bool same = t2.white_count == ix.lpt.white_count && t2.nodes.size() == ix.lpt.nodes.size();
      for (size_t i = 0; same && i < t2.nodes.size(); ++i) {
        const auto &a = ix.lpt.nodes[i], &b = t2.nodes[i];
        same = a.parent == b.parent && a.pedge_first == b.pedge_first &&
               a.pedge_len == b.pedge_len && a.str_len == b.str_len && a.slink == b.slink &&
               a.cdawg_node == b.cdawg_node && a.gray == b.gray && a.cedge == b.cedge &&
               a.top == b.top && a.bottom == b.bottom && a.a_char == b.a_char;
      }
      expect(same, "tree differs from one rebuilt off the automaton");
    } catch (const std::exception& ex) {
      note(std::string("tree rebuild failed: ") + ex.what());
    }
    if (text) {
      try {
        int64_t work = 0;
        std::string whole = decompress_node(ix.grammar, ix.cdawg, ix.cdawg.sink(), &work);
        expect(whole == ix.text, "grammar does not expand back to the text");
        expect(work <= 3 * static_cast<int64_t>(whole.size()) + 1,
               "decompression work %lld exceeds 3*len+1 = %lld", work,
               3 * static_cast<int64_t>(whole.size()) + 1);
      } catch (const std::exception& ex) {
        note(std::string("decompression failed: ") + ex.what());
      }
    }
  }

  void stored_sets() {
    for (const StoredPrefixSet* sp : {&ix.stored_maws, &ix.stored_ebfs}) {
      expect(sp->m_star >= 1 && sp->m_star <= ix.stats.n + 2, "stored set: m* out of range");
      expect(static_cast<int64_t>(sp->items.size()) <= ix.stats.e_min,
             "stored set larger than the edge budget");
      for (size_t i = 0; i < sp->items.size(); ++i) {
        const auto& h = sp->items[i];
        expect(h.len <= sp->m_star, "stored set: item longer than m*");
        if (i) expect(sp->items[i - 1].len <= h.len, "stored set: items out of length order");
      }
    }
  }

  void behavioral(int64_t oracle_limit) {
    const int64_t n = ix.cdawg.n;
    const int64_t e_built = static_cast<int64_t>(ix.cdawg.edges.size());
    const int64_t sig = ix.stats.sigma;
    bool small = !ix.text.empty() && n <= oracle_limit;
    std::string orig = ix.text;
    if (ix.reversed()) std::reverse(orig.begin(), orig.end());

    expect(ix.stats.e_min < 2 * n, "edge bound: e_min %lld !< 2n %lld", ix.stats.e_min, 2 * n);

    auto handle_ok = [&](const WordHandle& h, WordKind kind) {
      bool ok = h.kind == kind && h.u_node >= 0 && ix.lpt.is_white(h.u_node) &&
                h.len == ix.lpt.nodes[h.u_node].str_len + 2 && h.reversed == ix.reversed();
      if (kind == WordKind::kMaw) ok = ok && h.k == 0;
      if (kind == WordKind::kEbf || kind == WordKind::kMrw) ok = ok && h.k >= 1;
      if (kind == WordKind::kMus) ok = ok && h.k == 1;
      return ok;
    };

    Counters mc;
    std::set<std::string> maws;
    int64_t bad = 0, mcount;
    mcount = enumerate_maws(ix, [&](const WordHandle& h) {
      if (!handle_ok(h, WordKind::kMaw)) ++bad;
      if (small) maws.insert(materialize(ix, h));
      return true;
    }, &mc);
    expect(bad == 0, "%lld malformed absent-word handles", bad);
    expect(mcount <= sig * ix.stats.e_L && mcount <= sig * ix.stats.e_R,
           "absent-word count %lld above the sigma*e bound", mcount);
    expect(mc.visits + mc.comparisons <= 4 * (e_built + mcount + 1),
           "absent-word traversal cost %lld above budget %lld", mc.visits + mc.comparisons,
           4 * (e_built + mcount + 1));
    if (ix.every_visit_emits) expect(mc.barren == 0, "%lld barren visits", mc.barren);

    Counters ec;
    std::set<std::string> ebfs;
    bad = 0;
    int64_t ecount = enumerate_ebfs(ix, [&](const WordHandle& h) {
      if (!handle_ok(h, WordKind::kEbf)) ++bad;
      if (small) ebfs.insert(materialize(ix, h));
      return true;
    }, &ec);
    expect(bad == 0, "%lld malformed bispecial handles", bad);
    expect(ecount <= ix.stats.e_R + ix.stats.e_L - ix.stats.node_count + 1,
           "bispecial count %lld above the edge bound", ecount);
    expect(ec.visits + ec.comparisons <= 4 * (e_built + ecount + 1),
           "bispecial traversal cost %lld above budget %lld", ec.visits + ec.comparisons,
           4 * (e_built + ecount + 1));

    std::map<std::string, int64_t> mrws;
    bad = 0;
    int64_t rcount = enumerate_occurring_mrws(ix, [&](const WordHandle& h) {
      if (!handle_ok(h, WordKind::kMrw)) ++bad;
      if (small) mrws[materialize(ix, h)] = h.k;
      return true;
    });
    expect(bad == 0, "%lld malformed rare-word handles", bad);
    expect(rcount <= ix.stats.e_min, "occurring rare words %lld above e_min %lld", rcount,
           ix.stats.e_min);

    std::set<std::string> mus;
    bad = 0;
    int64_t ucount = enumerate_mus(ix, [&](const WordHandle& h) {
      bool ok = handle_ok(h, WordKind::kMus);
      if (ok && !ix.text.empty()) {
        std::string w = materialize(ix, h);
        ok = h.begin >= 0 && h.end == h.begin + h.len - 1 &&
             h.end < static_cast<int64_t>(orig.size()) &&
             orig.compare(static_cast<size_t>(h.begin), static_cast<size_t>(h.len), w) == 0;
        if (small) mus.insert(w);
      }
      if (!ok) ++bad;
      return true;
    });
    expect(bad == 0, "%lld malformed unique-substring handles", bad);
    expect(ucount <= rcount, "more unique substrings than occurring rare words");

    if (!small) return;
    OracleSets os = oracle_sets(orig);
    expect(static_cast<int64_t>(maws.size()) == mcount, "duplicate absent words emitted");
    expect(maws == os.maws, "absent words: got %lld, oracle %lld",
           static_cast<long long>(maws.size()), static_cast<long long>(os.maws.size()));
    expect(static_cast<int64_t>(ebfs.size()) == ecount, "duplicate bispecial words emitted");
    expect(ebfs == os.ebfs, "bispecial words: got %lld, oracle %lld",
           static_cast<long long>(ebfs.size()), static_cast<long long>(os.ebfs.size()));
    expect(static_cast<int64_t>(mrws.size()) == rcount, "duplicate rare words emitted");
    expect(mrws == os.occurring_mrws, "rare words: got %lld, oracle %lld",
           static_cast<long long>(mrws.size()), static_cast<long long>(os.occurring_mrws.size()));
    expect(static_cast<int64_t>(mus.size()) == ucount, "duplicate unique substrings emitted");
    expect(mus == os.mus, "unique substrings: got %lld, oracle %lld",
           static_cast<long long>(mus.size()), static_cast<long long>(os.mus.size()));

    std::set<std::string> reps;
    for (int32_t v = 0; v < ix.cdawg.sink(); ++v) {
      std::string s = decompress_node(ix.grammar, ix.cdawg, v);
      if (ix.reversed()) std::reverse(s.begin(), s.end());
      reps.insert(s);
    }
    expect(static_cast<int64_t>(reps.size()) == ix.cdawg.sink(), "repeat strings collide");
    expect(reps == os.maximal_repeats, "maximal repeats: got %lld, oracle %lld",
           static_cast<long long>(reps.size()), static_cast<long long>(os.maximal_repeats.size()));
  }
};

}  // namespace

CheckReport check_index(const Index& ix, int64_t oracle_limit) {
  if (oracle_limit <= 0) oracle_limit = oracle_cap();
  Checker ck{ix, {}};
  ck.structural();
  if (!ck.rep.ok()) return std::move(ck.rep);
  if (!ix.text.empty()) ck.rebuild_compare();
  ck.derived_layers();
  ck.stored_sets();
  if (ck.rep.ok()) ck.behavioral(oracle_limit);
  return std::move(ck.rep);
}

}  // namespace mwi
