#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mwi/enumerate.hpp"
#include "mwi/oracle.hpp"

using namespace mwi;

namespace {

Index build(const std::string& raw, SentinelMode mode = SentinelMode::kNone,
            Orientation ori = Orientation::kAuto) {
  BuildOptions o;
  o.mode = mode;
  o.orientation = ori;
  return build_index(raw, o);
}

struct Stream {
  std::vector<std::string> words;
  std::vector<WordHandle> handles;
};

bool same_stream(const Index& ix, const Stream& x, const Stream& y) {
  (void)ix;
  if (x.words != y.words || x.handles.size() != y.handles.size()) return false;
  for (size_t i = 0; i < x.handles.size(); ++i) {
    const auto &a = x.handles[i], &b = y.handles[i];
    if (a.a != b.a || a.b != b.b || a.u_node != b.u_node || a.k != b.k || a.len != b.len ||
        a.kind != b.kind)
      return false;
  }
  return true;
}

template <typename Fn>
Stream collect(const Index& ix, Fn&& run) {
  Stream s;
  run([&](const WordHandle& h) {
    s.handles.push_back(h);
    s.words.push_back(materialize(ix, h));
    return true;
  });
  return s;
}

std::string random_string(std::mt19937_64& rng, int len, int sigma) {
  std::string s(static_cast<size_t>(len), 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % static_cast<uint64_t>(sigma));
  return s;
}

template <typename F>
void for_each_string(int sigma, int max_len, F&& fn) {
  for (int len = 1; len <= max_len; ++len) {
    std::string s(static_cast<size_t>(len), 'a');
    for (;;) {
      fn(s);
      int i = len - 1;
      while (i >= 0 && s[static_cast<size_t>(i)] == 'a' + sigma - 1) s[static_cast<size_t>(i--)] = 'a';
      if (i < 0) break;
      ++s[static_cast<size_t>(i)];
    }
  }
}

void against_oracle(const std::string& raw, SentinelMode mode,
                    Orientation ori = Orientation::kAuto) {
  Index ix = build(raw, mode, ori);
  std::string wrapped = wrap_text(raw, mode);
  OracleSets os = oracle_sets(wrapped);
  int64_t e_built = static_cast<int64_t>(ix.cdawg.edges.size());

  Counters mc;
  std::set<std::string> maws;
  int64_t n_m = enumerate_maws(ix, [&](const WordHandle& h) {
    CHECK(h.kind == WordKind::kMaw);
    CHECK(h.k == 0);
    maws.insert(materialize(ix, h));
    return true;
  }, &mc);
  CHECK(static_cast<int64_t>(maws.size()) == n_m);  // no duplicates
  CHECK(maws == os.maws);
  CHECK(mc.visits + mc.comparisons <= 4 * (e_built + n_m + 1));
  if (ix.every_visit_emits) CHECK(mc.barren == 0);

  Counters ec;
  std::set<std::string> ebfs;
  int64_t n_e = enumerate_ebfs(ix, [&](const WordHandle& h) {
    CHECK(h.kind == WordKind::kEbf);
    CHECK(h.k >= 1);
    ebfs.insert(materialize(ix, h));
    return true;
  }, &ec);
  CHECK(static_cast<int64_t>(ebfs.size()) == n_e);
  CHECK(ebfs == os.ebfs);
  CHECK(ec.visits + ec.comparisons <= 4 * (e_built + n_e + 1));

  std::map<std::string, int64_t> mrws;
  int64_t n_r = enumerate_occurring_mrws(ix, [&](const WordHandle& h) {
    CHECK(h.kind == WordKind::kMrw);
    mrws[materialize(ix, h)] = h.k;
    return true;
  });
  CHECK(static_cast<int64_t>(mrws.size()) == n_r);
  CHECK(mrws == os.occurring_mrws);
  CHECK(n_r <= ix.stats.e_min);

  std::set<std::string> mus;
  enumerate_mus(ix, [&](const WordHandle& h) {
    CHECK(h.k == 1);
    std::string w = materialize(ix, h);
    mus.insert(w);
    REQUIRE(h.begin >= 0);
    CHECK(h.end == h.begin + h.len - 1);
    CHECK(wrapped.find(w) == static_cast<size_t>(h.begin));
    CHECK(wrapped.find(w, static_cast<size_t>(h.begin) + 1) == std::string::npos);
    return true;
  });
  CHECK(mus == os.mus);

  // Inner part of every reported word is a maximal repeat.
  for (const auto& w : maws) CHECK(os.maximal_repeats.count(w.substr(1, w.size() - 2)) == 1);
  for (const auto& [w, k] : mrws) {
    (void)k;
    CHECK(os.maximal_repeats.count(w.substr(1, w.size() - 2)) == 1);
  }
}

void bounded_sweep(const std::string& raw, SentinelMode mode) {
  Index ix = build(raw, mode);
  int64_t n = ix.stats.n;
  for (bool maw : {true, false}) {
    auto full = collect(ix, [&](const EmitFn& emit) {
      return maw ? enumerate_maws(ix, emit) : enumerate_ebfs(ix, emit);
    });
    auto bounded = [&](int64_t ell, Bound dir, bool force) {
      return collect(ix, [&](const EmitFn& emit) {
        return maw ? maws_length_bounded(ix, ell, dir, emit, nullptr, force)
                   : ebfs_length_bounded(ix, ell, dir, emit, nullptr, force);
      });
    };
    for (int64_t ell = 2; ell <= n + 2; ++ell) {
      Stream ge, le;
      for (size_t i = 0; i < full.handles.size(); ++i) {
        if (full.handles[i].len >= ell) {
          ge.words.push_back(full.words[i]);
          ge.handles.push_back(full.handles[i]);
        }
        if (full.handles[i].len <= ell) {
          le.words.push_back(full.words[i]);
          le.handles.push_back(full.handles[i]);
        }
      }
      // kAtMost streams shortest-first, traversal order within a length.
      std::vector<size_t> order(le.handles.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](size_t a, size_t b) { return le.handles[a].len < le.handles[b].len; });
      Stream le_sorted;
      for (size_t i : order) {
        le_sorted.words.push_back(le.words[i]);
        le_sorted.handles.push_back(le.handles[i]);
      }

      CHECK(same_stream(ix, bounded(ell, Bound::kAtLeast, false), ge));
      Stream via_replay = bounded(ell, Bound::kAtMost, false);
      Stream via_walk = bounded(ell, Bound::kAtMost, true);
      CHECK(same_stream(ix, via_replay, le_sorted));
      CHECK(same_stream(ix, via_walk, le_sorted));
    }
  }
}

}  // namespace

TEST_CASE("exhaustive binary corpus vs oracle") {
  for_each_string(2, 12, [](const std::string& s) {
    against_oracle(s, SentinelMode::kNone);
    against_oracle(s, SentinelMode::kBoth);
  });
}

TEST_CASE("exhaustive ternary corpus vs oracle") {
  for_each_string(3, 7, [](const std::string& s) {
    against_oracle(s, SentinelMode::kNone);
    against_oracle(s, SentinelMode::kBoth);
  });
}

TEST_CASE("random corpus vs oracle, all orientations") {
  std::mt19937_64 rng(41);
  const int sigmas[] = {2, 4, 8, 26};
  for (int it = 0; it < 60; ++it) {
    std::string s = random_string(rng, 1 + static_cast<int>(rng() % 300), sigmas[it % 4]);
    against_oracle(s, SentinelMode::kNone);
    against_oracle(s, SentinelMode::kNone, Orientation::kForward);
    against_oracle(s, SentinelMode::kNone, Orientation::kReversed);
    against_oracle(s, SentinelMode::kEndOnly);
  }
}

TEST_CASE("running example") {
  Index ix = build("ababcbababcbc$", SentinelMode::kNone, Orientation::kForward);
  std::set<std::string> maws;
  enumerate_maws(ix, [&](const WordHandle& h) {
    maws.insert(materialize(ix, h));
    return true;
  });
  CHECK(maws.count("cbcb") == 1);
}

TEST_CASE("length-bounded queries equal filtered full enumerations") {
  for_each_string(2, 9, [](const std::string& s) {
    bounded_sweep(s, SentinelMode::kNone);
    bounded_sweep(s, SentinelMode::kBoth);
  });
  for_each_string(3, 5, [](const std::string& s) { bounded_sweep(s, SentinelMode::kNone); });
  bounded_sweep("ababcbababcbc$", SentinelMode::kNone);
  std::mt19937_64 rng(42);
  for (int it = 0; it < 25; ++it)
    bounded_sweep(random_string(rng, 1 + static_cast<int>(rng() % 80), 2 + static_cast<int>(rng() % 7)),
                  SentinelMode::kNone);
}

TEST_CASE("length bound below 2 is rejected") {
  Index ix = build("abcabc");
  auto nop = [](const WordHandle&) { return true; };
  CHECK_THROWS_AS(maws_length_bounded(ix, 1, Bound::kAtMost, nop), std::invalid_argument);
  CHECK_THROWS_AS(ebfs_length_bounded(ix, 0, Bound::kAtLeast, nop), std::invalid_argument);
}

TEST_CASE("stored prefix sets obey the budget rule") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 40; ++it) {
    std::string s = random_string(rng, 1 + static_cast<int>(rng() % 120), 2 + static_cast<int>(rng() % 4));
    Index ix = build(s, it % 2 ? SentinelMode::kEndOnly : SentinelMode::kNone);
    for (bool maw : {true, false}) {
      auto full = collect(ix, [&](const EmitFn& emit) {
        return maw ? enumerate_maws(ix, emit) : enumerate_ebfs(ix, emit);
      });
      std::stable_sort(full.handles.begin(), full.handles.end(),
                       [](const WordHandle& a, const WordHandle& b) { return a.len < b.len; });
      const StoredPrefixSet& sp = maw ? ix.stored_maws : ix.stored_ebfs;
      // Longest complete length-group prefix within the e_min budget.
      size_t keep = 0;
      while (keep < full.handles.size()) {
        size_t next = keep;
        while (next < full.handles.size() && full.handles[next].len == full.handles[keep].len)
          ++next;
        if (static_cast<int64_t>(next) > ix.stats.e_min) break;
        keep = next;
      }
      REQUIRE(sp.items.size() == keep);
      for (size_t i = 0; i < keep; ++i) {
        CHECK(sp.items[i].a == full.handles[i].a);
        CHECK(sp.items[i].b == full.handles[i].b);
        CHECK(sp.items[i].u_node == full.handles[i].u_node);
        CHECK(sp.items[i].len == full.handles[i].len);
      }
      int64_t expect_star =
          keep == full.handles.size() ? ix.stats.n + 2 : full.handles[keep].len - 1;
      CHECK(sp.m_star == expect_star);
    }
  }
}

TEST_CASE("emit can stop the stream") {
  Index ix = build("abracadabra");
  int64_t seen = 0;
  int64_t ret = enumerate_maws(ix, [&](const WordHandle&) { return ++seen < 3; });
  CHECK(seen == 3);
  CHECK(ret == 3);
}
