#include "mwi/oracle.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mwi/suffix_automaton.hpp"

namespace mwi {
namespace {

std::vector<uint8_t> occurring_bytes(const std::string& text) {
  bool seen[256] = {};
  for (unsigned char c : text) seen[c] = true;
  std::vector<uint8_t> out;
  for (int c = 0; c < 256; ++c)
    if (seen[c]) out.push_back(static_cast<uint8_t>(c));
  return out;
}

}  // namespace

int64_t oracle_cap() {
  if (const char* s = std::getenv("CDWG_ORACLE_CAP")) {
    long v = std::atol(s);
    if (v > 0) return v;
  }
  return 2000;
}

std::map<std::string, int64_t> occurrence_table(const std::string& text) {
  int64_t n = static_cast<int64_t>(text.size());
  std::map<std::string, int64_t> occ;
  occ[""] = n + 1;
  for (int64_t i = 0; i < n; ++i)
    for (int64_t len = 1; i + len <= n; ++len) ++occ[text.substr(i, len)];
  return occ;
}

OracleSets oracle_definitional(const std::string& text) {
  int64_t n = static_cast<int64_t>(text.size());
  if (n > 64) throw std::invalid_argument("definitional oracle: text too long");
  auto occ = occurrence_table(text);
  auto count = [&occ](const std::string& w) -> int64_t {
    auto it = occ.find(w);
    return it == occ.end() ? 0 : it->second;
  };
  auto bytes = occurring_bytes(text);
  OracleSets r;

  // Rare words: every occurring au b with occ(aub) < occ(au) and
  // occ(aub) < occ(ub); absent ones with both factors present are the MAWs.
  for (const auto& [u, cu] : occ) {
    (void)cu;
    for (uint8_t a : bytes) {
      std::string au;
      au.push_back(static_cast<char>(a));
      au += u;
      int64_t c_au = count(au);
      if (c_au == 0) continue;
      for (uint8_t b : bytes) {
        std::string ub = u;
        ub.push_back(static_cast<char>(b));
        int64_t c_ub = count(ub);
        if (c_ub == 0) continue;
        std::string aub = au;
        aub.push_back(static_cast<char>(b));
        int64_t c = count(aub);
        if (c == 0) {
          r.maws.insert(aub);
        } else if (c < c_au && c < c_ub) {
          r.occurring_mrws[aub] = c;
          if (c == 1) r.mus.insert(aub);
        }
      }
    }
  }

  // Bispecial factors: u extends left and right in at least two ways each;
  // record each occurring aub once per (a, b) pair.
  for (const auto& [u, cu] : occ) {
    (void)cu;
    int left = 0, right = 0;
    for (uint8_t c : bytes) {
      std::string cu2;
      cu2.push_back(static_cast<char>(c));
      cu2 += u;
      if (count(cu2)) ++left;
      std::string uc = u;
      uc.push_back(static_cast<char>(c));
      if (count(uc)) ++right;
    }
    if (left < 2 || right < 2) continue;
    for (uint8_t a : bytes) {
      std::string au;
      au.push_back(static_cast<char>(a));
      au += u;
      if (!count(au)) continue;
      for (uint8_t b : bytes) {
        std::string aub = au;
        aub.push_back(static_cast<char>(b));
        if (count(aub)) r.ebfs.insert(aub);
      }
    }
  }

  // Maximal repeats: occ >= 2 and not always preceded (resp. followed) by
  // one fixed byte. A prefix occurrence has no left neighbor, a suffix
  // occurrence no right neighbor; both count as an extra extension.
  for (const auto& [w, c] : occ) {
    if (c < 2) continue;
    int left = 0, right = 0;
    int64_t wn = static_cast<int64_t>(w.size());
    if (wn <= n && text.compare(0, wn, w) == 0) ++left;
    if (wn <= n && text.compare(n - wn, wn, w) == 0) ++right;
    for (uint8_t cch : bytes) {
      std::string cw;
      cw.push_back(static_cast<char>(cch));
      cw += w;
      if (count(cw)) ++left;
      std::string wc = w;
      wc.push_back(static_cast<char>(cch));
      if (count(wc)) ++right;
    }
    if (left >= 2 && right >= 2) r.maximal_repeats.insert(w);
  }
  return r;
}

OracleSets oracle_automaton(const std::string& text) {
  int64_t n = static_cast<int64_t>(text.size());
  if (n > oracle_cap()) throw std::invalid_argument("oracle: text exceeds CDWG_ORACLE_CAP");
  SuffixAutomaton sa(text);
  auto cnt = sa.occurrence_counts();
  auto left = sa.left_extension_counts();

  // States whose class contains a prefix of the text (root holds "").
  std::vector<char> prefix_state(sa.states.size(), 0);
  prefix_state[0] = 1;
  {
    int cur = 0;
    for (char ch : text) {
      cur = sa.states[cur].get(ch);
      assert(cur >= 0);
      prefix_state[cur] = 1;
    }
  }

  auto longest_of = [&](int v) {
    const auto& st = sa.states[v];
    return v == 0 ? std::string()
                  : text.substr(static_cast<size_t>(st.end_pos - st.len + 1),
                                static_cast<size_t>(st.len));
  };

  OracleSets r;
  for (size_t y = 1; y < sa.states.size(); ++y) {
    const auto& sy = sa.states[y];
    int x = sy.link;
    const auto& sx = sa.states[x];
    // a·u = shortest string of class y: u = longest of the link class.
    char a = text[static_cast<size_t>(sy.end_pos - sx.len)];
    std::string au;
    au.push_back(a);
    au += longest_of(x);

    for (const auto& [b, t] : sx.next) {
      (void)t;
      if (sy.get(b) < 0) r.maws.insert(au + static_cast<char>(b));
    }
    if (left[x] >= 2 && static_cast<int>(sx.next.size()) >= 2) {
      for (const auto& [b, t] : sy.next) {
        (void)t;
        r.ebfs.insert(au + static_cast<char>(b));
      }
    }
    for (const auto& [b, t] : sy.next) {
      int64_t k = cnt[t];
      int xb = sx.get(b);
      assert(xb >= 0);
      if (cnt[y] > k && cnt[xb] > k) {
        r.occurring_mrws[au + static_cast<char>(b)] = k;
        if (k == 1) r.mus.insert(au + static_cast<char>(b));
      }
    }
  }
  for (size_t v = 0; v < sa.states.size(); ++v) {
    const auto& sv = sa.states[v];
    bool right_max = static_cast<int>(sv.next.size()) >= 2 || sv.is_final;
    bool left_max = left[v] >= 2 || prefix_state[v];
    if (cnt[v] >= 2 && left_max && right_max) r.maximal_repeats.insert(longest_of(static_cast<int>(v)));
  }
  return r;
}

OracleSets oracle_sets(const std::string& text) {
  if (static_cast<int64_t>(text.size()) <= 64) return oracle_definitional(text);
  return oracle_automaton(text);
}

std::set<std::string> oracle_maws(const std::string& text) { return oracle_sets(text).maws; }
std::set<std::string> oracle_ebfs(const std::string& text) { return oracle_sets(text).ebfs; }

std::set<std::string> oracle_mrws(const std::string& text, int64_t k) {
  OracleSets s = oracle_sets(text);
  if (k == 0) return s.maws;
  std::set<std::string> out;
  for (const auto& [w, c] : s.occurring_mrws)
    if (k < 0 || c == k) out.insert(w);
  return out;
}

std::set<std::string> oracle_mus(const std::string& text) { return oracle_sets(text).mus; }

std::set<std::string> oracle_maximal_repeats(const std::string& text) {
  return oracle_sets(text).maximal_repeats;
}

std::string de_bruijn(int sigma, int k) {
  assert(sigma >= 1 && sigma <= 26 && k >= 1);
  double size = std::pow(sigma, k);
  if (size > double(1 << 26)) throw std::invalid_argument("de_bruijn: sigma^k too large");
  std::vector<int> a(static_cast<size_t>(k) + 1, 0);
  std::string seq;
  std::function<void(int, int)> gen = [&](int t, int p) {
    if (t > k) {
      if (k % p == 0)
        for (int i = 1; i <= p; ++i) seq.push_back(static_cast<char>('a' + a[static_cast<size_t>(i)]));
      return;
    }
    a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - p)];
    gen(t + 1, p);
    for (int j = a[static_cast<size_t>(t - p)] + 1; j < sigma; ++j) {
      a[static_cast<size_t>(t)] = j;
      gen(t + 1, t);
    }
  };
  gen(1, 1);
  int64_t period = 1;
  for (int i = 0; i < k; ++i) period *= sigma;
  assert(static_cast<int64_t>(seq.size()) == period);
  seq += seq.substr(0, static_cast<size_t>(k - 1));

  // Census: every k-gram exactly once.
  std::set<std::string> grams;
  for (size_t i = 0; i + static_cast<size_t>(k) <= seq.size(); ++i)
    grams.insert(seq.substr(i, static_cast<size_t>(k)));
  assert(static_cast<int64_t>(grams.size()) == period);
  assert(static_cast<int64_t>(seq.size()) - k + 1 == period);
  return seq;
}

std::string fibonacci_word(int k) {
  assert(k >= 2);
  std::string prev = "a";  // F_2
  if (k == 2) return prev;
  std::string cur = "ab";  // F_3
  for (int i = 4; i <= k; ++i) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace mwi
