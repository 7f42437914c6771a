#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "mwi/oracle.hpp"

using namespace mwi;

namespace {

// All strings over the first `sigma` letters with length in [1, max_len].
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

bool same_sets(const OracleSets& x, const OracleSets& y) {
  return x.maws == y.maws && x.ebfs == y.ebfs && x.mus == y.mus &&
         x.occurring_mrws == y.occurring_mrws && x.maximal_repeats == y.maximal_repeats;
}

}  // namespace

TEST_CASE("occurrence table") {
  auto occ = occurrence_table("abab");
  CHECK(occ.at("") == 5);
  CHECK(occ.at("a") == 2);
  CHECK(occ.at("ab") == 2);
  CHECK(occ.at("ba") == 1);
  CHECK(occ.at("abab") == 1);
  CHECK(occ.count("bb") == 0);
  CHECK(occurrence_table("").at("") == 1);
}

TEST_CASE("absent-word examples") {
  CHECK(oracle_maws("aaa") == std::set<std::string>{"aaaa"});
  CHECK(oracle_maws("abc") ==
        std::set<std::string>{"aa", "ac", "ba", "bb", "ca", "cb", "cc"});
  CHECK(oracle_maws("ababcbababcbc$").count("cbcb") == 1);
}

TEST_CASE("bispecial examples") {
  std::string wrapped("\x01"
                      "ab\x00",
                      4);
  std::set<std::string> want = {std::string("\x01"
                                            "a",
                                            2),
                                "ab", std::string("b\x00", 2)};
  CHECK(oracle_ebfs(wrapped) == want);
  CHECK(oracle_ebfs("aaaaaa").empty());
}

TEST_CASE("rare-word examples") {
  CHECK(oracle_mus("abab") == std::set<std::string>{"ba"});
  CHECK(oracle_mrws("abab", -1) == std::set<std::string>{"ba"});
  CHECK(oracle_mrws("abab", 1) == oracle_mus("abab"));
  CHECK(oracle_mrws("abab", 0) == oracle_maws("abab"));
  CHECK(oracle_mrws("abab", 2).empty());
  auto sets = oracle_sets("mississippi");
  for (const auto& [w, k] : sets.occurring_mrws) {
    CHECK(k >= 1);
    CHECK(occurrence_table("mississippi").at(w) == k);
  }
}

TEST_CASE("maximal-repeat examples") {
  CHECK(oracle_maximal_repeats("abc") == std::set<std::string>{""});
  CHECK(oracle_maximal_repeats("aaaa") == std::set<std::string>{"", "a", "aa", "aaa"});
  auto mr = oracle_maximal_repeats("ababcbababcbc$");
  CHECK(mr.count("ababcb") == 1);
  CHECK(mr.count("bc") == 1);
}

TEST_CASE("inner parts of rare words are maximal repeats") {
  for_each_string(2, 10, [](const std::string& s) {
    auto sets = oracle_definitional(s);
    for (const auto& w : sets.maws)
      CHECK(sets.maximal_repeats.count(w.substr(1, w.size() - 2)) == 1);
    for (const auto& [w, k] : sets.occurring_mrws) {
      (void)k;
      CHECK(sets.maximal_repeats.count(w.substr(1, w.size() - 2)) == 1);
    }
  });
}

TEST_CASE("tiers agree on every binary string up to length 12") {
  for_each_string(2, 12, [](const std::string& s) {
    if (!same_sets(oracle_definitional(s), oracle_automaton(s))) {
      CAPTURE(s);
      CHECK(false);
    }
  });
}

TEST_CASE("tiers agree on random wider-alphabet strings") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    int sig = 2 + static_cast<int>(rng() % 7);
    int len = 1 + static_cast<int>(rng() % 64);
    std::string s(static_cast<size_t>(len), 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % static_cast<uint64_t>(sig));
    if (!same_sets(oracle_definitional(s), oracle_automaton(s))) {
      CAPTURE(s);
      CHECK(false);
    }
  }
}

TEST_CASE("size caps") {
  std::string big(static_cast<size_t>(oracle_cap()) + 1, 'a');
  CHECK_THROWS_AS(oracle_automaton(big), std::invalid_argument);
  CHECK_THROWS_AS(oracle_sets(big), std::invalid_argument);
  CHECK_THROWS_AS(oracle_definitional(std::string(65, 'a')), std::invalid_argument);
  setenv("CDWG_ORACLE_CAP", "5000", 1);
  CHECK(oracle_cap() == 5000);
  CHECK_NOTHROW(oracle_automaton(big));
  unsetenv("CDWG_ORACLE_CAP");
  CHECK(oracle_cap() == 2000);
}

TEST_CASE("de Bruijn sequences") {
  CHECK(de_bruijn(2, 2) == "aabba");
  CHECK(de_bruijn(2, 3).size() == 10);
  CHECK(de_bruijn(3, 2).size() == 10);
  auto s = de_bruijn(2, 3);
  std::set<std::string> grams;
  for (size_t i = 0; i + 3 <= s.size(); ++i) grams.insert(s.substr(i, 3));
  CHECK(grams.size() == 8);  // census: every trigram once
  CHECK_THROWS_AS(de_bruijn(26, 10), std::invalid_argument);
}

TEST_CASE("Fibonacci words") {
  CHECK(fibonacci_word(2) == "a");
  CHECK(fibonacci_word(3) == "ab");
  CHECK(fibonacci_word(4) == "aba");
  CHECK(fibonacci_word(5) == "abaab");
  CHECK(fibonacci_word(6) == "abaababa");
  CHECK(fibonacci_word(10).size() == 55);
  CHECK(fibonacci_word(20).size() == 6765);
}
