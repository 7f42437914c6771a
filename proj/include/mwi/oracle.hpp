#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace mwi {

// Brute-force ground truth for one text. occurring_mrws maps each word to
// its occurrence count k >= 1; absent rare words are exactly the MAWs.
struct OracleSets {
  std::set<std::string> maws;
  std::set<std::string> ebfs;
  std::set<std::string> mus;
  std::map<std::string, int64_t> occurring_mrws;
  std::set<std::string> maximal_repeats;
};

// Largest text the oracle accepts (env CDWG_ORACLE_CAP, default 2000).
int64_t oracle_cap();

// Occurrence count of every substring, plus occ("") = n + 1.
std::map<std::string, int64_t> occurrence_table(const std::string& text);

// Straight from the definitions via the occurrence table; O(n^2 * sigma^2).
OracleSets oracle_definitional(const std::string& text);

// Per-state walk over the (uncompacted) suffix automaton; handles texts up
// to the cap.
OracleSets oracle_automaton(const std::string& text);

// definitional for n <= 64, automaton up to the cap, error beyond.
OracleSets oracle_sets(const std::string& text);

// Per-set conveniences over oracle_sets.
std::set<std::string> oracle_maws(const std::string& text);
std::set<std::string> oracle_ebfs(const std::string& text);
// k = 0 gives the absent words, k >= 1 the words occurring exactly k times,
// k = -1 the union over all k >= 1.
std::set<std::string> oracle_mrws(const std::string& text, int64_t k);
std::set<std::string> oracle_mus(const std::string& text);
std::set<std::string> oracle_maximal_repeats(const std::string& text);

// Lexicographically least de Bruijn sequence of order k over the first
// `sigma` lowercase letters, linearized: length sigma^k + k - 1, every
// k-gram occurring exactly once.
std::string de_bruijn(int sigma, int k);

// fibonacci_word(2) = "a", (3) = "ab", then F(k) = F(k-1)·F(k-2).
std::string fibonacci_word(int k);

}  // namespace mwi
