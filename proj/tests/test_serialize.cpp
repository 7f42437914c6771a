#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "mwi/enumerate.hpp"
#include "mwi/oracle.hpp"
#include "mwi/serialize.hpp"

using namespace mwi;

namespace {

std::string save_to_string(const Index& ix) {
  std::ostringstream os(std::ios::binary);
  save_index(ix, os);
  return os.str();
}

Index load_from_string(const std::string& bytes) {
  std::istringstream is(bytes, std::ios::binary);
  return load_index(is);
}

struct Flat {
  std::vector<std::string> words;
  std::vector<std::array<int64_t, 6>> keys;
};

Flat all_streams(const Index& ix) {
  Flat f;
  auto grab = [&](const WordHandle& h) {
    f.words.push_back(materialize(ix, h));
    f.keys.push_back({static_cast<int64_t>(h.kind), h.a, h.u_node, h.b, h.len, h.k});
    return true;
  };
  enumerate_maws(ix, grab);
  enumerate_ebfs(ix, grab);
  enumerate_occurring_mrws(ix, grab);
  enumerate_mus(ix, grab);
  return f;
}

Index build(const std::string& raw, SentinelMode mode, bool retain_text = true) {
  BuildOptions o;
  o.mode = mode;
  o.retain_text = retain_text;
  return build_index(raw, o);
}

void check_round_trip(const std::string& raw, SentinelMode mode, bool retain_text) {
  Index a = build(raw, mode, retain_text);
  std::string bytes = save_to_string(a);
  Index b = load_from_string(bytes);

  CHECK(a.stats.n == b.stats.n);
  CHECK(a.stats.sigma == b.stats.sigma);
  CHECK(a.stats.e_R == b.stats.e_R);
  CHECK(a.stats.e_L == b.stats.e_L);
  CHECK(a.stats.e_min == b.stats.e_min);
  CHECK(a.stats.node_count == b.stats.node_count);
  CHECK(a.mode == b.mode);
  CHECK(a.reversed() == b.reversed());
  CHECK(a.every_visit_emits == b.every_visit_emits);
  CHECK(a.text == b.text);

  Flat fa = all_streams(a), fb = all_streams(b);
  CHECK(fa.words == fb.words);
  CHECK(fa.keys == fb.keys);

  // A second build and a load-save cycle both reproduce the bytes exactly.
  CHECK(save_to_string(build(raw, mode, retain_text)) == bytes);
  CHECK(save_to_string(b) == bytes);
}

}  // namespace

TEST_CASE("round trip over assorted inputs") {
  std::vector<std::pair<std::string, SentinelMode>> cases = {
      {"ababcbababcbc$", SentinelMode::kNone},
      {"a", SentinelMode::kNone},
      {"abracadabra", SentinelMode::kEndOnly},
      {"mississippi", SentinelMode::kBoth},
      {"aaaaaaaa", SentinelMode::kBoth},
      {de_bruijn(2, 6), SentinelMode::kNone},
      {fibonacci_word(12), SentinelMode::kEndOnly},
  };
  for (const auto& [raw, mode] : cases) {
    check_round_trip(raw, mode, true);
    check_round_trip(raw, mode, false);
  }
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    std::string s(1 + rng() % 200, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % 5);
    check_round_trip(s, SentinelMode::kNone, it % 2 == 0);
  }
}

TEST_CASE("reversed orientation survives the trip") {
  BuildOptions o;
  o.orientation = Orientation::kReversed;
  Index a = build_index("abcabcaabb", o);
  REQUIRE(a.reversed());
  Index b = load_from_string(save_to_string(a));
  CHECK(b.reversed());
  Flat fa = all_streams(a), fb = all_streams(b);
  CHECK(fa.words == fb.words);
  CHECK(fa.keys == fb.keys);
}

TEST_CASE("file round trip") {
  Index a = build("banana", SentinelMode::kBoth, true);
  std::string path = "/tmp/mwi_test_roundtrip.idx";
  save_index_file(a, path);
  Index b = load_index_file(path);
  CHECK(save_to_string(a) == save_to_string(b));
  std::remove(path.c_str());
}

TEST_CASE("loader refuses malformed input") {
  Index a = build("abracadabra", SentinelMode::kNone, true);
  std::string good = save_to_string(a);
  REQUIRE_NOTHROW(load_from_string(good));

  auto corrupt = [&](size_t off, char value) {
    std::string bad = good;
    REQUIRE(off < bad.size());
    bad[off] = value;
    return bad;
  };

  CHECK_THROWS_AS(load_from_string(corrupt(0, 'X')), std::runtime_error);   // magic
  CHECK_THROWS_AS(load_from_string(corrupt(4, 2)), std::runtime_error);     // version
  CHECK_THROWS_AS(load_from_string(corrupt(8, 4)), std::runtime_error);     // int width
  CHECK_THROWS_AS(load_from_string(corrupt(9, 0x40)), std::runtime_error);  // unknown flag
  CHECK_THROWS_AS(load_from_string(corrupt(10, 9)), std::runtime_error);    // mode

  // Text flag set but TEXT section missing is only constructible the other
  // way around: clear the flag and keep the section.
  {
    std::string bad = good;
    bad[9] = static_cast<char>(bad[9] & ~0x02);
    CHECK_THROWS_AS(load_from_string(bad), std::runtime_error);
  }

  for (size_t cut : {size_t{3}, size_t{10}, size_t{40}, good.size() / 2, good.size() - 1})
    CHECK_THROWS_AS(load_from_string(good.substr(0, cut)), std::runtime_error);

  CHECK_THROWS_AS(load_from_string(good + "tail"), std::runtime_error);
  CHECK_THROWS_AS(load_from_string(""), std::runtime_error);
}
