#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mwi/text.hpp"

using namespace mwi;

TEST_CASE("wrap modes") {
  CHECK(wrap_text("ab", SentinelMode::kNone) == "ab");
  CHECK(wrap_text("ab", SentinelMode::kEndOnly) == std::string("ab\x00", 3));
  CHECK(wrap_text("ab", SentinelMode::kBoth) == std::string("\x01"
                                                            "ab\x00",
                                                            4));
  CHECK(wrap_text("", SentinelMode::kBoth) == std::string("\x01\x00", 2));
  // In mode none the payload may use the marker byte values freely.
  std::string tricky("\x00\x01z", 3);
  CHECK(wrap_text(tricky, SentinelMode::kNone) == tricky);
}

TEST_CASE("reserved bytes rejected with position") {
  std::string bad("a\0b", 3);
  CHECK_THROWS_AS(wrap_text(bad, SentinelMode::kEndOnly), ReservedByteError);
  try {
    wrap_text(bad, SentinelMode::kEndOnly);
    FAIL("not reached");
  } catch (const ReservedByteError& e) {
    CHECK(e.byte() == 0x00);
    CHECK(e.pos() == 1);
    CHECK(std::string(e.what()).find("0x00") != std::string::npos);
  }
  // 0x01 is only reserved when the start marker is injected.
  std::string start("\x01", 1);
  CHECK_NOTHROW(wrap_text(start, SentinelMode::kEndOnly));
  CHECK_THROWS_AS(wrap_text(start, SentinelMode::kBoth), ReservedByteError);
}

TEST_CASE("mode names round-trip") {
  for (SentinelMode m : {SentinelMode::kNone, SentinelMode::kEndOnly, SentinelMode::kBoth})
    CHECK(parse_sentinel_mode(sentinel_mode_name(m)) == m);
  CHECK_THROWS_AS(parse_sentinel_mode("tail"), std::invalid_argument);
}

TEST_CASE("sigma") {
  CHECK(sigma("") == 0);
  CHECK(sigma("aaaa") == 1);
  CHECK(sigma("abab") == 2);
  CHECK(sigma(std::string("\x00\xff", 2)) == 2);
}

TEST_CASE("unique boundary bytes") {
  CHECK(!unique_first_byte(""));
  CHECK(!unique_last_byte(""));
  CHECK(unique_first_byte("abcb"));
  CHECK(!unique_first_byte("aba"));
  CHECK(unique_last_byte("abc"));
  CHECK(!unique_last_byte("aba"));
  CHECK(unique_last_byte("a"));
  CHECK(unique_last_byte(wrap_text("aba", SentinelMode::kEndOnly)));
}

TEST_CASE("escaping") {
  CHECK(escape_bytes("plain") == "plain");
  CHECK(escape_bytes(std::string("\x00", 1)) == "\\x00");
  CHECK(escape_bytes("\x01") == "\\x01");
  CHECK(escape_bytes("a\\b") == "a\\\\b");
  CHECK(escape_bytes("\x7f") == "\\x7f");
  CHECK(escape_bytes("\xc3\xa9") == "\\xc3\\xa9");
}
