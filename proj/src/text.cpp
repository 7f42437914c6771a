#include "mwi/text.hpp"

#include <array>
#include <cstdio>

namespace mwi {

namespace {

std::string describe(uint8_t byte, size_t pos) {
  char buf[64];
  snprintf(buf, sizeof(buf), "reserved byte 0x%02X at payload offset %zu", byte, pos);
  return buf;
}

void check_absent(const std::string& raw, uint8_t byte) {
  size_t pos = raw.find(static_cast<char>(byte));
  if (pos != std::string::npos) throw ReservedByteError(byte, pos);
}

}  // namespace

ReservedByteError::ReservedByteError(uint8_t byte, size_t pos)
    : std::runtime_error(describe(byte, pos)), byte_(byte), pos_(pos) {}

std::string wrap_text(const std::string& raw, SentinelMode mode) {
  switch (mode) {
    case SentinelMode::kNone:
      return raw;
    case SentinelMode::kEndOnly: {
      check_absent(raw, kSentinelEnd);
      std::string out = raw;
      out.push_back(static_cast<char>(kSentinelEnd));
      return out;
    }
    case SentinelMode::kBoth: {
      check_absent(raw, kSentinelEnd);
      check_absent(raw, kSentinelStart);
      std::string out;
      out.reserve(raw.size() + 2);
      out.push_back(static_cast<char>(kSentinelStart));
      out += raw;
      out.push_back(static_cast<char>(kSentinelEnd));
      return out;
    }
  }
  throw std::logic_error("bad SentinelMode");
}

SentinelMode parse_sentinel_mode(const std::string& name) {
  if (name == "none") return SentinelMode::kNone;
  if (name == "end") return SentinelMode::kEndOnly;
  if (name == "both") return SentinelMode::kBoth;
  throw std::invalid_argument("unknown sentinel mode: " + name);
}

const char* sentinel_mode_name(SentinelMode mode) {
  switch (mode) {
    case SentinelMode::kNone:
      return "none";
    case SentinelMode::kEndOnly:
      return "end";
    case SentinelMode::kBoth:
      return "both";
  }
  return "?";
}

int sigma(const std::string& text) {
  std::array<bool, 256> seen{};
  int count = 0;
  for (unsigned char c : text) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

std::string escape_bytes(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c >= 0x20 && c < 0x7f) {
      out.push_back(static_cast<char>(c));
    } else {
      char buf[8];
      snprintf(buf, sizeof(buf), "\\x%02x", c);
      out += buf;
    }
  }
  return out;
}

bool unique_first_byte(const std::string& text) {
  if (text.empty()) return false;
  return text.find(text.front(), 1) == std::string::npos;
}

bool unique_last_byte(const std::string& text) {
  if (text.empty()) return false;
  return text.find(text.back()) == text.size() - 1;
}

}  // namespace mwi
