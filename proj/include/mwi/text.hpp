#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwi {

// Reserved bytes injected as word boundaries.  The start marker sorts after
// the end marker nowhere relevant; both simply have to be absent from the
// payload when they are injected.
inline constexpr uint8_t kSentinelStart = 0x01;  // rendered as U+266F by --pretty
inline constexpr uint8_t kSentinelEnd = 0x00;    // rendered as '$' by --pretty

enum class SentinelMode {
  kNone,     // index the bytes exactly as given
  kEndOnly,  // append 0x00
  kBoth,     // prepend 0x01 and append 0x00
};

// Thrown when the payload contains a byte the chosen mode would inject.
class ReservedByteError : public std::runtime_error {
 public:
  ReservedByteError(uint8_t byte, size_t pos);
  uint8_t byte() const { return byte_; }
  size_t pos() const { return pos_; }

 private:
  uint8_t byte_;
  size_t pos_;
};

// Wraps the payload with the markers requested by `mode`.  Only bytes that
// are actually injected are checked for collisions.
std::string wrap_text(const std::string& raw, SentinelMode mode);

SentinelMode parse_sentinel_mode(const std::string& name);
const char* sentinel_mode_name(SentinelMode mode);

// Number of distinct byte values in `text`.
int sigma(const std::string& text);

// Printable rendering: backslash and non-printable bytes become \xHH.
std::string escape_bytes(const std::string& s);

// True when the first byte of `text` occurs nowhere else in it.
bool unique_first_byte(const std::string& text);
// True when the last byte of `text` occurs nowhere else in it.
bool unique_last_byte(const std::string& text);

}  // namespace mwi
