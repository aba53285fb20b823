/* Shared error types and small utilities. */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ginv {

// Thrown when an enumeration or elimination exceeds a configured resource cap.
// Callers are expected to let this propagate (or report it) rather than return
// a silently truncated answer.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure for the text formats; `pos` is a 0-based byte offset into the
// input that was being parsed.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

// FNV-1a, used for content-addressed cache file names.  Stable across runs
// and platforms by construction.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ginv
