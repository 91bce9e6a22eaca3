#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

/// Generator index i, standing for x_i. Valid values are 1..strands-1.
using Generator = std::uint8_t;

/// Raw letter sequence without a strand count. Used inside the hot loops
/// (closure, kernels) where re-validating every word would be wasteful.
using Letters = std::vector<Generator>;

/// Largest strand count representable with 8-bit generator indices.
inline constexpr int kMaxStrands = 255;

struct LettersHash {
  std::size_t operator()(const Letters& w) const noexcept {
    // FNV-1a, seeded with the length so prefixes do not collide trivially.
    std::size_t h = 1469598103934665603ull ^ w.size();
    for (Generator g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Length first, then lexicographic on indices.
inline bool length_lex_less(std::span<const Generator> a,
                            std::span<const Generator> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Thrown when an equivalence-class closure grows past the configured cap.
class ClassSizeExceeded : public std::runtime_error {
 public:
  explicit ClassSizeExceeded(std::size_t cap)
      : std::runtime_error("equivalence class exceeds " + std::to_string(cap) +
                           " words; instance is beyond desk scale"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

struct ClosureLimits {
  std::size_t max_class_size = 1'000'000;
};

/// A positive braid word on `strands` strands. Immutable once built.
class BraidWord {
 public:
  /// Throws std::invalid_argument on strands < 1 or a letter outside
  /// 1..strands-1. One strand admits only the unit braid.
  BraidWord(int strands, Letters letters);
  explicit BraidWord(int strands) : BraidWord(strands, Letters{}) {}

  int strands() const noexcept { return strands_; }
  const Letters& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }

  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& rhs) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  Letters letters_;
};

/// Length-lex order within one strand count.
bool operator<(const BraidWord& a, const BraidWord& b);

/// Text encoding: "1,2,1"; the unit braid is "e".
std::string to_string(std::span<const Generator> letters);
inline std::string to_string(const BraidWord& w) { return to_string(w.letters()); }

/// Inverse of to_string. Accepts surrounding whitespace around indices.
/// Throws std::invalid_argument on malformed text or out-of-range letters.
BraidWord parse_word(int strands, std::string_view text);

/// Length-lex minimal representative of a braid. Only produced by
/// canonicalisation or by enumerators that guarantee minimality.
class CanonicalBraid {
 public:
  /// Caller guarantees `w` is already the minimum of its class.
  static CanonicalBraid from_canonical_word(BraidWord w) {
    return CanonicalBraid(std::move(w));
  }

  const BraidWord& word() const noexcept { return word_; }
  int strands() const noexcept { return word_.strands(); }
  std::size_t length() const noexcept { return word_.length(); }

  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;
  friend bool operator<(const CanonicalBraid& a, const CanonicalBraid& b) {
    return a.word_ < b.word_;
  }

 private:
  explicit CanonicalBraid(BraidWord w) : word_(std::move(w)) {}
  BraidWord word_;
};

inline std::string to_string(const CanonicalBraid& b) { return to_string(b.word()); }

}  // namespace braidforge

template <>
struct std::hash<braidforge::BraidWord> {
  std::size_t operator()(const braidforge::BraidWord& w) const noexcept {
    return braidforge::LettersHash{}(w.letters()) ^
           (static_cast<std::size_t>(w.strands()) << 56);
  }
};
