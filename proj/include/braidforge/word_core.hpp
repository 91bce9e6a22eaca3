#pragma once

// Positive braid words modulo the two length-preserving relations
//   x_i x_j     <-> x_j x_i          (|i - j| >= 2)
//   x_i x_{i+1} x_i <-> x_{i+1} x_i x_{i+1}
// Everything here is computed by brute-force closure, so it doubles as the
// oracle for the closed-form counts elsewhere in the library.

#include <cstddef>
#include <optional>
#include <vector>

#include "braidforge/braid_word.hpp"

namespace braidforge {

/// All words reachable by exactly one commutation or braid move, sorted
/// lexicographically and without duplicates.
std::vector<Letters> neighbors_of(const Letters& w);
std::vector<BraidWord> rewrite_neighbors(const BraidWord& w);

/// Breadth-first closure of `w` under rewrite moves, in discovery order
/// (w first). Throws ClassSizeExceeded past `limits.max_class_size`.
std::vector<Letters> closure_of(const Letters& w, const ClosureLimits& limits = {});

/// Length-lex minimum of the closure; the raw-letter form of canonical_form.
Letters canonical_letters(const Letters& w, const ClosureLimits& limits = {});

/// The full class of `w`, sorted length-lex.
std::vector<BraidWord> equivalence_class(const BraidWord& w,
                                         const ClosureLimits& limits = {});

CanonicalBraid canonical_form(const BraidWord& w, const ClosureLimits& limits = {});

/// Equal lengths are necessary; unequal lengths return false without any
/// closure work. Throws std::invalid_argument on a strand-count mismatch.
bool braids_equal(const BraidWord& a, const BraidWord& b,
                  const ClosureLimits& limits = {});

/// True iff some representative of `w` has a contiguous factor braid-equal
/// to `target`. The empty target is a factor of everything.
bool contains_factor(const BraidWord& w, const BraidWord& target,
                     const ClosureLimits& limits = {});

/// Permutation of {1..n}, stored as the image of each point.
class Permutation {
 public:
  explicit Permutation(int n);
  /// `images[p-1]` is the image of p. Throws std::invalid_argument if the
  /// list is not a bijection of 1..n.
  static Permutation from_images(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  /// Image of `point` (1-based).
  int operator()(int point) const { return image_.at(point - 1); }
  const std::vector<int>& images() const noexcept { return image_; }

  /// Right-multiply by the transposition (i, i+1).
  void swap_adjacent(int i);

  /// Lengths of the nontrivial cycles, weakly decreasing.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Projection x_i -> (i, i+1), multiplied in word order.
Permutation underlying_permutation(const BraidWord& w);

/// All (n-1)^k words of length k in lexicographic order. Throws
/// std::length_error when the count would exceed `max_words`.
std::vector<BraidWord> enumerate_words(int n, int k,
                                       std::size_t max_words = 10'000'000);

/// Number of words enumerate_words would produce; nullopt once it passes
/// `cap`.
std::optional<std::size_t> word_count(int n, int k, std::size_t cap);

/// The index-th word (base n-1 digits, most significant first).
Letters word_at(int n, int k, std::size_t index);

}  // namespace braidforge
