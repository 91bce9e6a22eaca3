#pragma once

// The Garside element Delta_n, its divisor set Div(Delta_n) in block form,
// and peeling of Delta powers.

#include <vector>

#include "braidforge/braid_word.hpp"

namespace braidforge {

/// Descending run x_k x_{k-1} ... x_j.
struct Block {
  int k;
  int j;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Expands a block sequence into its word.
Letters expand_blocks(const std::vector<Block>& blocks);

/// A divisor of Delta_n as a product of descending runs with strictly
/// increasing tops: k_1 < k_2 < ... < k_s <= n-1 and j_h <= k_h.
class DivisorForm {
 public:
  /// Throws std::invalid_argument if the block sequence violates the shape.
  DivisorForm(int strands, std::vector<Block> blocks);

  int strands() const noexcept { return strands_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t length() const;
  BraidWord expand() const;

  friend bool operator==(const DivisorForm&, const DivisorForm&) = default;

 private:
  int strands_;
  std::vector<Block> blocks_;
};

/// x_1 (x_2 x_1) (x_3 x_2 x_1) ... (x_{n-1} ... x_1), length n(n-1)/2.
BraidWord delta_word(int n);

/// No representative contains x_i x_i as a factor.
bool is_square_free(const BraidWord& w, const ClosureLimits& limits = {});

/// All block forms, ordered lexicographically on the block sequence.
std::vector<DivisorForm> enumerate_divisor_forms(int n);

/// enumerate_divisor_forms expanded to words. With `verify_minimal` each
/// expansion is checked against its closure and std::logic_error is thrown if
/// one is not already length-lex minimal.
std::vector<CanonicalBraid> enumerate_divisors(int n, bool verify_minimal = false);

/// Brute force: canonical forms of every contiguous factor of every
/// representative of Delta_n. Sorted length-lex. Intended for n <= 5; larger n
/// trips the closure cap.
std::vector<CanonicalBraid> divisors_oracle(int n, const ClosureLimits& limits = {});

struct DeltaDecomposition {
  int power;
  CanonicalBraid rest;
};

/// w = Delta^power * rest with rest not divisible by Delta.
DeltaDecomposition delta_decompose(const BraidWord& w, const ClosureLimits& limits = {});

/// Delta^power * rest as a word.
BraidWord recompose(int strands, const DeltaDecomposition& d);

}  // namespace braidforge
