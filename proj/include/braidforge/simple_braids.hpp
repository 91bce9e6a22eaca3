#pragma once

// Simple braids (some representative uses each generator at most once), their
// block canonical form, and the conjugacy map to partitions.

#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/garside.hpp"

namespace braidforge {

/// Block form of a simple braid: descending runs over disjoint, increasing
/// ranges, i.e. k_1 < ... < k_s, j_h <= k_h and j_{h+1} > k_h.
class SimpleBraidForm {
 public:
  /// Throws std::invalid_argument if the blocks overlap or leave 1..n-1.
  SimpleBraidForm(int strands, std::vector<Block> blocks);

  int strands() const noexcept { return strands_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t length() const;
  BraidWord expand() const;

  friend bool operator==(const SimpleBraidForm&, const SimpleBraidForm&) = default;

 private:
  int strands_;
  std::vector<Block> blocks_;
};

/// Nontrivial cycle lengths a_1 >= ... >= a_r >= 2 with sum <= n.
class ClassPartition {
 public:
  /// Throws std::invalid_argument unless parts are weakly decreasing, each at
  /// least 2, and fit in `strands`.
  ClassPartition(int strands, std::vector<int> parts);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Braid length of the class: sum of (a_i - 1).
  int braid_length() const;

  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;

 private:
  int strands_;
  std::vector<int> parts_;
};

/// "()" for the unit class, otherwise "(3,2)".
std::string to_string(const ClassPartition& a);

/// All simple forms on n strands in lexicographic block order.
/// |result| = F_{2n-1}.
std::vector<SimpleBraidForm> enumerate_simple(int n);

bool is_simple(const BraidWord& w, const ClosureLimits& limits = {});

ClassPartition conjugacy_representative(const SimpleBraidForm& b);
ClassPartition conjugacy_representative(const BraidWord& simple_word);

/// (x_1 ... x_{s_1 - 1})(x_{s_1 + 1} ... x_{s_2 - 1}) ... as a block form.
SimpleBraidForm beta_A(const ClassPartition& a, int n);

/// All class partitions on n strands, ordered by braid length and then by
/// parts in decreasing lexicographic order.
std::vector<ClassPartition> enumerate_classes(int n);

/// Search for a positive word alpha of length <= max_length with
/// beta * alpha == alpha * beta_A. Returns the first witness in length-lex
/// order over canonical alphas.
std::optional<BraidWord> find_conjugacy_witness(const SimpleBraidForm& b,
                                                int max_length,
                                                const ClosureLimits& limits = {});

}  // namespace braidforge
