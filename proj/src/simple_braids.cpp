#include "braidforge/simple_braids.hpp"

#include <algorithm>
#include <numeric>

#include "braidforge/kernels.hpp"
#include "braidforge/word_core.hpp"

namespace braidforge {

SimpleBraidForm::SimpleBraidForm(int strands, std::vector<Block> blocks)
    : strands_(strands), blocks_(std::move(blocks)) {
  int previous_top = 0;
  for (const auto& b : blocks_) {
    if (b.j <= previous_top || b.j > b.k || b.k > strands - 1) {
      throw std::invalid_argument("invalid simple block (" + std::to_string(b.k) +
                                  "," + std::to_string(b.j) + ") on " +
                                  std::to_string(strands) + " strands");
    }
    previous_top = b.k;
  }
}

std::size_t SimpleBraidForm::length() const {
  std::size_t len = 0;
  for (const auto& b : blocks_) len += static_cast<std::size_t>(b.k - b.j + 1);
  return len;
}

BraidWord SimpleBraidForm::expand() const { return BraidWord(strands_, expand_blocks(blocks_)); }

ClassPartition::ClassPartition(int strands, std::vector<int> parts)
    : strands_(strands), parts_(std::move(parts)) {
  int total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 2 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("class partition parts must be weakly decreasing and >= 2");
    }
    total += parts_[i];
  }
  if (total > strands) {
    throw std::invalid_argument("partition " + to_string(*this) + " needs " +
                                std::to_string(total) + " strands, only " +
                                std::to_string(strands) + " available");
  }
}

int ClassPartition::braid_length() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0) - static_cast<int>(parts_.size());
}

std::string to_string(const ClassPartition& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.parts()[i]);
  }
  return out + ")";
}

namespace {

// Depth-first in lexicographic block order: a prefix precedes its
// extensions, and extensions are tried in increasing (k, j).
void extend_simple(int n, int min_bottom, std::vector<Block>& prefix,
                   std::vector<SimpleBraidForm>& out) {
  out.emplace_back(n, prefix);
  for (int k = min_bottom; k <= n - 1; ++k) {
    for (int j = min_bottom; j <= k; ++j) {
      prefix.push_back({k, j});
      extend_simple(n, k + 1, prefix, out);
      prefix.pop_back();
    }
  }
}

void extend_partitions(int budget, int max_part, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  for (int part = std::min(budget, max_part); part >= 2; --part) {
    prefix.push_back(part);
    extend_partitions(budget - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SimpleBraidForm> enumerate_simple(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<SimpleBraidForm> out;
  std::vector<Block> prefix;
  extend_simple(n, 1, prefix, out);
  return out;
}

bool is_simple(const BraidWord& w, const ClosureLimits& limits) {
  if (w.length() + 1 > static_cast<std::size_t>(w.strands())) return false;
  for (const auto& u : closure_of(w.letters(), limits)) {
    std::vector<bool> used(static_cast<std::size_t>(w.strands()), false);
    bool distinct = true;
    for (Generator g : u) {
      if (used[g]) {
        distinct = false;
        break;
      }
      used[g] = true;
    }
    if (distinct) return true;
  }
  return false;
}

ClassPartition conjugacy_representative(const BraidWord& simple_word) {
  return ClassPartition(simple_word.strands(),
                        underlying_permutation(simple_word).cycle_type());
}

ClassPartition conjugacy_representative(const SimpleBraidForm& b) {
  return conjugacy_representative(b.expand());
}

SimpleBraidForm beta_A(const ClassPartition& a, int n) {
  if (std::accumulate(a.parts().begin(), a.parts().end(), 0) > n) {
    throw std::invalid_argument("partition " + to_string(a) + " exceeds " +
                                std::to_string(n) + " strands");
  }
  // Each ascending run x_{s+1} ... x_{s+a-1} is a chain of one-letter blocks.
  std::vector<Block> blocks;
  int start = 0;
  for (int part : a.parts()) {
    for (int g = start + 1; g <= start + part - 1; ++g) blocks.push_back({g, g});
    start += part;
  }
  return SimpleBraidForm(n, std::move(blocks));
}

std::vector<ClassPartition> enumerate_classes(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  extend_partitions(n, n, prefix, raw);
  std::vector<ClassPartition> out;
  out.reserve(raw.size());
  for (auto& p : raw) out.emplace_back(n, std::move(p));
  std::stable_sort(out.begin(), out.end(), [](const ClassPartition& x, const ClassPartition& y) {
    if (x.braid_length() != y.braid_length()) return x.braid_length() < y.braid_length();
    return std::lexicographical_compare(y.parts().begin(), y.parts().end(),
                                        x.parts().begin(), x.parts().end());
  });
  return out;
}

std::optional<BraidWord> find_conjugacy_witness(const SimpleBraidForm& b,
                                                int max_length,
                                                const ClosureLimits& limits) {
  const int n = b.strands();
  const BraidWord beta = b.expand();
  const BraidWord target = beta_A(conjugacy_representative(b), n).expand();
  for (int len = 0; len <= max_length; ++len) {
    if (n < 2 && len > 0) break;
    for (auto& alpha_letters : distinct_braids_of_length(n, len, Execution::serial, limits)) {
      BraidWord alpha(n, std::move(alpha_letters));
      if (braids_equal(beta * alpha, alpha * target, limits)) return alpha;
    }
  }
  return std::nullopt;
}

}  // namespace braidforge
