#include "braidforge/garside.hpp"

#include <algorithm>
#include <unordered_set>

#include "braidforge/kernels.hpp"
#include "braidforge/word_core.hpp"

namespace braidforge {

Letters expand_blocks(const std::vector<Block>& blocks) {
  Letters out;
  for (const auto& b : blocks) {
    for (int g = b.k; g >= b.j; --g) out.push_back(static_cast<Generator>(g));
  }
  return out;
}

DivisorForm::DivisorForm(int strands, std::vector<Block> blocks)
    : strands_(strands), blocks_(std::move(blocks)) {
  int previous_top = 0;
  for (const auto& b : blocks_) {
    if (b.j < 1 || b.j > b.k || b.k <= previous_top || b.k > strands - 1) {
      throw std::invalid_argument("invalid divisor block (" + std::to_string(b.k) +
                                  "," + std::to_string(b.j) + ") on " +
                                  std::to_string(strands) + " strands");
    }
    previous_top = b.k;
  }
}

std::size_t DivisorForm::length() const {
  std::size_t len = 0;
  for (const auto& b : blocks_) len += static_cast<std::size_t>(b.k - b.j + 1);
  return len;
}

BraidWord DivisorForm::expand() const { return BraidWord(strands_, expand_blocks(blocks_)); }

BraidWord delta_word(int n) {
  if (n < 2) throw std::invalid_argument("Delta_n needs n >= 2");
  Letters letters;
  for (int top = 1; top <= n - 1; ++top) {
    for (int g = top; g >= 1; --g) letters.push_back(static_cast<Generator>(g));
  }
  return BraidWord(n, std::move(letters));
}

bool is_square_free(const BraidWord& w, const ClosureLimits& limits) {
  // Squares are rigid (no move applies to x_i x_i), so a literal scan of
  // every representative suffices.
  for (const auto& u : closure_of(w.letters(), limits)) {
    for (std::size_t p = 0; p + 1 < u.size(); ++p) {
      if (u[p] == u[p + 1]) return false;
    }
  }
  return true;
}

namespace {

void extend_divisors(int n, int next_top, std::vector<Block>& prefix,
                     std::vector<std::vector<Block>>& out) {
  out.push_back(prefix);
  for (int k = next_top; k <= n - 1; ++k) {
    for (int j = 1; j <= k; ++j) {
      prefix.push_back({k, j});
      extend_divisors(n, k + 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<DivisorForm> enumerate_divisor_forms(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<std::vector<Block>> sequences;
  std::vector<Block> prefix;
  extend_divisors(n, 1, prefix, sequences);
  std::sort(sequences.begin(), sequences.end());
  std::vector<DivisorForm> out;
  out.reserve(sequences.size());
  for (auto& s : sequences) out.emplace_back(n, std::move(s));
  return out;
}

std::vector<CanonicalBraid> enumerate_divisors(int n, bool verify_minimal) {
  std::vector<CanonicalBraid> out;
  for (const auto& form : enumerate_divisor_forms(n)) {
    auto word = form.expand();
    if (verify_minimal && canonical_letters(word.letters()) != word.letters()) {
      throw std::logic_error("divisor block form " + to_string(word) +
                             " is not length-lex minimal");
    }
    out.push_back(CanonicalBraid::from_canonical_word(std::move(word)));
  }
  return out;
}

std::vector<CanonicalBraid> divisors_oracle(int n, const ClosureLimits& limits) {
  auto representatives = closure_of(delta_word(n).letters(), limits);
  auto factors = distinct_factors(representatives, Execution::parallel);
  auto canon = canonicalize_batch(factors, Execution::parallel, limits);
  std::sort(canon.begin(), canon.end(),
            [](const Letters& a, const Letters& b) { return length_lex_less(a, b); });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<CanonicalBraid> out;
  out.reserve(canon.size());
  for (auto& w : canon) out.push_back(CanonicalBraid::from_canonical_word(BraidWord(n, std::move(w))));
  return out;
}

DeltaDecomposition delta_decompose(const BraidWord& w, const ClosureLimits& limits) {
  const int n = w.strands();
  Letters rest = w.letters();
  int power = 0;
  if (n >= 2) {
    const Letters delta = delta_word(n).letters();
    bool peeled = true;
    while (peeled && rest.size() >= delta.size()) {
      peeled = false;
      for (const auto& u : closure_of(rest, limits)) {
        if (std::equal(delta.begin(), delta.end(), u.begin())) {
          rest.assign(u.begin() + static_cast<std::ptrdiff_t>(delta.size()), u.end());
          ++power;
          peeled = true;
          break;
        }
      }
    }
  }
  return {power, CanonicalBraid::from_canonical_word(
                     BraidWord(n, canonical_letters(rest, limits)))};
}

BraidWord recompose(int strands, const DeltaDecomposition& d) {
  BraidWord out(strands);
  if (d.power > 0) {
    const auto delta = delta_word(strands);
    for (int i = 0; i < d.power; ++i) out = out * delta;
  }
  return out * d.rest.word();
}

}  // namespace braidforge
