#include "braidforge/word_core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace braidforge {

namespace {

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("strand-count mismatch: " +
                                std::to_string(a.strands()) + " vs " +
                                std::to_string(b.strands()));
  }
}

// Calls `emit` once per single-move rewrite of w; may repeat a word when two
// different moves coincide, callers dedupe.
template <typename Emit>
void for_each_move(const Letters& w, Emit&& emit) {
  Letters scratch;
  const std::size_t len = w.size();
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const int a = w[p];
    const int b = w[p + 1];
    if (a - b >= 2 || b - a >= 2) {
      scratch = w;
      std::swap(scratch[p], scratch[p + 1]);
      emit(scratch);
    }
    if (p + 2 < len && w[p + 2] == a && (b == a + 1 || b == a - 1)) {
      scratch = w;
      scratch[p] = static_cast<Generator>(b);
      scratch[p + 1] = static_cast<Generator>(a);
      scratch[p + 2] = static_cast<Generator>(b);
      emit(scratch);
    }
  }
}

}  // namespace

std::vector<Letters> neighbors_of(const Letters& w) {
  std::vector<Letters> out;
  for_each_move(w, [&](const Letters& u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BraidWord> rewrite_neighbors(const BraidWord& w) {
  std::vector<BraidWord> out;
  for (auto& u : neighbors_of(w.letters())) out.emplace_back(w.strands(), std::move(u));
  return out;
}

std::vector<Letters> closure_of(const Letters& w, const ClosureLimits& limits) {
  std::unordered_set<Letters, LettersHash> seen{w};
  std::vector<Letters> order{w};
  // `order` doubles as the BFS queue.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Letters current = order[head];
    for_each_move(current, [&](const Letters& u) {
      if (seen.insert(u).second) {
        if (seen.size() > limits.max_class_size) {
          throw ClassSizeExceeded(limits.max_class_size);
        }
        order.push_back(u);
      }
    });
  }
  return order;
}

Letters canonical_letters(const Letters& w, const ClosureLimits& limits) {
  auto members = closure_of(w, limits);
  return *std::min_element(members.begin(), members.end(),
                           [](const Letters& a, const Letters& b) {
                             return length_lex_less(a, b);
                           });
}

std::vector<BraidWord> equivalence_class(const BraidWord& w,
                                         const ClosureLimits& limits) {
  auto members = closure_of(w.letters(), limits);
  std::sort(members.begin(), members.end());
  std::vector<BraidWord> out;
  out.reserve(members.size());
  for (auto& u : members) out.emplace_back(w.strands(), std::move(u));
  return out;
}

CanonicalBraid canonical_form(const BraidWord& w, const ClosureLimits& limits) {
  return CanonicalBraid::from_canonical_word(
      BraidWord(w.strands(), canonical_letters(w.letters(), limits)));
}

bool braids_equal(const BraidWord& a, const BraidWord& b,
                  const ClosureLimits& limits) {
  require_same_strands(a, b);
  if (a.length() != b.length()) return false;
  if (a == b) return true;
  return canonical_letters(a.letters(), limits) ==
         canonical_letters(b.letters(), limits);
}

bool contains_factor(const BraidWord& w, const BraidWord& target,
                     const ClosureLimits& limits) {
  require_same_strands(w, target);
  const std::size_t m = target.length();
  if (m == 0) return true;
  if (m > w.length()) return false;

  auto target_class = closure_of(target.letters(), limits);
  std::unordered_set<Letters, LettersHash> targets(target_class.begin(),
                                                   target_class.end());
  Letters window(m);
  for (const auto& u : closure_of(w.letters(), limits)) {
    for (std::size_t p = 0; p + m <= u.size(); ++p) {
      std::copy_n(u.begin() + static_cast<std::ptrdiff_t>(p), m, window.begin());
      if (targets.contains(window)) return true;
    }
  }
  return false;
}

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p(std::max(n, 1));
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("image list is not a permutation");
    }
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  p.image_ = std::move(images);
  return p;
}

void Permutation::swap_adjacent(int i) {
  if (i < 1 || i >= size()) {
    throw std::out_of_range("transposition (" + std::to_string(i) + "," +
                            std::to_string(i + 1) + ") outside permutation");
  }
  std::swap(image_[static_cast<std::size_t>(i - 1)], image_[static_cast<std::size_t>(i)]);
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(image_[p] - 1)) {
      seen[p] = true;
      ++len;
    }
    if (len >= 2) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (Generator g : w.letters()) p.swap_adjacent(g);
  return p;
}

std::optional<std::size_t> word_count(int n, int k, std::size_t cap) {
  if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and k >= 0");
  std::size_t count = 1;
  const auto base = static_cast<std::size_t>(n - 1);
  for (int i = 0; i < k; ++i) {
    if (base != 0 && count > cap / base) return std::nullopt;
    count *= base;
  }
  if (count > cap) return std::nullopt;
  return count;
}

Letters word_at(int n, int k, std::size_t index) {
  const auto base = static_cast<std::size_t>(n - 1);
  Letters w(static_cast<std::size_t>(k));
  for (int pos = k - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<Generator>(index % base + 1);
    index /= base;
  }
  return w;
}

std::vector<BraidWord> enumerate_words(int n, int k, std::size_t max_words) {
  auto count = word_count(n, k, max_words);
  if (!count) {
    throw std::length_error("enumerating all words of length " + std::to_string(k) +
                            " on " + std::to_string(n) + " strands exceeds " +
                            std::to_string(max_words) + " words");
  }
  std::vector<BraidWord> out;
  out.reserve(*count);
  for (std::size_t i = 0; i < *count; ++i) out.emplace_back(n, word_at(n, k, i));
  return out;
}

}  // namespace braidforge
