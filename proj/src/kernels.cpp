#include "braidforge/kernels.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "braidforge/word_core.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidforge {

namespace {

void sort_unique(std::vector<Letters>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// OpenMP regions must not leak exceptions; capture the first and rethrow.
class ExceptionSlot {
 public:
  template <typename Fn>
  void run(Fn&& fn) {
    try {
      fn();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

void append_factors(const Letters& w, std::vector<Letters>& out) {
  out.emplace_back();
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t end = start + 1; end <= w.size(); ++end) {
      out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start),
                       w.begin() + static_cast<std::ptrdiff_t>(end));
    }
  }
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Letters> canonicalize_batch(std::span<const Letters> words,
                                        Execution exec,
                                        const ClosureLimits& limits) {
  std::vector<Letters> out(words.size());
  const auto count = static_cast<std::ptrdiff_t>(words.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = canonical_letters(words[static_cast<std::size_t>(i)], limits);
    }
    return out;
  }
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slot.run([&] {
      out[static_cast<std::size_t>(i)] = canonical_letters(words[static_cast<std::size_t>(i)], limits);
    });
  }
  slot.rethrow();
  return out;
}

std::vector<Letters> distinct_braids_of_length(int n, int k, Execution exec,
                                               const ClosureLimits& limits,
                                               std::size_t max_words) {
  auto total = word_count(n, k, max_words);
  if (!total) {
    throw std::length_error("too many words of length " + std::to_string(k) +
                            " on " + std::to_string(n) + " strands");
  }
  const auto count = static_cast<std::ptrdiff_t>(*total);
  std::vector<Letters> result;

  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      result.push_back(canonical_letters(word_at(n, k, static_cast<std::size_t>(i)), limits));
    }
    sort_unique(result);
    return result;
  }

  ExceptionSlot slot;
#pragma omp parallel
  {
    std::vector<Letters> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      slot.run([&] {
        local.push_back(canonical_letters(word_at(n, k, static_cast<std::size_t>(i)), limits));
      });
    }
    sort_unique(local);
#pragma omp critical(braidforge_merge)
    result.insert(result.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
  }
  slot.rethrow();
  sort_unique(result);
  return result;
}

std::vector<Letters> distinct_factors(std::span<const Letters> words, Execution exec) {
  std::vector<Letters> result;
  const auto count = static_cast<std::ptrdiff_t>(words.size());
  if (exec == Execution::serial) {
    for (const auto& w : words) append_factors(w, result);
    sort_unique(result);
    return result;
  }
#pragma omp parallel
  {
    std::vector<Letters> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      append_factors(words[static_cast<std::size_t>(i)], local);
    }
    sort_unique(local);
#pragma omp critical(braidforge_merge)
    result.insert(result.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
  }
  sort_unique(result);
  return result;
}

}  // namespace braidforge
