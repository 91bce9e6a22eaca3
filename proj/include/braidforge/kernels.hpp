#pragma once

// Batch kernels over many independent words. Each kernel has a serial
// reference path and an OpenMP path; both return identical, deterministically
// ordered results, which the tests check and bench/ times.

#include <cstddef>
#include <span>
#include <vector>

#include "braidforge/braid_word.hpp"

namespace braidforge {

enum class Execution { serial, parallel };

/// canonical_letters applied to every word, output aligned with input.
std::vector<Letters> canonicalize_batch(std::span<const Letters> words,
                                        Execution exec,
                                        const ClosureLimits& limits = {});

/// Canonical forms of all (n-1)^k words of length k, deduplicated and sorted
/// lexicographically. Its size is the number of distinct braids of length k.
std::vector<Letters> distinct_braids_of_length(int n, int k, Execution exec,
                                               const ClosureLimits& limits = {},
                                               std::size_t max_words = 10'000'000);

/// Sorted, deduplicated contiguous factors (including the empty word) of
/// every word in `words`.
std::vector<Letters> distinct_factors(std::span<const Letters> words, Execution exec);

/// Number of worker threads the parallel path will use.
int worker_threads();

}  // namespace braidforge
