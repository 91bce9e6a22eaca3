#pragma once

// Closed forms and recurrences for the counting sequences attached to
// positive braids. Exact integer arithmetic throughout.

#include <vector>

#include "braidforge/polynomial.hpp"

namespace braidforge {

/// Row n of a triangular table lives at index n; index 0 is an empty row.
using CountRows = std::vector<std::vector<BigInt>>;

/// F_0 = 0, F_1 = 1.
BigInt fib(int k);

/// Braids of length k on three strands: F_{k+3} - 1.
BigInt count_positive_3(int k);
/// Coefficients of 1/((1-t)(1-t-t^2)).
std::vector<BigInt> positive_3_series(std::size_t terms);

/// Delta-free braids of length k on three strands: coefficient of t^k in
/// (1+t+t^2)/(1-t-t^2).
BigInt count_delta_free_3(int k);
std::vector<BigInt> delta_free_3_series(std::size_t terms);
/// 2 F_{k-1} as printed (k >= 1), and 2 F_{k+1}, the form the recurrence and
/// the series actually give.
BigInt delta_free_3_printed(int k);
BigInt delta_free_3_corrected(int k);

/// (1+t)(1+t+t^2)...(1+t+...+t^{n-1}). Coefficient i is d_{n,i}.
IntegerPolynomial divisor_poly(int n);

/// d_{n+1,i} = d_{n,i} + d_{n,i-1} + ... + d_{n,i-n} from d_{1,0} = 1.
CountRows d_table(int n_max);
bool is_symmetric(const std::vector<BigInt>& row);
/// Weakly rising then weakly falling.
bool is_unimodal(const std::vector<BigInt>& row);

/// s_{n,i} = s_{n-1,i} + s_{n-1,i-1} + s_{n-2,i-2} + ... + s_{n-i,0}
/// from s_{1,0} = 1. Row n has n entries.
CountRows s_table(int n_max);
/// Same triangle via s_{n,i} = 2 s_{n-1,i-1} + s_{n-1,i} - s_{n-2,i-1}, seeded
/// with rows 1 and 2.
CountRows s_table_three_term(int n_max);

enum class SClosedForm {
  s2_printed,    // (n-1)(n+2)/2
  s2_corrected,  // (n-2)(n+1)/2
  s3,            // (n-3)(n+4)(n-1)/6
  s4,            // (n-4)(n+1)(n^2+5n-18)/24
  last,          // s_{n,n-1} = 2^{n-2}
};

/// Evaluates a closed form; throws std::out_of_range when n is below the
/// form's range (n >= i+1, or n >= 2 for `last`).
BigInt s_closed_form(SClosedForm form, int n);

struct FiniteDifferenceCheck {
  int degree;
  int n_first;
  std::vector<BigInt> values;         // s_{n,i} for n = n_first...
  std::vector<BigInt> top_difference; // i-th differences, expected all 1
  std::vector<BigInt> next_difference;// (i+1)-th differences, expected all 0
  bool passed = false;
};

/// n -> s_{n,i} over [n_first, n_last]: the (i+1)-th differences vanish and
/// the i-th differences are all 1. Needs at least i+2 sample points.
FiniteDifferenceCheck s_polynomiality_check(int i, int n_first, int n_last);

/// Partitions of m into exactly k parts.
BigInt partitions(int m, int k);
/// P(m, k) for 0 <= m, k <= m_max, indexed [m][k].
CountRows partitions_table(int m_max);
/// P(n+k, k) = sum_{i=1..k} P(n, i) for all 1 <= k <= n with n + k <= m_max.
bool partition_shift_identity_holds(int m_max);

/// c_{n,i} = P(i + min(i, n-i), min(i, n-i)) for i = 0..n-1.
std::vector<BigInt> c_row(int n);

/// Sum of a row.
BigInt row_sum(const std::vector<BigInt>& row);

/// Memoised tables built once and then shared read-only.
struct CountTables {
  int n_max = 0;
  std::vector<BigInt> fib;  // F_0 .. F_{2 n_max + 3}
  CountRows partitions;     // [m][k] for m <= 2 n_max
  CountRows d;
  CountRows s;
  CountRows c;

  static CountTables build(int n_max);
};

}  // namespace braidforge
