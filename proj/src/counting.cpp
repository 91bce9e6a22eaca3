#include "braidforge/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidforge {

namespace {

const BigInt& at_or_zero(const CountRows& rows, int n, int i, const BigInt& zero) {
  if (n < 1 || i < 0 || n >= static_cast<int>(rows.size())) return zero;
  const auto& row = rows[static_cast<std::size_t>(n)];
  return i < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(i)] : zero;
}

void require_range(int n, int lowest, const char* what) {
  if (n < lowest) {
    throw std::out_of_range(std::string(what) + " needs n >= " + std::to_string(lowest) +
                            ", got " + std::to_string(n));
  }
}

}  // namespace

BigInt fib(int k) {
  if (k < 0) throw std::invalid_argument("fib needs k >= 0");
  BigInt a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt count_positive_3(int k) {
  if (k < 0) throw std::invalid_argument("length must be >= 0");
  return fib(k + 3) - 1;
}

std::vector<BigInt> positive_3_series(std::size_t terms) {
  const IntegerPolynomial den = IntegerPolynomial{1, -1} * IntegerPolynomial{1, -1, -1};
  return series_divide(IntegerPolynomial{1}, den, terms);
}

std::vector<BigInt> delta_free_3_series(std::size_t terms) {
  return series_divide(IntegerPolynomial{1, 1, 1}, IntegerPolynomial{1, -1, -1}, terms);
}

BigInt count_delta_free_3(int k) {
  if (k < 0) throw std::invalid_argument("length must be >= 0");
  return delta_free_3_series(static_cast<std::size_t>(k) + 1).back();
}

BigInt delta_free_3_printed(int k) {
  require_range(k, 1, "2F_{k-1}");
  return 2 * fib(k - 1);
}

BigInt delta_free_3_corrected(int k) {
  require_range(k, 1, "2F_{k+1}");
  return 2 * fib(k + 1);
}

IntegerPolynomial divisor_poly(int n) {
  require_range(n, 1, "divisor polynomial");
  IntegerPolynomial p{1};
  for (int m = 1; m <= n - 1; ++m) p *= IntegerPolynomial::geometric(m);
  return p;
}

CountRows d_table(int n_max) {
  require_range(n_max, 1, "d table");
  CountRows rows(static_cast<std::size_t>(n_max) + 1);
  rows[1] = {BigInt(1)};
  const BigInt zero = 0;
  for (int n = 1; n < n_max; ++n) {
    const int width = (n + 1) * n / 2 + 1;
    auto& next = rows[static_cast<std::size_t>(n) + 1];
    next.resize(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
      for (int back = 0; back <= n && back <= i; ++back) next[static_cast<std::size_t>(i)] += at_or_zero(rows, n, i - back, zero);
    }
  }
  return rows;
}

bool is_symmetric(const std::vector<BigInt>& row) {
  return std::equal(row.begin(), row.end(), row.rbegin());
}

bool is_unimodal(const std::vector<BigInt>& row) {
  std::size_t i = 1;
  while (i < row.size() && row[i] >= row[i - 1]) ++i;
  while (i < row.size() && row[i] <= row[i - 1]) ++i;
  return i >= row.size();
}

CountRows s_table(int n_max) {
  require_range(n_max, 1, "s table");
  CountRows rows(static_cast<std::size_t>(n_max) + 1);
  const BigInt zero = 0;
  rows[1] = {BigInt(1)};
  for (int n = 2; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      BigInt v = at_or_zero(rows, n - 1, i, zero) + at_or_zero(rows, n - 1, i - 1, zero);
      for (int step = 2; step <= i; ++step) v += at_or_zero(rows, n - step, i - step, zero);
      row[static_cast<std::size_t>(i)] = std::move(v);
    }
  }
  return rows;
}

CountRows s_table_three_term(int n_max) {
  require_range(n_max, 1, "s table");
  CountRows rows(static_cast<std::size_t>(n_max) + 1);
  const BigInt zero = 0;
  rows[1] = {BigInt(1)};
  if (n_max >= 2) rows[2] = {BigInt(1), BigInt(1)};
  for (int n = 3; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      row[static_cast<std::size_t>(i)] = 2 * at_or_zero(rows, n - 1, i - 1, zero) +
                                         at_or_zero(rows, n - 1, i, zero) -
                                         at_or_zero(rows, n - 2, i - 1, zero);
    }
  }
  return rows;
}

BigInt s_closed_form(SClosedForm form, int n) {
  const BigInt m = n;
  BigInt numerator;
  int denominator = 1;
  switch (form) {
    case SClosedForm::s2_printed:
      require_range(n, 3, "s_{n,2}");
      numerator = (m - 1) * (m + 2);
      denominator = 2;
      break;
    case SClosedForm::s2_corrected:
      require_range(n, 3, "s_{n,2}");
      numerator = (m - 2) * (m + 1);
      denominator = 2;
      break;
    case SClosedForm::s3:
      require_range(n, 4, "s_{n,3}");
      numerator = (m - 3) * (m + 4) * (m - 1);
      denominator = 6;
      break;
    case SClosedForm::s4:
      require_range(n, 5, "s_{n,4}");
      numerator = (m - 4) * (m + 1) * (m * m + 5 * m - 18);
      denominator = 24;
      break;
    case SClosedForm::last:
      require_range(n, 2, "s_{n,n-1}");
      return BigInt(1) << (n - 2);
  }
  if (numerator % denominator != 0) {
    throw std::logic_error("closed form is not integral at n = " + std::to_string(n));
  }
  return numerator / denominator;
}

FiniteDifferenceCheck s_polynomiality_check(int i, int n_first, int n_last) {
  if (i < 0 || n_first < 1 || n_last - n_first + 1 < i + 2) {
    throw std::invalid_argument("finite-difference check needs at least i+2 points");
  }
  FiniteDifferenceCheck out{i, n_first, {}, {}, {}};
  const auto rows = s_table(n_last);
  const BigInt zero = 0;
  for (int n = n_first; n <= n_last; ++n) out.values.push_back(at_or_zero(rows, n, i, zero));

  std::vector<BigInt> diff = out.values;
  for (int order = 1; order <= i + 1; ++order) {
    for (std::size_t p = 0; p + 1 < diff.size(); ++p) diff[p] = diff[p + 1] - diff[p];
    diff.pop_back();
    if (order == i) out.top_difference = diff;
    if (order == i + 1) out.next_difference = diff;
  }
  if (i == 0) out.top_difference = out.values;
  out.passed =
      std::all_of(out.top_difference.begin(), out.top_difference.end(), [](const BigInt& v) { return v == 1; }) &&
      std::all_of(out.next_difference.begin(), out.next_difference.end(), [](const BigInt& v) { return v == 0; });
  return out;
}

CountRows partitions_table(int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  CountRows p(static_cast<std::size_t>(m_max) + 1,
              std::vector<BigInt>(static_cast<std::size_t>(m_max) + 1));
  p[0][0] = 1;
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 1; k <= m; ++k) {
      p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          p[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
          p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
    }
  }
  return p;
}

BigInt partitions(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("partitions needs m, k >= 0");
  if (k > m) return m == 0 && k == 0 ? BigInt(1) : BigInt(0);
  return partitions_table(m)[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

bool partition_shift_identity_holds(int m_max) {
  const auto p = partitions_table(m_max);
  for (int n = 1; n <= m_max; ++n) {
    for (int k = 1; k <= n && n + k <= m_max; ++k) {
      BigInt sum = 0;
      for (int i = 1; i <= k; ++i) sum += p[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
      if (sum != p[static_cast<std::size_t>(n + k)][static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

std::vector<BigInt> c_row(int n) {
  require_range(n, 1, "c row");
  const auto p = partitions_table(n);
  std::vector<BigInt> row;
  for (int i = 0; i < n; ++i) {
    const int parts = std::min(i, n - i);
    row.push_back(p[static_cast<std::size_t>(i + parts)][static_cast<std::size_t>(parts)]);
  }
  return row;
}

BigInt row_sum(const std::vector<BigInt>& row) {
  BigInt total = 0;
  for (const auto& v : row) total += v;
  return total;
}

CountTables CountTables::build(int n_max) {
  require_range(n_max, 1, "count tables");
  CountTables t;
  t.n_max = n_max;
  for (int k = 0; k <= 2 * n_max + 3; ++k) t.fib.push_back(braidforge::fib(k));
  t.partitions = partitions_table(2 * n_max);
  t.d = d_table(n_max);
  t.s = s_table(n_max);
  t.c.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) t.c[static_cast<std::size_t>(n)] = c_row(n);
  return t;
}

}  // namespace braidforge
