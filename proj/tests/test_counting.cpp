#include <doctest.h>

#include <set>

#include "braidforge/counting.hpp"
#include "braidforge/kernels.hpp"
#include "braidforge/simple_braids.hpp"
#include "braidforge/word_core.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("fib") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(7) == 13);
  for (int k = 0; k <= 90; ++k) REQUIRE(fib(k) == oracle::fib(k));
  CHECK(fib(200) == fib(199) + fib(198));
}

TEST_CASE("three-strand positive braids") {
  CHECK(count_positive_3(0) == 1);
  CHECK(count_positive_3(3) == 7);
  CHECK(count_positive_3(8) == 88);
  const auto series = positive_3_series(20);
  for (int k = 0; k < 20; ++k) CHECK(series[static_cast<std::size_t>(k)] == count_positive_3(k));
  // Independent count by union-find over all words.
  for (int k = 0; k <= 10; ++k) CHECK(count_positive_3(k) == oracle::distinct_braids(3, k));
}

TEST_CASE("delta-free three-strand braids") {
  CHECK(count_delta_free_3(0) == 1);
  CHECK(count_delta_free_3(3) == 6);
  CHECK(count_delta_free_3(5) == 16);
  CHECK(count_delta_free_3(6) == 26);
  const auto series = delta_free_3_series(15);
  for (int k = 0; k < 15; ++k) CHECK(series[static_cast<std::size_t>(k)] == count_delta_free_3(k));
  for (int k = 1; k < 15; ++k) CHECK(delta_free_3_corrected(k) == count_delta_free_3(k));
  // The printed 2F_{k-1} disagrees with the series for k >= 2.
  CHECK(delta_free_3_printed(3) == 2);
  CHECK(delta_free_3_printed(3) != count_delta_free_3(3));
  // For k >= 3, the count equals braids of length k minus those of length k-3.
  for (int k = 3; k <= 12; ++k) CHECK(count_delta_free_3(k) == count_positive_3(k) - count_positive_3(k - 3));
}

TEST_CASE("divisor polynomial") {
  CHECK(divisor_poly(2) == IntegerPolynomial{1, 1});
  CHECK(divisor_poly(3) == IntegerPolynomial{1, 2, 2, 1});
  CHECK(divisor_poly(4).evaluate(1) == 24);
  for (int n = 2; n <= 9; ++n) {
    const auto expected = oracle::divisor_profile(n);
    const auto c = divisor_poly(n).coefficients();
    REQUIRE(c.size() == expected.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == expected[i]);
  }
}

TEST_CASE("d-table recurrence") {
  const auto d = d_table(10);
  CHECK(d[3][1] == 2);
  CHECK(d[4][3] == 6);
  CHECK(d[4][2] == 5);
  for (int n = 1; n <= 10; ++n) {
    CHECK(d[static_cast<std::size_t>(n)] == divisor_poly(n).coefficients());
    CHECK(is_symmetric(d[static_cast<std::size_t>(n)]));
    CHECK(is_unimodal(d[static_cast<std::size_t>(n)]));
  }
  CHECK_FALSE(is_symmetric(big({1, 2})));
  CHECK_FALSE(is_unimodal(big({2, 1, 2})));
}

TEST_CASE("s-table") {
  const auto s = s_table(12);
  CHECK(s[1] == big({1}));
  CHECK(s[2] == big({1, 1}));
  CHECK(s[4] == big({1, 3, 5, 4}));
  CHECK(s[5] == big({1, 4, 9, 12, 8}));
  CHECK(s[6] == big({1, 5, 14, 25, 28, 16}));
  CHECK(s_table_three_term(12) == s);
  for (int n = 1; n <= 12; ++n) CHECK(row_sum(s[static_cast<std::size_t>(n)]) == fib(2 * n - 1));
}

TEST_CASE("s-table against brute-force canonical counts") {
  // A braid is simple when some representative repeats no generator; count
  // those among all distinct braids of each length.
  const auto s = s_table(5);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < n; ++i) {
      std::size_t simple = 0;
      for (const auto& b : distinct_braids_of_length(n, i, Execution::serial)) {
        bool found = false;
        for (const auto& w : closure_of(b)) {
          std::set<int> letters(w.begin(), w.end());
          found = found || letters.size() == w.size();
        }
        simple += found ? 1 : 0;
      }
      CHECK(s[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] == simple);
    }
  }
}

TEST_CASE("s-table matches the length profile of enumerate_simple") {
  const auto s = s_table(10);
  for (int n = 1; n <= 10; ++n) {
    std::vector<BigInt> profile(static_cast<std::size_t>(n), 0);
    for (const auto& f : enumerate_simple(n)) ++profile[f.length()];
    CHECK(profile == s[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("c-rows count distinct class representatives per length") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::set<std::vector<int>>> classes(static_cast<std::size_t>(n));
    for (const auto& f : enumerate_simple(n)) classes[f.length()].insert(conjugacy_representative(f).parts());
    std::vector<BigInt> counts;
    for (const auto& c : classes) counts.emplace_back(c.size());
    CHECK(counts == c_row(n));
  }
}

TEST_CASE("closed forms") {
  CHECK(s_closed_form(SClosedForm::s3, 5) == 12);
  CHECK(s_closed_form(SClosedForm::s4, 6) == 28);
  CHECK(s_closed_form(SClosedForm::last, 7) == 32);
  CHECK(s_closed_form(SClosedForm::s2_printed, 5) == 14);
  CHECK(s_closed_form(SClosedForm::s2_corrected, 5) == 9);
  CHECK_THROWS_AS(s_closed_form(SClosedForm::s4, 4), std::out_of_range);
  CHECK_THROWS_AS(s_closed_form(SClosedForm::last, 1), std::out_of_range);
  const auto s = s_table(20);
  for (int n = 3; n <= 20; ++n) CHECK(s_closed_form(SClosedForm::s2_corrected, n) == s[static_cast<std::size_t>(n)][2]);
  for (int n = 4; n <= 20; ++n) CHECK(s_closed_form(SClosedForm::s3, n) == s[static_cast<std::size_t>(n)][3]);
  for (int n = 5; n <= 20; ++n) CHECK(s_closed_form(SClosedForm::s4, n) == s[static_cast<std::size_t>(n)][4]);
  for (int n = 2; n <= 20; ++n) CHECK(s_closed_form(SClosedForm::last, n) == s[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("polynomiality of columns") {
  for (int i = 0; i <= 5; ++i) {
    const auto check = s_polynomiality_check(i, i + 1, i + 12);
    CHECK(check.passed);
    CHECK(check.degree == i);
  }
  // Cross-check differences with the oracle helper.
  const auto s = s_table(20);
  std::vector<long long> column;
  for (int n = 4; n <= 20; ++n) column.push_back(static_cast<long long>(s[static_cast<std::size_t>(n)][3]));
  for (auto v : oracle::differences(column, 3)) CHECK(v == 1);
  for (auto v : oracle::differences(column, 4)) CHECK(v == 0);
}

TEST_CASE("partitions") {
  CHECK(partitions(4, 2) == 2);
  CHECK(partitions(0, 0) == 1);
  CHECK(partitions(5, 0) == 0);
  CHECK(partitions(3, 5) == 0);
  const auto table = partitions_table(30);
  for (int m = 0; m <= 30; ++m) {
    for (int k = 0; k <= m; ++k) {
      if (m > 0 && k == 0) continue;
      REQUIRE(table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] == oracle::partitions(m, k));
    }
  }
  CHECK(partition_shift_identity_holds(40));
}

TEST_CASE("conjugacy class rows") {
  CHECK(c_row(4) == big({1, 1, 2, 1}));
  CHECK(c_row(6)[3] == 3);
  CHECK(c_row(8) == big({1, 1, 2, 3, 5, 5, 4, 1}));
  for (int n = 1; n <= 12; ++n) CHECK(c_row(n).size() == static_cast<std::size_t>(n));
}

TEST_CASE("CountTables") {
  const auto t = CountTables::build(10);
  CHECK(t.n_max == 10);
  CHECK(t.fib[23] == fib(23));
  CHECK(t.s == s_table(10));
  CHECK(t.d == d_table(10));
  CHECK(t.c[8] == c_row(8));
}
