#include <doctest.h>

#include <map>
#include <set>

#include "braidforge/simple_braids.hpp"
#include "braidforge/word_core.hpp"
#include "oracles.hpp"

using namespace braidforge;

TEST_CASE("simple block forms reject overlapping ranges") {
  CHECK_THROWS_AS(SimpleBraidForm(4, {{2, 1}, {3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleBraidForm(4, {{2, 2}, {2, 2}}), std::invalid_argument);
  CHECK_NOTHROW(SimpleBraidForm(4, {{1, 1}, {3, 2}}));
}

TEST_CASE("enumerate_simple") {
  const auto two = enumerate_simple(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].expand().empty());
  CHECK(two[1].expand().letters() == Letters{1});

  std::set<Letters> three;
  for (const auto& f : enumerate_simple(3)) three.insert(f.expand().letters());
  CHECK(three == std::set<Letters>{{}, {1}, {1, 2}, {2}, {2, 1}});

  CHECK(enumerate_simple(1).size() == 1);
  CHECK(enumerate_simple(5).size() == 34);
  for (int n = 1; n <= 12; ++n) CHECK(enumerate_simple(n).size() == oracle::fib(2 * n - 1));
}

TEST_CASE("simple forms are canonical and pairwise distinct") {
  for (int n = 2; n <= 7; ++n) {
    std::set<Letters> seen;
    for (const auto& f : enumerate_simple(n)) {
      const auto w = f.expand();
      REQUIRE(canonical_letters(w.letters()) == w.letters());
      REQUIRE(seen.insert(w.letters()).second);
    }
  }
}

TEST_CASE("is_simple") {
  CHECK_FALSE(is_simple(BraidWord(3, {1, 2, 1})));
  CHECK(is_simple(BraidWord(4, {2, 1, 3})));
  CHECK_FALSE(is_simple(BraidWord(3, {1, 1})));
  CHECK(is_simple(BraidWord(3)));
}

TEST_CASE("brute-force simple braids match the block enumeration (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    std::set<Letters> brute;
    for (int len = 0; len <= n - 1; ++len) {
      for (const auto& w : enumerate_words(n, len)) {
        if (is_simple(w)) brute.insert(canonical_letters(w.letters()));
      }
    }
    std::set<Letters> blocks;
    for (const auto& f : enumerate_simple(n)) blocks.insert(f.expand().letters());
    CHECK(brute == blocks);
  }
}

TEST_CASE("derived s-row for n = 6 by brute force") {
  std::vector<int> row(6, 0);
  std::set<Letters> seen;
  for (int len = 0; len <= 5; ++len) {
    for (const auto& w : enumerate_words(6, len)) {
      if (is_simple(w) && seen.insert(canonical_letters(w.letters())).second) ++row[static_cast<std::size_t>(len)];
    }
  }
  CHECK(row == std::vector<int>{1, 5, 14, 25, 28, 16});
}

TEST_CASE("conjugacy_representative") {
  CHECK(conjugacy_representative(SimpleBraidForm(4, {})).parts().empty());
  CHECK(conjugacy_representative(SimpleBraidForm(3, {{1, 1}})).parts() == std::vector<int>{2});
  CHECK(conjugacy_representative(SimpleBraidForm(4, {{2, 1}})).parts() == std::vector<int>{3});
  for (int n = 1; n <= 8; ++n) {
    for (const auto& f : enumerate_simple(n)) {
      const auto a = conjugacy_representative(f);
      REQUIRE(static_cast<std::size_t>(a.braid_length()) == f.length());
    }
  }
}

TEST_CASE("beta_A") {
  CHECK(beta_A(ClassPartition(3, {2}), 3).expand().letters() == Letters{1});
  CHECK(beta_A(ClassPartition(4, {2, 2}), 4).expand().letters() == Letters{1, 3});
  CHECK(beta_A(ClassPartition(4, {3}), 4).expand().letters() == Letters{1, 2});
  CHECK_THROWS_AS(ClassPartition(4, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ClassPartition(6, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(beta_A(ClassPartition(6, {3, 3}), 5), std::invalid_argument);
  for (int n = 1; n <= 9; ++n) {
    for (const auto& a : enumerate_classes(n)) CHECK(conjugacy_representative(beta_A(a, n)) == a);
  }
}

TEST_CASE("enumerate_classes") {
  std::vector<std::string> labels;
  for (const auto& a : enumerate_classes(4)) labels.push_back(to_string(a));
  CHECK(labels == std::vector<std::string>{"()", "(2)", "(3)", "(2,2)", "(4)"});
}

TEST_CASE("cycle type separates classes exactly like the permutation projection") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::vector<int>, std::set<std::vector<int>>> by_type;
    for (const auto& f : enumerate_simple(n)) {
      const auto w = f.expand();
      oracle::Word ow(w.letters().begin(), w.letters().end());
      // Cycle type recomputed from the oracle permutation.
      auto image = oracle::permutation(n, ow);
      std::vector<int> lengths;
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int p = 0; p < n; ++p) {
        int len = 0;
        for (int q = p; !seen[static_cast<std::size_t>(q)]; q = image[static_cast<std::size_t>(q)] - 1) {
          seen[static_cast<std::size_t>(q)] = true;
          ++len;
        }
        if (len >= 2) lengths.push_back(len);
      }
      std::sort(lengths.rbegin(), lengths.rend());
      CHECK(conjugacy_representative(f).parts() == lengths);
    }
  }
}

TEST_CASE("bounded conjugacy witnesses exist for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : enumerate_simple(n)) {
      const auto alpha = find_conjugacy_witness(f, 6);
      REQUIRE(alpha.has_value());
      const auto target = beta_A(conjugacy_representative(f), n).expand();
      CHECK(braids_equal(f.expand() * *alpha, *alpha * target));
    }
  }
  // x2 ~ x1 on three strands via alpha = x1 x2.
  const auto alpha = find_conjugacy_witness(SimpleBraidForm(3, {{2, 2}}), 2);
  REQUIRE(alpha.has_value());
  CHECK(alpha->letters() == Letters{1, 2});
}
