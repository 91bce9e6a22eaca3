// Acceptance suite: one PASS/FAIL line per criterion. Takes the path of the
// braidforge executable as its only argument (needed by criterion 10).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidforge/counting.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/kernels.hpp"
#include "braidforge/planarity.hpp"
#include "braidforge/simple_braids.hpp"
#include "braidforge/simple_graph.hpp"
#include "braidforge/word_core.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

// Collects the first few mismatches of a criterion.
struct Log {
  std::vector<std::string> problems;
  std::vector<std::string> warnings;

  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 8) problems.push_back(what);
    if (!ok && problems.size() == 8) problems.push_back("...");
  }
};

std::string str(const BigInt& v) { return v.str(); }

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void positive_three_strand(Log& log) {
  const auto prefix = big({1, 2, 4, 7, 12, 20});
  for (int k = 0; k <= 8; ++k) {
    const auto brute = distinct_braids_of_length(3, k, Execution::parallel).size();
    log.expect(brute == count_positive_3(k), "k=" + std::to_string(k) + ": brute " + std::to_string(brute) +
                                                 " vs F_{k+3}-1 = " + str(count_positive_3(k)));
    log.expect(brute == oracle::distinct_braids(3, k), "k=" + std::to_string(k) + ": union-find oracle disagrees");
    if (k < 6) log.expect(brute == prefix[idx(k)], "k=" + std::to_string(k) + ": series prefix");
  }
}

void delta_free_three_strand(Log& log) {
  const auto delta = delta_word(3);
  const auto series = delta_free_3_series(9);
  const auto prefix = big({1, 2, 4, 6, 10, 16});
  bool printed_ever_differs = false;
  for (int k = 0; k <= 8; ++k) {
    std::size_t brute = 0;
    for (const auto& b : distinct_braids_of_length(3, k, Execution::parallel)) {
      brute += contains_factor(BraidWord(3, b), delta) ? 0 : 1;
    }
    const auto label = "k=" + std::to_string(k);
    log.expect(brute == series[idx(k)], label + ": brute " + std::to_string(brute) + " vs series " + str(series[idx(k)]));
    if (k < 6) log.expect(brute == prefix[idx(k)], label + ": series prefix");
    if (k >= 1) {
      log.expect(brute == delta_free_3_corrected(k), label + ": 2F_{k+1} mismatch");
      printed_ever_differs = printed_ever_differs || brute != delta_free_3_printed(k);
    }
  }
  log.expect(printed_ever_differs, "printed 2F_{k-1} was expected to disagree (erratum)");
}

void divisors(Log& log) {
  for (int n = 2; n <= 5; ++n) {
    auto blocks = enumerate_divisors(n, true);
    std::sort(blocks.begin(), blocks.end());
    log.expect(divisors_oracle(n) == blocks, "n=" + std::to_string(n) + ": oracle set differs from block forms");
  }
  for (int n = 2; n <= 8; ++n) {
    const auto poly = divisor_poly(n);
    std::vector<BigInt> profile(poly.coefficients().size(), 0);
    const auto all = enumerate_divisors(n);
    for (const auto& d : all) ++profile[d.length()];
    log.expect(profile == poly.coefficients(), "n=" + std::to_string(n) + ": length profile vs product polynomial");
    BigInt factorial = 1;
    for (int m = 2; m <= n; ++m) factorial *= m;
    log.expect(BigInt(all.size()) == factorial, "n=" + std::to_string(n) + ": |Div| != n!");
  }
  const auto d = d_table(10);
  for (int n = 1; n <= 10; ++n) {
    log.expect(d[idx(n)] == divisor_poly(n).coefficients(), "n=" + std::to_string(n) + ": d-recurrence vs polynomial");
    log.expect(is_symmetric(d[idx(n)]) && is_unimodal(d[idx(n)]), "n=" + std::to_string(n) + ": d-row not symmetric unimodal");
  }
}

void square_free(Log& log) {
  for (auto [n, max_len] : {std::pair{3, 3}, std::pair{4, 6}}) {
    std::set<Letters> divisors;
    for (const auto& d : enumerate_divisors(n)) divisors.insert(d.word().letters());
    for (int len = 0; len <= max_len; ++len) {
      for (const auto& w : enumerate_words(n, len)) {
        const bool is_divisor = divisors.contains(canonical_letters(w.letters()));
        log.expect(is_square_free(w) == is_divisor, "n=" + std::to_string(n) + " word " + to_string(w));
      }
    }
  }
}

void simple_counts(Log& log) {
  for (int n = 1; n <= 12; ++n) {
    log.expect(BigInt(enumerate_simple(n).size()) == fib(2 * n - 1), "n=" + std::to_string(n) + ": |SB_n| != F_{2n-1}");
  }
  const auto s = s_table(10);
  // Rows of the printed triangle.
  const std::vector<std::vector<BigInt>> triangle{big({1}), big({1, 1}), big({1, 2, 2}), big({1, 3, 5, 4}),
                                                  big({1, 4, 9, 12, 8})};
  for (int n = 1; n <= 5; ++n) log.expect(s[idx(n)] == triangle[idx(n - 1)], "row " + std::to_string(n) + " of the triangle");
  log.expect(s_table_three_term(10) == s, "the two recurrences disagree");
  for (int n = 1; n <= 10; ++n) {
    std::vector<BigInt> profile(idx(n), 0);
    for (const auto& f : enumerate_simple(n)) ++profile[f.length()];
    log.expect(profile == s[idx(n)], "n=" + std::to_string(n) + ": enumeration profile vs recurrence");
  }
  bool s2_printed_differs = false;
  for (int n = 2; n <= 10; ++n) {
    const auto& row = s[idx(n)];
    log.expect(s_closed_form(SClosedForm::last, n) == row[idx(n - 1)], "n=" + std::to_string(n) + ": s_{n,n-1} != 2^{n-2}");
    if (n >= 3) {
      log.expect(s_closed_form(SClosedForm::s2_corrected, n) == row[2], "n=" + std::to_string(n) + ": (n-2)(n+1)/2");
      s2_printed_differs = s2_printed_differs || s_closed_form(SClosedForm::s2_printed, n) != row[2];
    }
    if (n >= 4) log.expect(s_closed_form(SClosedForm::s3, n) == row[3], "n=" + std::to_string(n) + ": s3 form");
    if (n >= 5) log.expect(s_closed_form(SClosedForm::s4, n) == row[4], "n=" + std::to_string(n) + ": s4 form");
  }
  log.expect(s2_printed_differs, "printed s_{n,2} form was expected to disagree (erratum)");
}

void polynomiality(Log& log) {
  for (int i = 0; i <= 4; ++i) {
    const auto check = s_polynomiality_check(i, i + 1, i + 12);
    log.expect(check.passed, "i=" + std::to_string(i) + ": finite differences");
  }
}

void conjugacy(Log& log) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::set<std::vector<int>>> classes(idx(n));
    for (const auto& f : enumerate_simple(n)) classes[f.length()].insert(conjugacy_representative(f).parts());
    const auto c = c_row(n);
    for (int i = 0; i < n; ++i) {
      log.expect(BigInt(classes[idx(i)].size()) == c[idx(i)],
                 "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + std::to_string(classes[idx(i)].size()) +
                     " classes vs formula " + str(c[idx(i)]));
    }
  }
  std::size_t found = 0, total = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : enumerate_simple(n)) {
      ++total;
      if (find_conjugacy_witness(f, 6)) ++found;
      else log.warnings.push_back("no witness within length 6 for " + to_string(f.expand()) + " on " + std::to_string(n) + " strands");
    }
  }
  log.warnings.insert(log.warnings.begin(), "conjugacy witnesses found for " + std::to_string(found) + "/" + std::to_string(total));
}

void graph_structure(Log& log) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = build_graph(n);
    const auto label = "n=" + std::to_string(n);
    log.expect(BigInt(g.vertex_count()) == fib(2 * n - 1), label + ": vertex count");
    log.expect(BigInt(g.edge_count()) == edge_count_formula(n), label + ": edge count vs formula");
    log.expect(is_connected(g), label + ": not connected");
    log.expect(is_n_partite_by_levels(g), label + ": not n-partite by levels");
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
      log.expect(upward_degree(g, v) == n - 1 - g.level(v), label + ": upward degree at " + to_string(g.vertices()[idx(v)]));
    }
  }
}

void planarity(Log& log) {
  for (int n = 2; n <= 6; ++n) {
    const auto g = build_graph(n);
    const auto r = is_planar(g);
    log.expect(r.planar, "n=" + std::to_string(n) + ": expected planar");
    log.expect(r.planar && satisfies_euler(g.vertex_count(), g.edges(), r.embedding),
               "n=" + std::to_string(n) + ": embedding fails Euler validation");
  }
  for (int n = 7; n <= 8; ++n) {
    const auto g = build_graph(n);
    const auto r = is_planar(g);
    log.expect(!r.planar, "n=" + std::to_string(n) + ": expected non-planar");
    log.expect(verify_kuratowski_witness(g, r.kuratowski), "n=" + std::to_string(n) + ": witness is not a Kuratowski subdivision");
  }
  const auto g7 = build_graph(7);
  const auto k33 = verify_paper_k33(g7);
  for (const auto& m : k33.missing) log.expect(false, "figure edge missing: " + m);
  log.expect(k33.all_edges_present && verify_kuratowski_witness(g7, k33.witness_edges), "figure paths do not form a K_{3,3}");
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

void determinism(Log& log, const std::string& exe) {
  if (exe.empty()) {
    log.expect(false, "no braidforge executable given");
    return;
  }
  const auto command = "\"" + exe + "\" verify --scope all";
  int first_status = 0, second_status = 0;
  const auto first = capture(command, first_status);
  const auto second = capture(command, second_status);
  log.expect(first_status == 0 && second_status == 0, "verify exited with a nonzero status");
  log.expect(!first.empty(), "verify produced no output");
  log.expect(first == second, "reports differ between runs");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"three-strand braid count equals F_{k+3}-1 for k <= 8", positive_three_strand},
      {"delta-free three-strand count matches its series; 2F_{k-1} erratum confirmed", delta_free_three_strand},
      {"divisor oracle, length profile, n!, symmetric unimodal d-rows", divisors},
      {"square-free iff divisor, exhaustive on small words", square_free},
      {"simple braid counts, triangle, recurrences and closed forms", simple_counts},
      {"columns of the s-triangle are polynomials of degree i", polynomiality},
      {"conjugacy classes of simple braids counted by partitions", conjugacy},
      {"simple graph counts, connectivity, levels and degrees for n <= 8", graph_structure},
      {"simple graph planar exactly for n <= 6, with certificates", planarity},
      {"verify report is byte-identical across runs", [&](Log& log) { determinism(log, exe); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      log.problems.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = log.problems.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << ms
              << " ms)\n";
    for (const auto& w : log.warnings) std::cout << "       note: " << w << "\n";
    for (const auto& p : log.problems) std::cout << "       " << p << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
