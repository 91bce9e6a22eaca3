// braidforge: command-line front end for counting tables, enumerations,
// graph export and the claim verification suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidforge/counting.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/planarity.hpp"
#include "braidforge/simple_braids.hpp"
#include "braidforge/simple_graph.hpp"
#include "braidforge/verify.hpp"
#include "braidforge/word_core.hpp"

using namespace braidforge;
using json = nlohmann::ordered_json;

namespace {

struct Row {
  std::vector<std::string> cells;
};

// Integers that fit are emitted as JSON numbers, larger ones as strings.
json number(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

const std::set<std::string> kTextColumns{"word", "partition", "representative"};

void emit_table(std::ostream& out, const std::string& format, const std::vector<std::string>& header,
                const std::vector<Row>& rows, const std::string& json_key) {
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.cells.size(); ++i) {
        const auto& c = r.cells[i];
        const bool quote = c.find(',') != std::string::npos;
        out << (i ? "," : "") << (quote ? "\"" + c + "\"" : c);
      }
      out << "\n";
    }
    return;
  }
  json doc = json::array();
  for (const auto& r : rows) {
    json item;
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto& c = r.cells[i];
      // Words such as "1" stay strings; count columns become numbers.
      const bool numeric = !kTextColumns.contains(header[i]);
      item[header[i]] = numeric ? number(BigInt(c)) : json(c);
    }
    doc.push_back(item);
  }
  if (!json_key.empty()) {
    json wrapped;
    wrapped[json_key] = doc;
    out << wrapped.dump(2) << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw std::invalid_argument("unsupported format '" + format + "'");
}

std::vector<Row> count_rows(const std::string& family, std::optional<int> n, std::optional<int> k) {
  std::vector<Row> rows;
  auto push = [&](int nn, int i, const BigInt& v) {
    rows.push_back({{std::to_string(nn), std::to_string(i), v.str()}});
  };
  auto need_n = [&]() -> int {
    if (!n) throw std::invalid_argument("--n is required for family " + family);
    return *n;
  };
  if (family == "b" || family == "bplus") {
    if (need_n() != 3) throw std::invalid_argument("family " + family + " is defined for --n 3 only");
    const int from = k ? *k : 0;
    const int to = k ? *k : 10;
    if (from < 0) throw std::invalid_argument("--k must be >= 0");
    for (int i = from; i <= to; ++i) push(3, i, family == "b" ? count_positive_3(i) : count_delta_free_3(i));
  } else if (family == "d" || family == "s" || family == "c") {
    const int nn = need_n();
    if (nn < 1 || nn > 40) throw std::invalid_argument("--n out of range 1..40");
    std::vector<BigInt> row;
    if (family == "d") row = divisor_poly(nn).coefficients();
    if (family == "s") row = s_table(nn)[static_cast<std::size_t>(nn)];
    if (family == "c") row = c_row(nn);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (k && *k != static_cast<int>(i)) continue;
      push(nn, static_cast<int>(i), row[i]);
    }
    if (k && rows.empty()) throw std::invalid_argument("--k outside row " + std::to_string(nn));
  } else if (family == "fib") {
    if (!k) throw std::invalid_argument("--k is required for family fib");
    rows.push_back({{std::to_string(*k), fib(*k).str()}});
  } else if (family == "partitions") {
    if (!n || !k) throw std::invalid_argument("--n (m) and --k are required for family partitions");
    rows.push_back({{std::to_string(*n), std::to_string(*k), partitions(*n, *k).str()}});
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return rows;
}

std::vector<std::string> count_header(const std::string& family) {
  if (family == "fib") return {"k", "value"};
  if (family == "partitions") return {"m", "k", "value"};
  return {"n", "i", "value"};
}

std::vector<Row> word_rows(const std::vector<CanonicalBraid>& braids) {
  std::vector<Row> rows;
  for (const auto& b : braids) rows.push_back({{to_string(b), std::to_string(b.length())}});
  return rows;
}

std::vector<CanonicalBraid> simple_braids_sorted(int n) {
  std::vector<CanonicalBraid> out;
  for (const auto& f : enumerate_simple(n)) out.push_back(CanonicalBraid::from_canonical_word(f.expand()));
  // Same order as the graph's vertex ids.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Row> class_rows(int n) {
  std::vector<Row> rows;
  for (const auto& a : enumerate_classes(n)) {
    rows.push_back({{to_string(a), std::to_string(a.braid_length()), to_string(beta_A(a, n).expand())}});
  }
  return rows;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

json check_report(const LevelGraph& g, const std::string& property) {
  json r;
  r["property"] = property;
  const int n = g.strands();
  if (property == "planarity") {
    const auto result = is_planar(g);
    r["claimed"] = n <= 6 ? "planar" : "nonplanar";
    r["computed"] = result.planar ? "planar" : "nonplanar";
    if (result.planar) {
      r["witness"] = {{"kind", "embedding"},
                      {"faces", count_faces(result.embedding)},
                      {"euler", satisfies_euler(g.vertex_count(), g.edges(), result.embedding)}};
    } else {
      json edges = json::array();
      for (const auto& [a, b] : result.kuratowski) {
        edges.push_back({to_string(g.vertices()[static_cast<std::size_t>(a)]),
                         to_string(g.vertices()[static_cast<std::size_t>(b)])});
      }
      r["witness"] = {{"kind", to_string(classify_subdivision(result.kuratowski))},
                      {"verified", verify_kuratowski_witness(g, result.kuratowski)},
                      {"edges", edges}};
    }
  } else if (property == "partite") {
    json sizes = json::array();
    for (auto s : level_sizes(g)) sizes.push_back(s);
    r["claimed"] = std::to_string(n) + "-partite by length";
    r["computed"] = is_n_partite_by_levels(g) ? r["claimed"] : json("not partite by levels");
    r["witness"] = {{"level_sizes", sizes}};
  } else if (property == "connected") {
    r["claimed"] = "connected";
    r["computed"] = is_connected(g) ? "connected" : "disconnected";
  } else if (property == "k33") {
    if (n != 7) throw std::invalid_argument("--check k33 applies to --n 7");
    const auto check = verify_paper_k33(g);
    r["claimed"] = "K3,3 subdivision with branch vertices e,1,3,6,26,136";
    r["computed"] = check.all_edges_present ? to_string(classify_subdivision(check.witness_edges))
                                            : "missing edges";
    json missing = json::array();
    for (const auto& m : check.missing) missing.push_back(m);
    r["witness"] = {{"path_edges", check.witness_edges.size()}, {"missing", missing}};
  } else {
    throw std::invalid_argument("unknown check '" + property + "'");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive braid monoid toolkit: canonical forms, counting, simple graph"};
  app.require_subcommand(1);

  std::size_t max_class_size = ClosureLimits{}.max_class_size;
  app.add_option("--max-class-size", max_class_size, "Equivalence-class closure cap")->capture_default_str();

  std::optional<int> n, k;
  // One format per subcommand: their defaults differ, and CLI11 writes the
  // default into the bound variable at setup time.
  std::string count_format, enumerate_format, divisors_format, simple_format, graph_format;
  std::string out_path, family, kind, check, scope = "all";
  int n_max = 8, k_max = 8;
  bool classes = false;

  auto* canon = app.add_subcommand("canon", "Canonical form of a word such as 1,2,1");
  std::string word_text;
  canon->add_option("word", word_text, "Word, comma separated; 'e' for the unit")->required();
  canon->add_option("--n", n, "Strand count")->required();

  auto* count = app.add_subcommand("count", "Counting sequences");
  count->add_option("--family", family, "b, bplus, d, s, c, fib or partitions")->required();
  count->add_option("--n", n, "Strand count (m for partitions)");
  count->add_option("--k", k, "Length / index");
  count->add_option("--format", count_format, "csv or json")->default_val("csv");

  auto* enumerate = app.add_subcommand("enumerate", "Deterministic listings");
  enumerate->add_option("kind", kind, "simple, divisors, classes or words")->required();
  enumerate->add_option("--n", n, "Strand count")->required();
  enumerate->add_option("--k", k, "Word length (words only)");
  enumerate->add_option("--format", enumerate_format, "csv or json")->default_val("csv");

  auto* divisors = app.add_subcommand("divisors", "Divisors of the Garside element");
  divisors->add_option("--n", n, "Strand count")->required();
  divisors->add_option("--format", divisors_format, "json or csv")->default_val("json");

  auto* simple = app.add_subcommand("simple", "Simple braids or their conjugacy classes");
  simple->add_option("--n", n, "Strand count")->required();
  simple->add_flag("--classes", classes, "List class partitions instead of braids");
  simple->add_option("--format", simple_format, "json or csv")->default_val("json");

  auto* graph = app.add_subcommand("graph", "Build and export the simple graph");
  graph->add_option("--n", n, "Strand count")->required();
  graph->add_option("--out", out_path, "Output file for the graph ('-' for stdout)");
  graph->add_option("--format", graph_format, "dot or json")->default_val("dot");
  graph->add_option("--check", check, "planarity, partite, connected or k33");

  auto* verify = app.add_subcommand("verify", "Re-derive every claim and report");
  verify->add_option("--scope", scope, "all, counting, garside or graph")->default_val("all");
  verify->add_option("--nmax", n_max, "Largest strand count")->default_val(8);
  verify->add_option("--kmax", k_max, "Largest word length for brute force")->default_val(8);
  verify->add_option("--out", out_path, "Write the report to a file");

  for (auto* sub : {canon, count, enumerate, divisors, simple, graph, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const ClosureLimits limits{max_class_size};
  try {
    if (canon->parsed()) {
      const auto w = parse_word(*n, word_text);
      std::cout << to_string(canonical_form(w, limits)) << "\n";
      return 0;
    }
    if (count->parsed()) {
      require_format(count_format, {"csv", "json"});
      emit_table(std::cout, count_format, count_header(family), count_rows(family, n, k), "");
      return 0;
    }
    if (enumerate->parsed()) {
      require_format(enumerate_format, {"csv", "json"});
      if (kind == "simple") {
        emit_table(std::cout, enumerate_format, {"word", "length"}, word_rows(simple_braids_sorted(*n)), "");
      } else if (kind == "divisors") {
        emit_table(std::cout, enumerate_format, {"word", "length"}, word_rows(enumerate_divisors(*n)), "");
      } else if (kind == "classes") {
        emit_table(std::cout, enumerate_format, {"partition", "length", "representative"}, class_rows(*n), "");
      } else if (kind == "words") {
        if (!k) throw std::invalid_argument("enumerate words needs --k");
        std::vector<Row> rows;
        for (const auto& w : enumerate_words(*n, *k, 1'000'000)) rows.push_back({{to_string(w)}});
        emit_table(std::cout, enumerate_format, {"word"}, rows, "");
      } else {
        throw std::invalid_argument("unknown enumeration '" + kind + "'");
      }
      return 0;
    }
    if (divisors->parsed()) {
      require_format(divisors_format, {"csv", "json"});
      emit_table(std::cout, divisors_format, {"word", "length"}, word_rows(enumerate_divisors(*n)), "");
      return 0;
    }
    if (simple->parsed()) {
      require_format(simple_format, {"csv", "json"});
      if (classes) {
        emit_table(std::cout, simple_format, {"partition", "length", "representative"}, class_rows(*n), "");
      } else {
        emit_table(std::cout, simple_format, {"word", "length"}, word_rows(simple_braids_sorted(*n)), "");
      }
      return 0;
    }
    if (graph->parsed()) {
      require_format(graph_format, {"dot", "json"});
      const auto g = build_graph(*n);
      if (!out_path.empty() || check.empty()) {
        std::ofstream file;
        export_graph(g, graph_format, open_output(out_path, file));
      }
      if (!check.empty()) std::cout << check_report(g, check).dump(2) << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const auto report = run_verification({parse_scope(scope), n_max, k_max, limits});
      std::ofstream file;
      open_output(out_path, file) << to_json(report);
      return report.ok() ? 0 : 1;
    }
  } catch (const ClassSizeExceeded& e) {
    std::cerr << "braidforge: " << e.what() << " (raise --max-class-size)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "braidforge: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
