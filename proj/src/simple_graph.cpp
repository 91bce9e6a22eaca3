#include "braidforge/simple_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "braidforge/counting.hpp"
#include "braidforge/kernels.hpp"
#include "braidforge/simple_braids.hpp"
#include "braidforge/word_core.hpp"

namespace braidforge {

LevelGraph::LevelGraph(int strands, std::vector<CanonicalBraid> vertices, std::vector<Edge> edges)
    : strands_(strands), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const auto n = static_cast<int>(vertices_.size());
  adjacency_.resize(vertices_.size());
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n || e.first == e.second) {
      throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") is a loop or out of range");
    }
    if (level(e.second) - level(e.first) != 1 && level(e.first) - level(e.second) != 1) {
      throw std::invalid_argument("edge " + to_string(vertices_[static_cast<std::size_t>(e.first)]) +
                                  " -- " + to_string(vertices_[static_cast<std::size_t>(e.second)]) +
                                  " does not join adjacent levels");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in level graph");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool LevelGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= static_cast<int>(vertices_.size()) || v >= static_cast<int>(vertices_.size())) {
    return false;
  }
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> LevelGraph::find(const Letters& canonical_word) const {
  // Vertices are sorted length-lex, which is exactly the order used here.
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), canonical_word,
                             [](const CanonicalBraid& b, const Letters& w) {
                               return length_lex_less(b.word().letters(), w);
                             });
  if (it == vertices_.end() || it->word().letters() != canonical_word) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

LevelGraph build_graph(int n) {
  if (n < 1 || n > 12) throw std::out_of_range("build_graph supports 1 <= n <= 12");

  std::vector<Letters> words;
  for (const auto& form : enumerate_simple(n)) words.push_back(form.expand().letters());
  std::sort(words.begin(), words.end(),
            [](const Letters& a, const Letters& b) { return length_lex_less(a, b); });
  if (canonicalize_batch(words, Execution::parallel) != words) {
    throw std::logic_error("simple block form is not length-lex minimal");
  }

  std::unordered_map<Letters, int, LettersHash> id;
  std::vector<CanonicalBraid> vertices;
  for (std::size_t v = 0; v < words.size(); ++v) {
    id.emplace(words[v], static_cast<int>(v));
    vertices.push_back(CanonicalBraid::from_canonical_word(BraidWord(n, words[v])));
  }

  // Every product beta * x_i, canonicalised in one batch.
  std::vector<Letters> products;
  products.reserve(words.size() * static_cast<std::size_t>(std::max(n - 1, 0)));
  for (const auto& w : words) {
    for (int g = 1; g <= n - 1; ++g) {
      products.push_back(w);
      products.back().push_back(static_cast<Generator>(g));
    }
  }
  const auto canon = canonicalize_batch(products, Execution::parallel);

  std::vector<Edge> edges;
  std::size_t p = 0;
  for (std::size_t v = 0; v < words.size(); ++v) {
    std::set<int> reached;
    for (int g = 1; g <= n - 1; ++g, ++p) {
      auto it = id.find(canon[p]);
      if (it == id.end()) continue;
      if (!reached.insert(it->second).second) {
        throw std::logic_error("distinct generators extend " + to_string(words[v]) +
                               " to the same simple braid");
      }
      edges.emplace_back(static_cast<int>(v), it->second);
    }
  }
  return LevelGraph(n, std::move(vertices), std::move(edges));
}

BigInt edge_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const auto rows = s_table(n);
  BigInt total = 0;
  for (int i = 0; i <= n - 2; ++i) total += (n - 1 - i) * rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  return total;
}

bool is_connected(const LevelGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == g.vertex_count();
}

std::vector<std::size_t> level_sizes(const LevelGraph& g) {
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto lvl = static_cast<std::size_t>(g.level(static_cast<int>(v)));
    if (sizes.size() <= lvl) sizes.resize(lvl + 1, 0);
    ++sizes[lvl];
  }
  return sizes;
}

bool is_n_partite_by_levels(const LevelGraph& g) {
  const auto sizes = level_sizes(g);
  if (sizes.size() != static_cast<std::size_t>(g.strands())) return false;
  if (std::find(sizes.begin(), sizes.end(), 0u) != sizes.end()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return std::abs(g.level(e.first) - g.level(e.second)) == 1;
  });
}

bool is_bipartite(const LevelGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

int upward_degree(const LevelGraph& g, int v) {
  const int lvl = g.level(v);
  const auto& list = g.neighbors(v);
  return static_cast<int>(std::count_if(list.begin(), list.end(),
                                        [&](int u) { return g.level(u) == lvl + 1; }));
}

bool embeds_as_induced_subgraph(const LevelGraph& small, const LevelGraph& large) {
  if (large.strands() != small.strands() + 1) return false;
  std::vector<int> image;
  for (const auto& b : small.vertices()) {
    auto id = large.find(b.word().letters());
    if (!id) return false;
    image.push_back(*id);
  }
  std::size_t induced = 0;
  for (std::size_t u = 0; u < image.size(); ++u) {
    for (std::size_t v = u + 1; v < image.size(); ++v) {
      const bool in_large = large.has_edge(image[u], image[v]);
      if (in_large != small.has_edge(static_cast<int>(u), static_cast<int>(v))) return false;
      induced += in_large ? 1 : 0;
    }
  }
  return induced == small.edge_count();
}

std::vector<LabelledPath> figure_k33_paths() {
  // Branch vertices {e, 136, 26} on one side and {1, 3, 6} on the other.
  return {
      {{"e", "1"}},
      {{"e", "3"}},
      {{"e", "6"}},
      {{"136", "13", "1"}},
      {{"136", "36", "3"}},
      {{"136", "16", "6"}},
      {{"26", "246", "24", "4", "14", "1"}},
      {{"26", "2", "25", "5", "35", "3"}},
      {{"26", "6"}},
  };
}

namespace {

Letters letters_from_label(const std::string& label) {
  Letters w;
  if (label == "e") return w;
  for (char c : label) w.push_back(static_cast<Generator>(c - '0'));
  return w;
}

}  // namespace

K33Check verify_paper_k33(const LevelGraph& g) {
  K33Check out;
  for (const auto& path : figure_k33_paths()) {
    for (std::size_t i = 0; i + 1 < path.labels.size(); ++i) {
      const auto& a = path.labels[i];
      const auto& b = path.labels[i + 1];
      // Labels are products of commuting or increasing generators; their
      // canonical form is found through the closure.
      auto ua = g.find(canonical_letters(letters_from_label(a)));
      auto ub = g.find(canonical_letters(letters_from_label(b)));
      if (!ua || !ub || !g.has_edge(*ua, *ub)) {
        out.all_edges_present = false;
        out.missing.push_back(a + " -- " + b);
        continue;
      }
      out.witness_edges.emplace_back(std::min(*ua, *ub), std::max(*ua, *ub));
    }
  }
  std::sort(out.witness_edges.begin(), out.witness_edges.end());
  return out;
}

void export_graph(const LevelGraph& g, std::string_view format, std::ostream& out) {
  if (format == "dot") {
    out << "graph simple_braids_" << g.strands() << " {\n";
    const auto sizes = level_sizes(g);
    std::size_t v = 0;
    for (std::size_t lvl = 0; lvl < sizes.size(); ++lvl) {
      out << "  { rank=same;";
      for (std::size_t i = 0; i < sizes[lvl]; ++i, ++v) {
        out << " \"" << to_string(g.vertices()[v]) << "\";";
      }
      out << " }\n";
    }
    for (const auto& [a, b] : g.edges()) {
      out << "  \"" << to_string(g.vertices()[static_cast<std::size_t>(a)]) << "\" -- \""
          << to_string(g.vertices()[static_cast<std::size_t>(b)]) << "\";\n";
    }
    out << "}\n";
    return;
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = g.strands();
    doc["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      doc["vertices"].push_back({{"word", to_string(g.vertices()[v])},
                                 {"level", g.level(static_cast<int>(v))}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) doc["edges"].push_back({a, b});
    out << doc.dump(2) << "\n";
    return;
  }
  throw std::invalid_argument("unsupported graph format '" + std::string(format) +
                              "' (expected dot or json)");
}

}  // namespace braidforge
