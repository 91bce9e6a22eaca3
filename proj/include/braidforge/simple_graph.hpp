#pragma once

// The simple graph: vertices are the simple braids on n strands, with an
// edge beta -- beta x_i whenever both ends are simple.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/polynomial.hpp"

namespace braidforge {

using Edge = std::pair<int, int>;  // first < second

class LevelGraph {
 public:
  /// Validates: edge endpoints in range, no loops or duplicates, levels
  /// differ by exactly one across every edge.
  LevelGraph(int strands, std::vector<CanonicalBraid> vertices, std::vector<Edge> edges);

  int strands() const noexcept { return strands_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<CanonicalBraid>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int level(int v) const { return static_cast<int>(vertices_.at(static_cast<std::size_t>(v)).length()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int u, int v) const;
  /// Vertex id of a canonical word, if present.
  std::optional<int> find(const Letters& canonical_word) const;

 private:
  int strands_;
  std::vector<CanonicalBraid> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Vertices ordered by (level, lexicographic word). Throws std::logic_error
/// if two distinct extensions of one vertex land on the same neighbour.
LevelGraph build_graph(int n);

/// sum_{i=0}^{n-2} (n-1-i) s_{n,i}.
BigInt edge_count_formula(int n);

/// Breadth-first reachability from the unit braid covers everything.
bool is_connected(const LevelGraph& g);

/// Exactly n levels 0..n-1, each non-empty, and every edge joins adjacent
/// levels.
bool is_n_partite_by_levels(const LevelGraph& g);

/// Proper 2-colouring exists.
bool is_bipartite(const LevelGraph& g);

/// Vertex count per level.
std::vector<std::size_t> level_sizes(const LevelGraph& g);

/// Number of neighbours one level up.
int upward_degree(const LevelGraph& g, int v);

/// Every vertex and edge of `small` (on n strands) appears in `large` (on
/// n+1 strands), and `small`'s vertex set induces exactly `small`'s edges.
bool embeds_as_induced_subgraph(const LevelGraph& small, const LevelGraph& large);

/// One branch-to-branch path of the figure's K_{3,3}, as word labels
/// ("136" means x_1 x_3 x_6).
struct LabelledPath {
  std::vector<std::string> labels;
};

/// The nine paths of the K_{3,3} subdivision drawn for n = 7.
std::vector<LabelledPath> figure_k33_paths();

struct K33Check {
  bool all_edges_present = true;
  std::vector<std::string> missing;  // "a -- b" for each absent edge
  std::vector<Edge> witness_edges;   // union of the paths, as vertex ids
};

/// Checks the figure's paths edge by edge inside `g` (built for n = 7).
K33Check verify_paper_k33(const LevelGraph& g);

/// "dot" or "json"; throws std::invalid_argument otherwise.
void export_graph(const LevelGraph& g, std::string_view format, std::ostream& out);

}  // namespace braidforge
