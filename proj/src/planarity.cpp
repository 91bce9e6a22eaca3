#include "braidforge/planarity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace braidforge {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::vector<std::vector<int>> adjacency(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

// Labels connected components; returns the component id per vertex.
std::vector<int> components(const std::vector<std::vector<int>>& adj, int& count) {
  std::vector<int> comp(adj.size(), -1);
  count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = count;
          queue.push_back(v);
        }
      }
    }
    ++count;
  }
  return comp;
}

// Traces face orbits of the rotation; faces[c] counts orbits in component c.
std::vector<std::size_t> faces_per_component(const RotationSystem& rotation,
                                             const std::vector<int>& comp, int comp_count) {
  std::vector<std::size_t> faces(static_cast<std::size_t>(comp_count), 0);
  std::set<std::pair<int, int>> used;
  for (std::size_t u = 0; u < rotation.size(); ++u) {
    for (int v : rotation[u]) {
      std::pair<int, int> dart{static_cast<int>(u), v};
      if (used.contains(dart)) continue;
      ++faces[static_cast<std::size_t>(comp[u])];
      while (used.insert(dart).second) {
        const auto& around = rotation[static_cast<std::size_t>(dart.second)];
        auto it = std::find(around.begin(), around.end(), dart.first);
        ++it;
        if (it == around.end()) it = around.begin();
        dart = {dart.second, *it};
      }
    }
  }
  for (auto& f : faces) f = std::max<std::size_t>(f, 1);
  return faces;
}

bool boost_planar(std::size_t vertex_count, std::span<const Edge> edges) {
  BoostGraph graph(vertex_count);
  for (const auto& [u, v] : edges) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), graph);
  return boost::boyer_myrvold_planarity_test(graph);
}

// The library's obstruction can carry pendant paths. Dropping every edge whose
// removal keeps the set non-planar leaves an edge-minimal non-planar graph,
// which is exactly a K_5 or K_{3,3} subdivision.
std::vector<Edge> minimize_obstruction(std::size_t vertex_count, std::vector<Edge> edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    std::vector<Edge> without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_planar(vertex_count, without)) edges = std::move(without);
  }
  return edges;
}

}  // namespace

PlanarityResult test_planarity(std::size_t vertex_count, std::span<const Edge> edges) {
  BoostGraph graph(vertex_count);
  int next_index = 0;
  for (const auto& [u, v] : edges) {
    auto [e, added] = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), graph);
    if (added) boost::put(boost::edge_index, graph, e, next_index++);
  }

  std::vector<std::vector<BoostEdge>> embedding(vertex_count);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = graph,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, graph)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityResult out;
  out.planar = planar;
  if (planar) {
    out.embedding.resize(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      for (const auto& e : embedding[v]) {
        const auto s = boost::source(e, graph);
        const auto t = boost::target(e, graph);
        out.embedding[v].push_back(static_cast<int>(s == v ? t : s));
      }
    }
  } else {
    for (const auto& e : kuratowski) {
      int a = static_cast<int>(boost::source(e, graph));
      int b = static_cast<int>(boost::target(e, graph));
      out.kuratowski.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.kuratowski.begin(), out.kuratowski.end());
    out.kuratowski.erase(std::unique(out.kuratowski.begin(), out.kuratowski.end()),
                         out.kuratowski.end());
    out.kuratowski = minimize_obstruction(vertex_count, std::move(out.kuratowski));
  }
  return out;
}

PlanarityResult is_planar(const LevelGraph& g) {
  return test_planarity(g.vertex_count(), g.edges());
}

std::size_t count_faces(const RotationSystem& rotation) {
  std::vector<std::vector<int>> adj(rotation.begin(), rotation.end());
  int comp_count = 0;
  const auto comp = components(adj, comp_count);
  const auto faces = faces_per_component(rotation, comp, comp_count);
  std::size_t total = 0;
  for (auto f : faces) total += f;
  return total;
}

bool satisfies_euler(std::size_t vertex_count, std::span<const Edge> edges,
                     const RotationSystem& rotation) {
  if (rotation.size() != vertex_count) return false;
  auto adj = adjacency(vertex_count, edges);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto expected = adj[v];
    auto listed = rotation[v];
    std::sort(expected.begin(), expected.end());
    std::sort(listed.begin(), listed.end());
    if (expected != listed) return false;
  }
  int comp_count = 0;
  const auto comp = components(adj, comp_count);
  const auto faces = faces_per_component(rotation, comp, comp_count);
  std::vector<long long> v_count(static_cast<std::size_t>(comp_count), 0);
  std::vector<long long> e_count(static_cast<std::size_t>(comp_count), 0);
  for (std::size_t v = 0; v < vertex_count; ++v) ++v_count[static_cast<std::size_t>(comp[v])];
  for (const auto& [u, v] : edges) ++e_count[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])];
  for (int c = 0; c < comp_count; ++c) {
    const auto i = static_cast<std::size_t>(c);
    if (v_count[i] - e_count[i] + static_cast<long long>(faces[i]) != 2) return false;
  }
  return true;
}

KuratowskiKind classify_subdivision(std::span<const Edge> witness) {
  std::map<int, std::vector<int>> adj;
  std::set<Edge> edge_set;
  for (auto [u, v] : witness) {
    if (u == v) return KuratowskiKind::none;
    if (u > v) std::swap(u, v);
    if (!edge_set.insert({u, v}).second) return KuratowskiKind::none;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<int> branch;
  for (const auto& [v, list] : adj) {
    if (list.size() < 2) return KuratowskiKind::none;
    if (list.size() >= 3) branch.push_back(v);
  }

  // Walk each branch-to-branch path once, through degree-2 vertices only.
  std::set<Edge> walked;
  std::set<Edge> branch_edges;
  for (int b : branch) {
    for (int first : adj[b]) {
      Edge start{std::min(b, first), std::max(b, first)};
      if (walked.contains(start)) continue;
      int prev = b;
      int cur = first;
      walked.insert(start);
      while (adj[cur].size() == 2) {
        const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        walked.insert({std::min(cur, next), std::max(cur, next)});
        prev = cur;
        cur = next;
      }
      if (cur == b) return KuratowskiKind::none;
      if (!branch_edges.insert({std::min(b, cur), std::max(b, cur)}).second) {
        return KuratowskiKind::none;  // two parallel paths
      }
    }
  }
  if (walked.size() != edge_set.size()) return KuratowskiKind::none;  // stray cycle

  std::map<int, int> degree;
  for (const auto& [a, b] : branch_edges) {
    ++degree[a];
    ++degree[b];
  }
  auto all_degree = [&](int d) {
    return std::all_of(degree.begin(), degree.end(), [&](const auto& kv) { return kv.second == d; });
  };

  if (branch.size() == 5 && branch_edges.size() == 10 && all_degree(4)) return KuratowskiKind::k5;
  if (branch.size() == 6 && branch_edges.size() == 9 && all_degree(3)) {
    // Simple cubic graph on 6 vertices with 9 edges: K_{3,3} iff bipartite.
    std::map<int, int> side;
    std::deque<int> queue{branch.front()};
    side[branch.front()] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [a, b] : branch_edges) {
        if (a != u && b != u) continue;
        const int v = a == u ? b : a;
        auto it = side.find(v);
        if (it == side.end()) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (it->second == side[u]) {
          return KuratowskiKind::none;
        }
      }
    }
    if (side.size() == 6) return KuratowskiKind::k33;
  }
  return KuratowskiKind::none;
}

bool verify_kuratowski_witness(const LevelGraph& g, std::span<const Edge> witness) {
  for (const auto& [u, v] : witness) {
    if (!g.has_edge(u, v)) return false;
  }
  return classify_subdivision(witness) != KuratowskiKind::none;
}

const char* to_string(KuratowskiKind kind) {
  switch (kind) {
    case KuratowskiKind::k5: return "K5";
    case KuratowskiKind::k33: return "K3,3";
    case KuratowskiKind::none: break;
  }
  return "none";
}

}  // namespace braidforge
