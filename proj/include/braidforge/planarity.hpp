#pragma once

// Planarity decision with certificates, plus independent checks of those
// certificates: Euler's formula on the returned rotation system, and a
// direct shape test that a witness edge set is a subdivided K_5 or K_{3,3}.

#include <cstddef>
#include <span>
#include <vector>

#include "braidforge/simple_graph.hpp"

namespace braidforge {

/// Cyclic order of neighbours around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityResult {
  bool planar = false;
  RotationSystem embedding;        // filled when planar
  std::vector<Edge> kuratowski;    // filled when not planar, sorted
};

PlanarityResult test_planarity(std::size_t vertex_count, std::span<const Edge> edges);
PlanarityResult is_planar(const LevelGraph& g);

/// Faces traced by the rotation system, summed over components; an isolated
/// vertex contributes its single face.
std::size_t count_faces(const RotationSystem& rotation);

/// The rotation lists exactly the graph's neighbours and V - E + F = 2 holds
/// on every connected component.
bool satisfies_euler(std::size_t vertex_count, std::span<const Edge> edges,
                     const RotationSystem& rotation);

enum class KuratowskiKind { none, k5, k33 };

/// Shape of `witness` after suppressing degree-2 vertices. Returns `none`
/// unless it is exactly a subdivision of K_5 or K_{3,3}.
KuratowskiKind classify_subdivision(std::span<const Edge> witness);

/// Witness edges all belong to `g` and form a Kuratowski subdivision.
bool verify_kuratowski_witness(const LevelGraph& g, std::span<const Edge> witness);

const char* to_string(KuratowskiKind kind);

}  // namespace braidforge
