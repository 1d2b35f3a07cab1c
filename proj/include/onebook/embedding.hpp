#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onebook/graph.hpp"
#include "onebook/planar_map.hpp"

namespace onebook {

// One pair of mutually crossing edges. The planarization dummy for the
// i-th pair has vertex id n + i.
struct CrossingPair {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
};

// A directed half-edge leaving a real vertex; the face to its left is meant.
struct FaceWitness {
  VertexId from = -1;
  EdgeId edge = -1;
};

// Neighbor entry of a planarization rotation: the planarization vertex
// reached and the underlying graph edge travelled on.
struct Arc {
  VertexId to = -1;
  EdgeId edge = -1;
  bool operator==(const Arc&) const = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool valid() const { return problems.empty(); }
};

struct FaceList {
  std::vector<std::vector<VertexId>> faces;  // vertex walks (planarization ids)
  FaceId outer = -1;
};

struct Planarization {
  Graph graph;    // real vertices first, then one dummy per crossing pair
  int real_n = 0; // vertices >= real_n are dummies
  bool is_dummy(VertexId v) const { return v >= real_n; }
};

// Witnessed 1-planar embedding: the graph, its crossing pairs, and the
// rotation system of the planarization (ccw order at every vertex).
struct OnePlanarEmbedding {
  Graph graph;
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<Arc>> rotation;  // size n + crossings
  FaceWitness outer;

  int real_n() const { return graph.vertex_count(); }
  int plan_n() const { return graph.vertex_count() + static_cast<int>(crossings.size()); }
  VertexId dummy_of(int crossing_index) const { return real_n() + crossing_index; }

  // -1 when the edge is planar, else index of its crossing pair.
  std::vector<int> crossing_index_per_edge() const;

  bool operator==(const OnePlanarEmbedding& other) const;
};

ValidationReport validate_embedding(const OnePlanarEmbedding& emb);

Planarization planarize(const OnePlanarEmbedding& emb);

FaceList faces(const OnePlanarEmbedding& emb);

// Half-edge map of the planarization plus the dart that witnesses the outer
// face. Throws InvalidEmbedding on inconsistent rotations.
struct MapView {
  PlanarMap map;
  int outer_dart = -1;
};
MapView to_map(const OnePlanarEmbedding& emb);

// Rebuilds an embedding from a mutated map. Dummy vertices are the map
// vertices >= real_n that are still alive; they are renumbered densely in
// ascending order and the crossing list is rebuilt accordingly.
OnePlanarEmbedding from_map(const PlanarMap& map, const Graph& graph, int real_n, int outer_dart);

}  // namespace onebook
