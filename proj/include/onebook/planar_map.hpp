#pragma once

#include <vector>

#include "onebook/core.hpp"

namespace onebook {

// Mutable combinatorial map (half-edge structure) of a plane multigraph.
// Darts come in twin pairs (2k, 2k+1). Rotations are kept as circular
// doubly-linked lists per vertex in ccw order. Faces lie to the LEFT of a
// dart; the successor of d along its face is rot_prev(twin(d)).
class PlanarMap {
 public:
  PlanarMap() = default;
  explicit PlanarMap(int vertices) { vertex_dart_.assign(static_cast<size_t>(vertices), -1); }

  int vertex_count() const { return static_cast<int>(vertex_dart_.size()); }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int alive_edge_count() const { return alive_edges_; }

  VertexId add_vertex() {
    vertex_dart_.push_back(-1);
    return static_cast<VertexId>(vertex_dart_.size()) - 1;
  }

  // Allocates a dart pair for edge (a,b) without touching rotations.
  // Returns the dart a->b; its twin is the companion b->a.
  int new_dart_pair(VertexId a, VertexId b, EdgeId gedge);

  // Declares the full ccw rotation at v. Every dart must originate at v.
  void set_rotation(VertexId v, const std::vector<int>& darts);

  int twin(int d) const { return d ^ 1; }
  VertexId origin(int d) const { return origin_[static_cast<size_t>(d)]; }
  VertexId head(int d) const { return origin_[static_cast<size_t>(twin(d))]; }
  EdgeId gedge(int d) const { return gedge_[static_cast<size_t>(d)]; }
  void set_gedge(int d, EdgeId e) {
    gedge_[static_cast<size_t>(d)] = e;
    gedge_[static_cast<size_t>(twin(d))] = e;
  }
  bool alive(int d) const { return alive_[static_cast<size_t>(d)] != 0; }
  int rot_next(int d) const { return rot_next_[static_cast<size_t>(d)]; }
  int rot_prev(int d) const { return rot_prev_[static_cast<size_t>(d)]; }
  int face_next(int d) const { return rot_prev(twin(d)); }
  int face_prev(int d) const { return twin(rot_next(d)); }
  int some_dart(VertexId v) const { return vertex_dart_[static_cast<size_t>(v)]; }
  int degree(VertexId v) const;

  // Inserts edge between origin(dA) and origin(dB), which must lie on one
  // face walk. The new dart n1 (at origin(dA)) is spliced right after dA in
  // ccw order, its twin right after dB. Returns n1.
  int insert_edge(int dA, int dB, EdgeId gedge);

  // Removes the edge of dart d from the map (faces merge).
  void delete_edge(int d);

  // v must have degree 2; replaces its two edges by a single edge between
  // the outer endpoints, preserving the angular slots. Returns the new dart
  // at the endpoint of v's first edge.
  int smooth_vertex(VertexId v, EdgeId gedge);

  struct FaceSet {
    std::vector<FaceId> face_of;             // per dart, -1 for dead darts
    std::vector<std::vector<int>> walks;     // darts per face, in walk order
  };
  FaceSet faces() const;

  bool connected() const;
  // Euler check: v - e + f == 1 + components (with isolated vertices counted).
  bool euler_consistent() const;

 private:
  void rot_insert_after(int anchor, int d);
  void rot_remove(int d);

  std::vector<int> vertex_dart_;
  std::vector<VertexId> origin_;
  std::vector<EdgeId> gedge_;
  std::vector<int> rot_next_, rot_prev_;
  std::vector<char> alive_;
  int alive_edges_ = 0;
};

}  // namespace onebook
