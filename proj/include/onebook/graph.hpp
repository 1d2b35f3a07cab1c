#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onebook/core.hpp"

namespace onebook {

// Simple undirected graph over dense vertex ids 0..n-1.
class Graph {
 public:
  struct Edge {
    VertexId u, v;
  };

  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  VertexId add_vertex() {
    adj_.emplace_back();
    return n_++;
  }

  // Adds (u,v); rejects loops and parallels.
  EdgeId add_edge(VertexId u, VertexId v) {
    if (u == v) throw Error(Errc::invalid_embedding, "loop edge rejected");
    if (has_edge(u, v)) throw Error(Errc::invalid_embedding, "parallel edge rejected");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    adj_[static_cast<size_t>(u)].push_back(id);
    adj_[static_cast<size_t>(v)].push_back(id);
    keys_.emplace(key(u, v), id);
    return id;
  }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(VertexId v) const { return adj_[static_cast<size_t>(v)]; }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.u == v ? ed.v : ed.u;
  }

  bool has_edge(VertexId u, VertexId v) const { return keys_.count(key(u, v)) != 0; }

  EdgeId find_edge(VertexId u, VertexId v) const {
    auto it = keys_.find(key(u, v));
    return it == keys_.end() ? -1 : it->second;
  }

  int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  bool connected() const;
  // Articulation-free check (2-connectivity) for n >= 3.
  bool two_connected() const;
  // Brute-force 3-connectivity: delete each vertex, test 2-connectivity. O(n*(n+m)).
  bool three_connected_bruteforce() const;
  // All separation pairs by brute force (n <= ~hundreds).
  std::vector<std::pair<VertexId, VertexId>> separation_pairs_bruteforce() const;

 private:
  static uint64_t key(VertexId u, VertexId v) {
    uint64_t a = static_cast<uint64_t>(u < v ? u : v);
    uint64_t b = static_cast<uint64_t>(u < v ? v : u);
    return (a << 32) | b;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
  std::unordered_map<uint64_t, EdgeId> keys_;
};

}  // namespace onebook
