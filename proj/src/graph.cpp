#include "onebook/graph.hpp"

#include <algorithm>
#include <functional>

namespace onebook {

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      VertexId w = other_end(e, v);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  return cnt == n_;
}

namespace {

// Counts vertices reachable in g skipping `skip1`/`skip2`; -1 if nothing to visit.
int reachable_count(const Graph& g, VertexId skip1, VertexId skip2) {
  int n = g.vertex_count();
  VertexId start = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (v != skip1 && v != skip2) {
      start = v;
      break;
    }
  }
  if (start < 0) return -1;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (w == skip1 || w == skip2 || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      ++cnt;
      stack.push_back(w);
    }
  }
  return cnt;
}

}  // namespace

bool Graph::two_connected() const {
  if (n_ < 3) return false;
  if (!connected()) return false;
  for (VertexId v = 0; v < n_; ++v) {
    if (reachable_count(*this, v, -1) != n_ - 1) return false;
  }
  return true;
}

bool Graph::three_connected_bruteforce() const {
  if (n_ < 4) return false;
  if (!two_connected()) return false;
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId w = v + 1; w < n_; ++w) {
      if (reachable_count(*this, v, w) != n_ - 2) return false;
    }
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> Graph::separation_pairs_bruteforce() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  if (n_ < 4) return out;
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId w = v + 1; w < n_; ++w) {
      if (reachable_count(*this, v, w) != n_ - 2) out.emplace_back(v, w);
    }
  }
  return out;
}

}  // namespace onebook
