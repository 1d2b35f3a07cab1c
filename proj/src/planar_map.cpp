#include "onebook/planar_map.hpp"

namespace onebook {

int PlanarMap::new_dart_pair(VertexId a, VertexId b, EdgeId gedge) {
  int d = static_cast<int>(origin_.size());
  origin_.push_back(a);
  origin_.push_back(b);
  gedge_.push_back(gedge);
  gedge_.push_back(gedge);
  rot_next_.push_back(d);
  rot_next_.push_back(d + 1);
  rot_prev_.push_back(d);
  rot_prev_.push_back(d + 1);
  alive_.push_back(1);
  alive_.push_back(1);
  ++alive_edges_;
  return d;
}

void PlanarMap::set_rotation(VertexId v, const std::vector<int>& darts) {
  if (darts.empty()) {
    vertex_dart_[static_cast<size_t>(v)] = -1;
    return;
  }
  int k = static_cast<int>(darts.size());
  for (int i = 0; i < k; ++i) {
    int d = darts[static_cast<size_t>(i)];
    rot_next_[static_cast<size_t>(d)] = darts[static_cast<size_t>((i + 1) % k)];
    rot_prev_[static_cast<size_t>(d)] = darts[static_cast<size_t>((i + k - 1) % k)];
  }
  vertex_dart_[static_cast<size_t>(v)] = darts[0];
}

int PlanarMap::degree(VertexId v) const {
  int d0 = some_dart(v);
  if (d0 < 0) return 0;
  int d = d0, cnt = 0;
  do {
    ++cnt;
    d = rot_next(d);
  } while (d != d0);
  return cnt;
}

void PlanarMap::rot_insert_after(int anchor, int d) {
  int nxt = rot_next_[static_cast<size_t>(anchor)];
  rot_next_[static_cast<size_t>(anchor)] = d;
  rot_prev_[static_cast<size_t>(d)] = anchor;
  rot_next_[static_cast<size_t>(d)] = nxt;
  rot_prev_[static_cast<size_t>(nxt)] = d;
}

void PlanarMap::rot_remove(int d) {
  VertexId v = origin_[static_cast<size_t>(d)];
  int nxt = rot_next_[static_cast<size_t>(d)];
  if (nxt == d) {
    vertex_dart_[static_cast<size_t>(v)] = -1;
  } else {
    int prv = rot_prev_[static_cast<size_t>(d)];
    rot_next_[static_cast<size_t>(prv)] = nxt;
    rot_prev_[static_cast<size_t>(nxt)] = prv;
    if (vertex_dart_[static_cast<size_t>(v)] == d) vertex_dart_[static_cast<size_t>(v)] = nxt;
  }
}

int PlanarMap::insert_edge(int dA, int dB, EdgeId gedge) {
  int n1 = new_dart_pair(origin(dA), origin(dB), gedge);
  int n2 = n1 + 1;
  rot_insert_after(dA, n1);
  rot_insert_after(dB, n2);
  return n1;
}

void PlanarMap::delete_edge(int d) {
  int t = twin(d);
  rot_remove(d);
  rot_remove(t);
  alive_[static_cast<size_t>(d)] = 0;
  alive_[static_cast<size_t>(t)] = 0;
  --alive_edges_;
}

int PlanarMap::smooth_vertex(VertexId v, EdgeId gedge) {
  int d1 = some_dart(v);
  int d2 = rot_next(d1);
  VertexId x = head(d1);
  VertexId y = head(d2);
  int t1 = twin(d1), t2 = twin(d2);
  int n1 = new_dart_pair(x, y, gedge);
  int n2 = n1 + 1;
  rot_insert_after(t1, n1);
  rot_insert_after(t2, n2);
  delete_edge(d1);
  delete_edge(d2);
  return n1;
}

PlanarMap::FaceSet PlanarMap::faces() const {
  FaceSet fs;
  fs.face_of.assign(origin_.size(), -1);
  for (int d = 0; d < dart_count(); ++d) {
    if (!alive(d) || fs.face_of[static_cast<size_t>(d)] >= 0) continue;
    FaceId f = static_cast<FaceId>(fs.walks.size());
    fs.walks.emplace_back();
    int cur = d;
    do {
      fs.face_of[static_cast<size_t>(cur)] = f;
      fs.walks.back().push_back(cur);
      cur = face_next(cur);
    } while (cur != d);
  }
  return fs;
}

bool PlanarMap::connected() const {
  int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    int d0 = some_dart(v);
    if (d0 < 0) continue;
    int d = d0;
    do {
      VertexId w = head(d);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++cnt;
        stack.push_back(w);
      }
      d = rot_next(d);
    } while (d != d0);
  }
  return cnt == n;
}

bool PlanarMap::euler_consistent() const {
  int n = vertex_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int components = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++components;
    std::vector<VertexId> stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      int d0 = some_dart(v);
      if (d0 < 0) continue;
      int d = d0;
      do {
        VertexId w = head(d);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
        d = rot_next(d);
      } while (d != d0);
    }
  }
  int f = static_cast<int>(faces().walks.size());
  // isolated vertices contribute no faces; count them out of the formula
  int isolated = 0;
  for (VertexId v = 0; v < n; ++v)
    if (some_dart(v) < 0) ++isolated;
  int v_eff = n - isolated;
  int comp_eff = components - isolated;
  if (v_eff == 0) return true;
  return v_eff - alive_edges_ + f == 1 + comp_eff;
}

}  // namespace onebook
