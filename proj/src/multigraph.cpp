#include "iomdin/multigraph.hpp"

#include <numeric>
#include <stdexcept>

namespace iomdin {

int MultiGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  edges_.push_back({a, b});
  return static_cast<int>(edges_.size()) - 1;
}

std::vector<std::vector<std::pair<int, int>>> MultiGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count_);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adj[e.a].emplace_back(e.b, id);
    adj[e.b].emplace_back(e.a, id);
  }
  return adj;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

namespace {

int find(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::vector<int> MultiGraph::component_labels(int* count) const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges_) {
    int ra = find(parent, e.a);
    int rb = find(parent, e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> label(vertex_count_, -1);
  std::vector<int> root_label(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = find(parent, v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count != nullptr) *count = next;
  return label;
}

int MultiGraph::component_count() const {
  int count = 0;
  component_labels(&count);
  return count;
}

bool MultiGraph::has_loops() const {
  for (const Edge& e : edges_) {
    if (e.is_loop()) return true;
  }
  return false;
}

bool MultiGraph::is_tree() const {
  if (vertex_count_ == 0) return false;
  if (edge_count() != vertex_count_ - 1) return false;
  if (has_loops()) return false;
  return component_count() == 1;
}

}  // namespace iomdin
