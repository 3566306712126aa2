#include "rofw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace rofw {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

void require_cost(const Vector& cost, Index n, const char* who) {
  if (cost.size() != n) {
    throw std::invalid_argument(std::string(who) + ": cost dimension mismatch");
  }
  if (!cost.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite cost");
}

}  // namespace

bool GraphInstance::is_connected() const {
  if (num_vertices <= 0) return false;
  DisjointSets sets(num_vertices);
  int components = num_vertices;
  for (const auto& [u, v] : edges) {
    if (sets.unite(u, v)) --components;
  }
  return components == 1;
}

bool GraphInstance::is_complete() const {
  const auto n = static_cast<std::size_t>(num_vertices);
  return edges.size() == n * (n - 1) / 2;
}

void GraphInstance::validate() const {
  if (num_vertices < 1) throw InstanceError("graph: need at least one vertex");
  if (edges.empty()) throw InstanceError("graph: need at least one edge");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw InstanceError("graph: vertex id out of range");
    }
    if (u == v) throw InstanceError("graph: self loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InstanceError("graph: duplicate edge");
    }
  }
  if (!is_connected()) throw InstanceError("graph: disconnected");
}

GraphInstance GraphInstance::complete(int num_vertices) {
  GraphInstance g;
  g.num_vertices = num_vertices;
  for (int u = 0; u < num_vertices; ++u) {
    for (int v = u + 1; v < num_vertices; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

Vector lmo_mst(const GraphInstance& graph, const Vector& cost) {
  require_cost(cost, graph.dimension(), "mst oracle");
  std::vector<int> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cost(a) < cost(b); });
  DisjointSets sets(graph.num_vertices);
  Vector tree = Vector::Zero(graph.dimension());
  int picked = 0;
  for (int e : order) {
    const auto& [u, v] = graph.edges[static_cast<std::size_t>(e)];
    if (sets.unite(u, v)) {
      tree(e) = 1.0;
      if (++picked == graph.num_vertices - 1) break;
    }
  }
  if (picked != graph.num_vertices - 1) throw InstanceError("mst oracle: graph is disconnected");
  return tree;
}

MstOracle::MstOracle(GraphInstance graph) : graph_(std::move(graph)) { graph_.validate(); }

Vector MstOracle::minimize(const Vector& cost) const { return lmo_mst(graph_, cost); }

double MstOracle::diameter_bound() const {
  return std::sqrt(2.0 * static_cast<double>(graph_.num_vertices - 1));
}

TspOracle::TspOracle(GraphInstance graph) : graph_(std::move(graph)) {
  if (graph_.num_vertices > kMaxVertices) {
    throw InstanceError("instance too large for exact oracle");
  }
  if (graph_.num_vertices < 3) throw InstanceError("tsp: need at least 3 vertices");
  graph_.validate();
  if (!graph_.is_complete()) throw InstanceError("tsp: graph must be complete");
  const int n = graph_.num_vertices;
  edge_of_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
    const auto& [u, v] = graph_.edges[e];
    edge_of_[static_cast<std::size_t>(u * n + v)] = static_cast<int>(e);
    edge_of_[static_cast<std::size_t>(v * n + u)] = static_cast<int>(e);
  }
}

// Held-Karp: best[mask][j] is the cheapest path from vertex 0 through the vertices in mask
// (over vertices 1..n-1) ending at j. Predecessors are scanned in increasing order and only
// replaced on strict improvement.
Vector TspOracle::minimize(const Vector& cost) const {
  require_cost(cost, dimension(), "tsp oracle");
  const int n = graph_.num_vertices;
  const int m = n - 1;
  const std::size_t states = std::size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(states * static_cast<std::size_t>(m), inf);
  std::vector<signed char> parent(states * static_cast<std::size_t>(m), -1);
  auto w = [&](int u, int v) { return cost(edge_index(u, v)); };
  auto slot = [m](std::size_t mask, int j) { return mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(j); };

  for (int j = 0; j < m; ++j) best[slot(std::size_t{1} << j, j)] = w(0, j + 1);
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t prev_mask = mask ^ (std::size_t{1} << j);
      if (prev_mask == 0) continue;
      double& target = best[slot(mask, j)];
      for (int i = 0; i < m; ++i) {
        if (!(prev_mask & (std::size_t{1} << i))) continue;
        const double candidate = best[slot(prev_mask, i)] + w(i + 1, j + 1);
        if (candidate < target) {
          target = candidate;
          parent[slot(mask, j)] = static_cast<signed char>(i);
        }
      }
    }
  }

  const std::size_t full = states - 1;
  int last = -1;
  double tour_cost = inf;
  for (int j = 0; j < m; ++j) {
    const double candidate = best[slot(full, j)] + w(j + 1, 0);
    if (candidate < tour_cost) {
      tour_cost = candidate;
      last = j;
    }
  }

  Vector tour = Vector::Zero(dimension());
  tour(edge_index(last + 1, 0)) = 1.0;
  std::size_t mask = full;
  int j = last;
  while (true) {
    const int i = parent[slot(mask, j)];
    mask ^= std::size_t{1} << j;
    if (i < 0) {
      tour(edge_index(0, j + 1)) = 1.0;
      break;
    }
    tour(edge_index(i + 1, j + 1)) = 1.0;
    j = i;
  }
  return tour;
}

double TspOracle::diameter_bound() const {
  return std::sqrt(2.0 * static_cast<double>(graph_.num_vertices));
}

Vector lmo_tsp(const GraphInstance& graph, const Vector& cost) { return TspOracle(graph).minimize(cost); }

VertexListOracle::VertexListOracle(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InstanceError("vertex list: need at least one vertex");
  const Index n = vertices_.front().size();
  if (n < 1) throw InstanceError("vertex list: vertices must have positive length");
  for (const Vector& v : vertices_) {
    if (v.size() != n) throw InstanceError("vertex list: inconsistent dimensions");
    if (!v.allFinite()) throw InstanceError("vertex list: non-finite coordinate");
  }
  if (vertices_.size() <= kExactDiameterLimit) {
    double best = 0.0;
    for (std::size_t a = 0; a < vertices_.size(); ++a) {
      for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
        best = std::max(best, (vertices_[a] - vertices_[b]).squaredNorm());
      }
    }
    diameter_ = std::sqrt(best);
  } else {
    Vector lo = vertices_.front(), hi = vertices_.front();
    for (const Vector& v : vertices_) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    diameter_ = (hi - lo).norm();
  }
}

Vector VertexListOracle::minimize(const Vector& cost) const {
  require_cost(cost, dimension(), "vertex list oracle");
  std::size_t best = 0;
  double best_value = cost.dot(vertices_.front());
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double value = cost.dot(vertices_[i]);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  return vertices_[best];
}

Vector lmo_vertex_list(const VertexListOracle& oracle, const Vector& cost) {
  return oracle.minimize(cost);
}

}  // namespace rofw
