#pragma once

// Linear minimization oracles: argmin_{x in X} cost^T x, the only access to the feasible region.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rofw/core.hpp"

namespace rofw {

class LinearOracle {
 public:
  virtual ~LinearOracle() = default;

  virtual Index dimension() const = 0;
  /// A vertex of X minimizing cost^T x. Deterministic for identical costs.
  virtual Vector minimize(const Vector& cost) const = 0;
  /// Upper bound on the diameter of X.
  virtual double diameter_bound() const = 0;
  virtual std::string kind() const = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph; decision coordinate j is edge j.
struct GraphInstance {
  int num_vertices = 0;
  std::vector<Edge> edges;

  Index dimension() const { return static_cast<Index>(edges.size()); }
  bool is_connected() const;
  bool is_complete() const;
  /// Throws InstanceError on self loops, duplicate edges, bad ids or disconnection.
  void validate() const;

  static GraphInstance complete(int num_vertices);
};

/// Minimum spanning tree by Kruskal; ties resolved by edge index.
class MstOracle final : public LinearOracle {
 public:
  explicit MstOracle(GraphInstance graph);

  Index dimension() const override { return graph_.dimension(); }
  Vector minimize(const Vector& cost) const override;
  /// sqrt(2 (|V| - 1)): every tree has exactly |V| - 1 edges.
  double diameter_bound() const override;
  std::string kind() const override { return "mst"; }
  const GraphInstance& graph() const { return graph_; }

 private:
  GraphInstance graph_;
};

/// Exact minimum-cost Hamiltonian cycle by Held-Karp over a complete graph.
class TspOracle final : public LinearOracle {
 public:
  static constexpr int kMaxVertices = 16;

  explicit TspOracle(GraphInstance graph);

  Index dimension() const override { return graph_.dimension(); }
  Vector minimize(const Vector& cost) const override;
  /// sqrt(2 |V|): every tour has exactly |V| edges.
  double diameter_bound() const override;
  std::string kind() const override { return "tsp"; }
  const GraphInstance& graph() const { return graph_; }
  int edge_index(int u, int v) const { return edge_of_[static_cast<std::size_t>(u * graph_.num_vertices + v)]; }

 private:
  GraphInstance graph_;
  std::vector<int> edge_of_;
};

/// Explicit list of points; returns the first minimizer.
class VertexListOracle final : public LinearOracle {
 public:
  explicit VertexListOracle(std::vector<Vector> vertices);

  Index dimension() const override { return vertices_.front().size(); }
  Vector minimize(const Vector& cost) const override;
  /// Exact pairwise diameter for up to kExactDiameterLimit points, else a coordinate-box bound.
  double diameter_bound() const override { return diameter_; }
  std::string kind() const override { return "vertex_list"; }
  const std::vector<Vector>& vertices() const { return vertices_; }

  static constexpr std::size_t kExactDiameterLimit = 2000;

 private:
  std::vector<Vector> vertices_;
  double diameter_ = 0.0;
};

Vector lmo_mst(const GraphInstance& graph, const Vector& cost);
Vector lmo_tsp(const GraphInstance& graph, const Vector& cost);
Vector lmo_vertex_list(const VertexListOracle& oracle, const Vector& cost);

}  // namespace rofw
