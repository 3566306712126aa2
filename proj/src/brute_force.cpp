#include <algorithm>
#include <numeric>

#include "rofw/harness.hpp"
#include "rofw/hull.hpp"

namespace rofw {
namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

void check_small(const GraphInstance& graph) {
  graph.validate();
  if (graph.num_vertices > kMaxEnumerationVertices) {
    throw InstanceError("enumeration limited to " + std::to_string(kMaxEnumerationVertices) + " vertices");
  }
}

}  // namespace

// Every (|V|-1)-subset of edges, kept if acyclic.
std::vector<Vector> enumerate_spanning_trees(const GraphInstance& graph) {
  check_small(graph);
  const int m = static_cast<int>(graph.edges.size());
  const int k = graph.num_vertices - 1;
  std::vector<Vector> trees;
  if (k > m) return trees;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(graph.num_vertices));
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int e : pick) {
      const auto [u, v] = graph.edges[static_cast<std::size_t>(e)];
      const int ru = find_root(parent, u), rv = find_root(parent, v);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[static_cast<std::size_t>(ru)] = rv;
    }
    if (acyclic) {
      Vector x = Vector::Zero(m);
      for (int e : pick) x(e) = 1.0;
      trees.push_back(x);
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return trees;
}

// Tours through vertex 0, one per direction class.
std::vector<Vector> enumerate_tours(const GraphInstance& graph) {
  check_small(graph);
  if (!graph.is_complete() || graph.num_vertices < 3) throw InstanceError("tours need a complete graph, |V| >= 3");
  const int n = graph.num_vertices;
  std::vector<int> index(static_cast<std::size_t>(n * n), -1);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    index[static_cast<std::size_t>(u * n + v)] = index[static_cast<std::size_t>(v * n + u)] = static_cast<int>(e);
  }
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Vector> tours;
  do {
    if (rest.front() > rest.back()) continue;
    Vector x = Vector::Zero(graph.dimension());
    int prev = 0;
    for (int v : rest) {
      x(index[static_cast<std::size_t>(prev * n + v)]) = 1.0;
      prev = v;
    }
    x(index[static_cast<std::size_t>(prev * n)]) = 1.0;
    tours.push_back(x);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return tours;
}

std::vector<Vector> enumerate_feasible_vertices(const InstanceFile& instance) {
  switch (instance.kind) {
    case InstanceKind::Mst:
      return enumerate_spanning_trees(*instance.graph);
    case InstanceKind::Tsp:
      return enumerate_tours(*instance.graph);
    case InstanceKind::VertexList:
      if (instance.vertices.size() > kMaxEnumeratedPoints) throw InstanceError("too many vertices to enumerate");
      return instance.vertices;
  }
  return {};
}

BruteForceOptimum brute_force_optimum(const std::vector<Vector>& vertices, const UncertaintySet& set, double tol) {
  if (vertices.empty()) throw InstanceError("brute force: no feasible vertices");
  const ActiveVertexSet all(vertices);
  const ConvHullSolution conv = convhull_minmax(all, set, tol);
  BruteForceOptimum out;
  out.f_star = conv.value;
  out.x_star = conv.x_conv;
  out.num_vertices = all.size();
  return out;
}

BruteForceOptimum brute_force_optimum(const InstanceFile& instance, double tol) {
  if (!instance.uncertainty) throw InstanceError("instance: missing uncertainty set");
  return brute_force_optimum(enumerate_feasible_vertices(instance), *instance.uncertainty, tol);
}

}  // namespace rofw
