#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "rofw/harness.hpp"

namespace rofw {
namespace {

using Rng = std::mt19937_64;

constexpr int kMaxConnectivityRetries = 1000;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GraphInstance erdos_renyi(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < kMaxConnectivityRetries; ++attempt) {
    GraphInstance g;
    g.num_vertices = n;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.edges.emplace_back(u, v);
      }
    }
    if (g.is_connected()) return g;
  }
  throw InstanceError("generator: no connected graph found; raise the edge probability");
}

std::string gamma_label(double gamma) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << gamma;
  return out.str();
}

}  // namespace

InstanceFile generate_instance(const GeneratorOptions& options) {
  Rng rng(options.seed);
  InstanceFile out;
  out.kind = options.kind;
  out.seed = options.seed;
  out.name = to_string(options.kind) + "_n" + std::to_string(options.size) + "_g" + gamma_label(options.gamma) +
             "_s" + std::to_string(options.seed);

  switch (options.kind) {
    case InstanceKind::Mst: {
      if (options.size < 2) throw InstanceError("generator: mst needs at least 2 vertices");
      const double n = options.size;
      double p = options.edge_probability;
      if (p == 0.0) p = std::min(1.0, 3.0 * std::log(n) / n);
      if (!(p > 0.0 && p <= 1.0)) throw InstanceError("generator: edge probability must lie in (0, 1]");
      out.graph = erdos_renyi(rng, options.size, p);
      break;
    }
    case InstanceKind::Tsp:
      if (options.size < 3 || options.size > TspOracle::kMaxVertices) {
        throw InstanceError("generator: tsp size must lie in [3, " + std::to_string(TspOracle::kMaxVertices) + "]");
      }
      out.graph = GraphInstance::complete(options.size);
      break;
    case InstanceKind::VertexList: {
      if (options.size < 1 || options.num_points < 1) throw InstanceError("generator: empty vertex list");
      if (options.size < 62 && (std::int64_t{1} << options.size) < options.num_points) {
        throw InstanceError("generator: more points requested than 0/1 vectors exist");
      }
      std::set<std::vector<int>> seen;
      while (static_cast<int>(out.vertices.size()) < options.num_points) {
        std::vector<int> bits(static_cast<std::size_t>(options.size));
        for (int& b : bits) b = uniform_int(rng, 0, 1);
        if (!seen.insert(bits).second) continue;
        Vector v(options.size);
        for (int j = 0; j < options.size; ++j) v(j) = bits[static_cast<std::size_t>(j)];
        out.vertices.push_back(v);
      }
      break;
    }
  }

  const Index n = out.dimension();
  if (!(options.gamma >= 0.0 && options.gamma <= static_cast<double>(n))) {
    throw InstanceError("generator: gamma must lie in [0, " + std::to_string(n) + "]");
  }
  Vector c_lower(n), d(n);
  for (Index j = 0; j < n; ++j) {
    const int nominal = uniform_int(rng, 1, 100);
    c_lower(j) = nominal;
    d(j) = uniform_int(rng, 1, nominal);
  }

  if (options.uncertainty == "budgeted") {
    out.uncertainty = Budgeted(c_lower, d, options.gamma);
  } else if (options.uncertainty == "scenarios") {
    if (options.num_scenarios < 1) throw InstanceError("generator: need at least one scenario");
    Matrix C(n, options.num_scenarios);
    for (int s = 0; s < options.num_scenarios; ++s) {
      for (Index j = 0; j < n; ++j) C(j, s) = c_lower(j) + uniform_int(rng, 0, static_cast<int>(d(j)));
    }
    out.uncertainty = ScenarioHull(C);
  } else {
    throw InstanceError("generator: unknown uncertainty type '" + options.uncertainty + "'");
  }
  return out;
}

}  // namespace rofw
