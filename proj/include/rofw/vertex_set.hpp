#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rofw/core.hpp"

namespace rofw {

/// Distinct oracle vertices in insertion order, optionally with convex weights.
class ActiveVertexSet {
 public:
  static constexpr double kDuplicateDistance = 1e-12;

  ActiveVertexSet() = default;
  explicit ActiveVertexSet(const std::vector<Vector>& vertices) {
    for (const Vector& v : vertices) add(v);
  }

  /// Index of v in the set; inserts it if no stored vertex is within kDuplicateDistance.
  std::size_t add(const Vector& v) {
    if (!vertices_.empty() && v.size() != vertices_.front().size()) {
      throw std::invalid_argument("vertex set: dimension mismatch");
    }
    if (const auto found = find(v)) return *found;
    vertices_.push_back(v);
    buckets_[bucket_key(v)].push_back(vertices_.size() - 1);
    weights_.reset();
    return vertices_.size() - 1;
  }

  std::optional<std::size_t> find(const Vector& v) const {
    const auto it = buckets_.find(bucket_key(v));
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if ((vertices_[i] - v).cwiseAbs().maxCoeff() <= kDuplicateDistance) return i;
    }
    return std::nullopt;
  }

  bool contains(const Vector& v) const { return find(v).has_value(); }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  Index dimension() const { return vertices_.empty() ? 0 : vertices_.front().size(); }
  const Vector& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Vector>& vertices() const { return vertices_; }

  /// Vertices as the columns of an n x k matrix.
  Matrix matrix() const {
    Matrix V(dimension(), static_cast<Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) V.col(static_cast<Index>(i)) = vertices_[i];
    return V;
  }

  const std::optional<Vector>& weights() const { return weights_; }
  void set_weights(Vector w) {
    if (w.size() != static_cast<Index>(size())) throw std::invalid_argument("vertex set: weight count");
    if ((w.array() < 0.0).any() || std::abs(w.sum() - 1.0) > 1e-12 * static_cast<double>(size())) {
      throw std::invalid_argument("vertex set: weights must be convex");
    }
    weights_ = std::move(w);
  }

 private:
  // Coordinates rounded to 1e-9 so that exact and near-exact copies share a bucket.
  static std::size_t bucket_key(const Vector& v) {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Index j = 0; j < v.size(); ++j) {
      const auto q = static_cast<std::int64_t>(std::llround(v(j) * 1e9));
      h ^= std::hash<std::int64_t>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::vector<Vector> vertices_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::optional<Vector> weights_;
};

}  // namespace rofw
