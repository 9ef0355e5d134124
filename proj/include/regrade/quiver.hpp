#pragma once

// Weighted quivers: finite directed multigraphs (loops and parallel arrows
// allowed) whose arrows carry positive integer degrees.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regrade {

struct VertexId {
  std::string name;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.name; }
};

struct ArrowId {
  std::string name;
  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ArrowId& a) { return os << a.name; }
};

struct Arrow {
  ArrowId id;
  VertexId source;
  VertexId target;
  int degree = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct QuiverError {
  enum class Kind { DanglingEndpoint, DuplicateId, NonpositiveDegree };
  Kind kind;
  std::string message;
};

inline const char* to_string(QuiverError::Kind kind) {
  switch (kind) {
    case QuiverError::Kind::DanglingEndpoint: return "dangling endpoint";
    case QuiverError::Kind::DuplicateId: return "duplicate id";
    case QuiverError::Kind::NonpositiveDegree: return "nonpositive degree";
  }
  return "unknown";
}

/// A weighted quiver.  Vertices and arrows are kept sorted by id so every
/// traversal is deterministic.  Construction does not validate; call
/// validate() (or require_valid()) before relying on the invariants.
class WeightedQuiver {
 public:
  WeightedQuiver() = default;

  WeightedQuiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::stable_sort(vertices_.begin(), vertices_.end());
    std::stable_sort(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  const Arrow* find_arrow(const ArrowId& id) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                               [](const Arrow& a, const ArrowId& key) { return a.id < key; });
    return (it != arrows_.end() && it->id == id) ? &*it : nullptr;
  }

  const Arrow& arrow(const ArrowId& id) const {
    if (const Arrow* a = find_arrow(id)) return *a;
    throw std::out_of_range("unknown arrow '" + id.name + "'");
  }

  /// Arrows leaving v, in id order.
  std::vector<const Arrow*> arrows_from(const VertexId& v) const {
    std::vector<const Arrow*> out;
    for (const Arrow& a : arrows_)
      if (a.source == v) out.push_back(&a);
    return out;
  }

  int max_degree() const {
    int m = 0;
    for (const Arrow& a : arrows_) m = std::max(m, a.degree);
    return m;
  }

  /// Smallest name among `base`, `base1`, `base2`, ... that is not a vertex.
  VertexId fresh_vertex(const std::string& base) const {
    VertexId candidate{base};
    for (int k = 1; has_vertex(candidate); ++k) candidate.name = base + std::to_string(k);
    return candidate;
  }

  friend bool operator==(const WeightedQuiver&, const WeightedQuiver&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
};

/// Every structural violation of q; empty when q is a valid weighted quiver.
inline std::vector<QuiverError> validate(const WeightedQuiver& q) {
  std::vector<QuiverError> errors;
  using K = QuiverError::Kind;
  const auto& vs = q.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] == vs[i - 1])
      errors.push_back({K::DuplicateId, "duplicate vertex '" + vs[i].name + "'"});
  const auto& as = q.arrows();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const Arrow& a = as[i];
    if (i > 0 && as[i - 1].id == a.id)
      errors.push_back({K::DuplicateId, "duplicate arrow '" + a.id.name + "'"});
    if (!q.has_vertex(a.source))
      errors.push_back({K::DanglingEndpoint,
                        "arrow '" + a.id.name + "' has undeclared source '" + a.source.name + "'"});
    if (!q.has_vertex(a.target))
      errors.push_back({K::DanglingEndpoint,
                        "arrow '" + a.id.name + "' has undeclared target '" + a.target.name + "'"});
    if (a.degree < 1)
      errors.push_back({K::NonpositiveDegree, "arrow '" + a.id.name + "' has nonpositive degree " +
                                                  std::to_string(a.degree)});
  }
  return errors;
}

inline void require_valid(const WeightedQuiver& q) {
  const auto errors = validate(q);
  if (errors.empty()) return;
  std::string msg = "invalid quiver:";
  for (const auto& e : errors) msg += " " + e.message + ";";
  throw std::invalid_argument(msg);
}

/// D(Q): the sum of arrow degrees minus the number of arrows.
inline long long weight_discrepancy(const WeightedQuiver& q) {
  return std::accumulate(q.arrows().begin(), q.arrows().end(), 0LL,
                         [](long long acc, const Arrow& a) { return acc + a.degree - 1; });
}

}  // namespace regrade
