#pragma once

// Paths, linear combinations of paths, and the product of the weighted path
// algebra kQ.  Paths are written left to right: a1*a2*...*am with
// t(a_i) = s(a_{i+1}); the product pq is concatenation when t(p) = s(q) and
// zero otherwise.

#include "regrade/quiver.hpp"
#include "regrade/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace regrade {

class Path {
 public:
  Path() = default;

  /// The trivial path e_v.
  static Path trivial(VertexId v) {
    Path p;
    p.source_ = v;
    p.target_ = std::move(v);
    return p;
  }

  /// Composite path a1*...*am of q; throws std::invalid_argument if an arrow
  /// is unknown or two consecutive arrows do not compose.
  static Path of(const WeightedQuiver& q, const std::vector<ArrowId>& arrows) {
    if (arrows.empty()) throw std::invalid_argument("composite path needs at least one arrow");
    Path p;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const Arrow* a = q.find_arrow(arrows[i]);
      if (a == nullptr) throw std::invalid_argument("unknown arrow '" + arrows[i].name + "'");
      if (i == 0)
        p.source_ = a->source;
      else if (p.target_ != a->source)
        throw std::invalid_argument("arrows '" + arrows[i - 1].name + "' and '" + arrows[i].name +
                                    "' do not compose");
      p.target_ = a->target;
      p.degree_ += a->degree;
    }
    p.arrows_ = arrows;
    return p;
  }

  static Path of(const WeightedQuiver& q, std::initializer_list<const char*> names) {
    std::vector<ArrowId> ids;
    for (const char* n : names) ids.push_back(ArrowId{n});
    return of(q, ids);
  }

  bool is_trivial() const { return arrows_.empty(); }
  const VertexId& source() const { return source_; }
  const VertexId& target() const { return target_; }
  int degree() const { return degree_; }
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }

  /// `x*y*z`, or `e_v` for a trivial path.
  std::string to_string() const {
    if (arrows_.empty()) return "e_" + source_.name;
    std::string s;
    for (std::size_t i = 0; i < arrows_.size(); ++i) s += (i ? "*" : "") + arrows_[i].name;
    return s;
  }

  /// Canonical order: degree, source, target, then the arrow sequence.
  friend bool operator<(const Path& a, const Path& b) {
    return std::tie(a.degree_, a.source_, a.target_, a.arrows_) <
           std::tie(b.degree_, b.source_, b.target_, b.arrows_);
  }
  friend bool operator==(const Path&, const Path&) = default;

 private:
  friend std::optional<Path> multiply_paths(const Path&, const Path&);

  VertexId source_;
  VertexId target_;
  std::vector<ArrowId> arrows_;
  int degree_ = 0;
};

/// pq, or nullopt (the zero of kQ) when t(p) != s(q).
inline std::optional<Path> multiply_paths(const Path& p, const Path& q) {
  if (p.target_ != q.source_) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  Path out = p;
  out.arrows_.insert(out.arrows_.end(), q.arrows_.begin(), q.arrows_.end());
  out.target_ = q.target_;
  out.degree_ += q.degree_;
  return out;
}

/// A finite linear combination of paths with nonzero coefficients, kept in
/// canonical path order.
class PathSum {
 public:
  using Terms = std::map<Path, Scalar>;

  explicit PathSum(Field field = Field::rationals()) : field_(field) {}

  static PathSum of(const Path& p, const Scalar& c) {
    PathSum s(c.field());
    s.add_term(p, c);
    return s;
  }
  static PathSum of(Field field, const Path& p) { return of(p, Scalar::one(field)); }

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Path& p, const Scalar& c) {
    if (c.field() != field_) throw std::logic_error("path sum field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  PathSum& operator+=(const PathSum& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  PathSum& operator-=(const PathSum& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  PathSum& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend PathSum operator+(PathSum a, const PathSum& b) { return a += b; }
  friend PathSum operator-(PathSum a, const PathSum& b) { return a -= b; }
  friend PathSum operator*(PathSum a, const Scalar& s) { return a *= s; }
  friend PathSum operator*(const Scalar& s, PathSum a) { return a *= s; }

  friend bool operator==(const PathSum& a, const PathSum& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Canonical text in the relation grammar, e.g. `x*y - y*x` or `3/2*e_v`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      bool negative = field_.is_rational() && c.rational() < 0;
      const Scalar magnitude = negative ? -c : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += p.to_string();
      first = false;
    }
    return out;
  }

 private:
  Field field_;
  Terms terms_;
};

/// Bilinear extension of multiply_paths.
inline PathSum multiply_sums(const PathSum& x, const PathSum& y) {
  if (x.field() != y.field()) throw std::logic_error("path sum field mismatch");
  PathSum out(x.field());
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms())
      if (auto pq = multiply_paths(p, q)) out.add_term(*pq, a * b);
  return out;
}

/// Sum of e_v over all vertices: the identity of kQ.
inline PathSum unit(const WeightedQuiver& q, Field field) {
  PathSum s(field);
  for (const VertexId& v : q.vertices()) s.add_term(Path::trivial(v), Scalar::one(field));
  return s;
}

/// A nonzero combination of paths sharing one source, one target and one degree.
struct UniformElement {
  PathSum sum;
  VertexId source;
  VertexId target;
  int degree = 0;

  /// Throws std::invalid_argument if x is zero or not uniform.
  static UniformElement from(PathSum x) {
    if (x.is_zero()) throw std::invalid_argument("uniform element must be nonzero");
    const Path& first = x.terms().begin()->first;
    UniformElement u{x, first.source(), first.target(), first.degree()};
    for (const auto& [p, c] : x.terms())
      if (p.source() != u.source || p.target() != u.target || p.degree() != u.degree)
        throw std::invalid_argument("'" + x.to_string() + "' is not uniform");
    return u;
  }

  friend bool operator==(const UniformElement&, const UniformElement&) = default;
};

struct IdealPresentation {
  std::vector<UniformElement> generators;
  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;
};

/// Re-expresses x over `field`.  Rational coefficients map into F_p; anything
/// else must already live in `field`.
inline PathSum to_field(const PathSum& x, Field field) {
  if (x.field() == field) return x;
  if (!x.field().is_rational())
    throw std::logic_error("cannot move coefficients from " + x.field().to_string() + " to " +
                           field.to_string());
  PathSum out(field);
  for (const auto& [p, c] : x.terms()) out.add_term(p, Scalar(field, c.rational()));
  return out;
}

inline IdealPresentation to_field(const IdealPresentation& ideal, Field field) {
  IdealPresentation out;
  for (const UniformElement& g : ideal.generators) {
    PathSum s = to_field(g.sum, field);
    // A generator can vanish mod p; it then contributes nothing to the ideal.
    if (s.is_zero()) continue;
    out.generators.push_back({std::move(s), g.source, g.target, g.degree});
  }
  return out;
}

/// Splits x by (source, target, degree): the pieces e_u x e_v restricted to a
/// single degree.  They sum to x and generate the same two-sided ideal.
inline std::vector<UniformElement> uniform_components(const PathSum& x) {
  std::map<std::tuple<int, VertexId, VertexId>, PathSum> buckets;
  for (const auto& [p, c] : x.terms()) {
    auto key = std::make_tuple(p.degree(), p.source(), p.target());
    buckets.try_emplace(key, x.field()).first->second.add_term(p, c);
  }
  std::vector<UniformElement> out;
  for (auto& [key, sum] : buckets)
    out.push_back({std::move(sum), std::get<1>(key), std::get<2>(key), std::get<0>(key)});
  return out;
}

/// Every path of total degree exactly d, optionally restricted to a source
/// and/or target, in canonical order.  Throws std::length_error once more
/// than max_paths partial paths have been generated.
inline std::vector<Path> enumerate_paths(const WeightedQuiver& q, int d,
                                         const std::optional<VertexId>& source = std::nullopt,
                                         const std::optional<VertexId>& target = std::nullopt,
                                         std::size_t max_paths =
                                             std::numeric_limits<std::size_t>::max()) {
  std::vector<Path> out;
  if (d < 0) return out;
  std::size_t generated = 0;
  std::vector<ArrowId> stack;
  // Depth-first extension of the arrow stack with the remaining degree budget.
  auto extend = [&](auto&& self, const VertexId& at, int remaining) -> void {
    if (remaining == 0) {
      if (!target || *target == at) out.push_back(Path::of(q, stack));
      return;
    }
    for (const Arrow* a : q.arrows_from(at)) {
      if (a->degree > remaining) continue;
      if (++generated > max_paths)
        throw std::length_error("path enumeration exceeded " + std::to_string(max_paths) +
                                " paths in degree " + std::to_string(d));
      stack.push_back(a->id);
      self(self, a->target, remaining - a->degree);
      stack.pop_back();
    }
  };
  for (const VertexId& v : q.vertices()) {
    if (source && *source != v) continue;
    if (d == 0) {
      if (!target || *target == v) out.push_back(Path::trivial(v));
      continue;
    }
    extend(extend, v, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regrade
