#pragma once

// Arrow splitting.  An arrow b: s -> t of degree >= 2 is replaced by
// b': s -> z of degree 1 and b'': z -> t of degree deg(b) - 1 through a fresh
// vertex z.  Paths and relations are carried along by the algebra map
// f: kQ -> kQ' that substitutes b'b'' for every occurrence of b.  Repeating
// the split until every arrow has degree 1 takes exactly D(Q) steps.

#include "regrade/path.hpp"
#include "regrade/quiver.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regrade {

struct SplitTrace {
  ArrowId split_arrow;   ///< b
  VertexId new_vertex;   ///< z
  ArrowId first;         ///< b': s(b) -> z, degree 1
  ArrowId second;        ///< b'': z -> t(b), degree deg(b) - 1
  WeightedQuiver before;
  WeightedQuiver after;

  const Arrow& original() const { return before.arrow(split_arrow); }

  friend bool operator==(const SplitTrace&, const SplitTrace&) = default;
};

struct RegradeResult {
  WeightedQuiver final_quiver;
  IdealPresentation final_ideal;
  std::vector<SplitTrace> trace;
};

/// Splits arrow b of q.  Throws std::invalid_argument when b is unknown or
/// has degree 1 (b'' would get degree 0).
inline SplitTrace split_arrow(const WeightedQuiver& q, const ArrowId& b) {
  const Arrow* target = q.find_arrow(b);
  if (target == nullptr) throw std::invalid_argument("cannot split unknown arrow '" + b.name + "'");
  if (target->degree < 2)
    throw std::invalid_argument("cannot split arrow '" + b.name + "' of degree " +
                                std::to_string(target->degree) + " (degree >= 2 required)");

  // b', b'' by default; more primes if those names are taken.
  auto taken = [&](const std::string& name) { return q.find_arrow(ArrowId{name}) != nullptr; };
  std::string first = b.name + "'";
  while (taken(first)) first += "'";
  std::string second = first + "'";
  while (taken(second)) second += "'";

  SplitTrace t;
  t.split_arrow = b;
  t.new_vertex = q.fresh_vertex("z");
  t.first = ArrowId{first};
  t.second = ArrowId{second};
  t.before = q;

  std::vector<VertexId> vertices = q.vertices();
  vertices.push_back(t.new_vertex);
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (a.id != b) arrows.push_back(a);
  arrows.push_back({t.first, target->source, t.new_vertex, 1});
  arrows.push_back({t.second, t.new_vertex, target->target, target->degree - 1});
  t.after = WeightedQuiver(std::move(vertices), std::move(arrows));
  return t;
}

/// f(p): every occurrence of b replaced by b'b''.
inline Path rewrite_path(const SplitTrace& t, const Path& p) {
  if (p.is_trivial()) return p;
  std::vector<ArrowId> out;
  out.reserve(p.length() + 1);
  for (const ArrowId& a : p.arrows()) {
    if (a == t.split_arrow) {
      out.push_back(t.first);
      out.push_back(t.second);
    } else {
      out.push_back(a);
    }
  }
  return Path::of(t.after, out);
}

inline PathSum rewrite_sum(const SplitTrace& t, const PathSum& x) {
  PathSum out(x.field());
  for (const auto& [p, c] : x.terms()) out.add_term(rewrite_path(t, p), c);
  return out;
}

inline UniformElement rewrite_sum(const SplitTrace& t, const UniformElement& x) {
  return {rewrite_sum(t, x.sum), x.source, x.target, x.degree};
}

inline IdealPresentation rewrite_ideal(const SplitTrace& t, const IdealPresentation& ideal) {
  IdealPresentation out;
  for (const UniformElement& g : ideal.generators) out.generators.push_back(rewrite_sum(t, g));
  return out;
}

/// The arrow the next regrade step splits: the smallest name among the
/// arrows of maximal degree, or nullptr when every arrow has degree 1.
inline const Arrow* next_split_target(const WeightedQuiver& q) {
  const Arrow* best = nullptr;
  for (const Arrow& a : q.arrows())  // sorted by name, so ties keep the first
    if (a.degree >= 2 && (best == nullptr || a.degree > best->degree)) best = &a;
  return best;
}

/// Splits until every arrow has degree 1, transporting the generators through
/// each step.
inline RegradeResult regrade(const WeightedQuiver& q, const IdealPresentation& ideal) {
  require_valid(q);
  RegradeResult r{q, ideal, {}};
  while (const Arrow* b = next_split_target(r.final_quiver)) {
    SplitTrace t = split_arrow(r.final_quiver, b->id);
    r.final_ideal = rewrite_ideal(t, r.final_ideal);
    r.final_quiver = t.after;
    r.trace.push_back(std::move(t));
  }
  return r;
}

}  // namespace regrade
