#pragma once

// The functors attached to one arrow split b -> b'b'' through z:
//
//   F: reps of Q -> reps of Q'    F(M)_z = M_{s(b)}(-1), F(M)_{b'} = id,
//                                 F(M)_{b''} = M_b, everything else copied.
//   G: reps of Q' -> reps of Q    G(N)_b = N_{b''} N_{b'}, z forgotten.
//
// G F is the identity on the nose, and the counit eps_N: FG(N) -> N is the
// identity away from z and N_{b'} at z.  Because F(M)_{z,d} = M_{s(b),d-1},
// the z-component at the bottom degree of the window is unknown.

#include "regrade/representation.hpp"
#include "regrade/split.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace regrade {

enum class Direction { F, G };

namespace detail {

inline void require_quiver(const GradedRep& m, const WeightedQuiver& expected, const char* what) {
  if (!(m.quiver() == expected))
    throw std::invalid_argument(std::string(what) + ": representation is not over the expected quiver");
}

}  // namespace detail

inline GradedRep functor_F(const SplitTrace& t, const GradedRep& m) {
  detail::require_quiver(m, t.before, "functor_F");
  const Arrow& b = t.original();
  const DegreeWindow w = m.window();
  GradedRep out(t.after, m.field(), w);
  for (const auto& [key, dim] : m.dims()) out.set_dim(key.first, key.second, dim);
  for (int d = w.lo; d <= w.hi; ++d)
    if (auto n = m.dim(b.source, d - 1)) out.set_dim(t.new_vertex, d, *n);
  for (const auto& [key, block] : m.blocks()) {
    if (key.first == t.split_arrow) {
      // M_b at d becomes F(M)_{b''} at d + 1, out of the shifted copy.
      out.set_block(t.second, key.second + 1, block);
    } else {
      out.set_block(key.first, key.second, block);
    }
  }
  for (int d = w.lo; d + 1 <= w.hi; ++d) {
    const auto n = out.dim(b.source, d);
    if (n && out.known(t.new_vertex, d + 1))
      out.set_block(t.first, d, Matrix::identity(m.field(), *n));
  }
  return out;
}

inline GradedRep functor_G(const SplitTrace& t, const GradedRep& n) {
  detail::require_quiver(n, t.after, "functor_G");
  const Arrow& b = t.original();
  GradedRep out(t.before, n.field(), n.window());
  for (const auto& [key, dim] : n.dims())
    if (key.first != t.new_vertex) out.set_dim(key.first, key.second, dim);
  for (const auto& [key, block] : n.blocks()) {
    if (key.first == t.first) {
      if (const Matrix* second = n.block(t.second, key.second + 1))
        out.set_block(b.id, key.second, *second * block);
    } else if (key.first != t.second) {
      out.set_block(key.first, key.second, block);
    }
  }
  return out;
}

/// F or G applied to a morphism.  Throws std::invalid_argument if phi does
/// not commute with the arrow actions.
inline GradedMorphism functor_on_morphism(const SplitTrace& t, Direction dir,
                                          const GradedMorphism& phi) {
  if (const auto bad = square_violations(phi); !bad.empty())
    throw std::invalid_argument("functor_on_morphism: input square fails at " + bad.front().first.name +
                                "@" + std::to_string(bad.front().second));
  if (dir == Direction::F) {
    GradedMorphism out{functor_F(t, phi.source), functor_F(t, phi.target), {}};
    const VertexId& s = t.original().source;
    for (const auto& [key, m] : phi.components) {
      out.components.emplace(key, m);
      if (key.first == s && out.source.known(t.new_vertex, key.second + 1) &&
          out.target.known(t.new_vertex, key.second + 1))
        out.components.emplace(VertexDegree{t.new_vertex, key.second + 1}, m);
    }
    return out;
  }
  GradedMorphism out{functor_G(t, phi.source), functor_G(t, phi.target), {}};
  for (const auto& [key, m] : phi.components)
    if (key.first != t.new_vertex) out.components.emplace(key, m);
  return out;
}

/// eps_N: FG(N) -> N.
inline GradedMorphism counit_epsilon(const SplitTrace& t, const GradedRep& n) {
  detail::require_quiver(n, t.after, "counit_epsilon");
  GradedMorphism eps{functor_F(t, functor_G(t, n)), n, {}};
  for (const auto& [key, dim] : eps.source.dims()) {
    if (!n.known(key.first, key.second)) continue;
    if (key.first != t.new_vertex) {
      eps.components.emplace(key, Matrix::identity(n.field(), dim));
    } else if (const Matrix* first = n.block(t.first, key.second - 1)) {
      // N_{b'} out of N_{s(b)} in degree d - 1, read as a degree-0 map.
      eps.components.emplace(key, *first);
    }
  }
  return eps;
}

/// F over a whole trace, split by split.
inline GradedRep functor_F(const std::vector<SplitTrace>& trace, GradedRep m) {
  for (const SplitTrace& t : trace) m = functor_F(t, m);
  return m;
}

/// G over a whole trace, last split first.
inline GradedRep functor_G(const std::vector<SplitTrace>& trace, GradedRep n) {
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) n = functor_G(*it, n);
  return n;
}

}  // namespace regrade
