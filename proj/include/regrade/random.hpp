#pragma once

// Seeded generators for quivers, paths, relations, representations and
// morphisms.  Every generator draws only from the Rng it is handed, so a
// (master seed, trial index) pair reproduces a trial exactly.

#include "regrade/matrix.hpp"
#include "regrade/path.hpp"
#include "regrade/quiver.hpp"
#include "regrade/representation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace regrade {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Uniform in [-box, box] over Q, uniform over F_p.
inline Scalar random_scalar(Rng& rng, Field field, long long box = 2) {
  if (field.is_rational()) return Scalar(field, uniform_int(rng, -box, box));
  return Scalar(field, uniform_int(rng, 0, static_cast<long long>(field.characteristic()) - 1));
}

inline Scalar random_nonzero_scalar(Rng& rng, Field field, long long box = 2) {
  for (;;) {
    Scalar s = random_scalar(rng, field, box);
    if (!s.is_zero()) return s;
  }
}

inline Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, field);
  return m;
}

/// L * U with unit diagonals, hence always invertible.
inline Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
  Matrix lower = Matrix::identity(field, n), upper = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_scalar(rng, field);
      upper(j, i) = random_scalar(rng, field);
    }
  return lower * upper;
}

struct QuiverShape {
  int min_vertices = 1, max_vertices = 4;
  int min_arrows = 1, max_arrows = 6;
  int max_degree = 3;
  bool need_split_target = true;  ///< force at least one arrow of degree >= 2
};

inline WeightedQuiver random_quiver(Rng& rng, const QuiverShape& shape = {}) {
  const auto nv = uniform_int(rng, shape.min_vertices, shape.max_vertices);
  const auto na = uniform_int(rng, shape.min_arrows, shape.max_arrows);
  std::vector<VertexId> vertices;
  for (long long i = 0; i < nv; ++i) vertices.push_back(VertexId{"v" + std::to_string(i)});
  std::vector<Arrow> arrows;
  for (long long i = 0; i < na; ++i) {
    arrows.push_back({ArrowId{"a" + std::to_string(i)},
                      vertices[static_cast<std::size_t>(uniform_int(rng, 0, nv - 1))],
                      vertices[static_cast<std::size_t>(uniform_int(rng, 0, nv - 1))],
                      static_cast<int>(uniform_int(rng, 1, shape.max_degree))});
  }
  const bool has_target =
      std::any_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.degree >= 2; });
  if (shape.need_split_target && !has_target && shape.max_degree >= 2)
    arrows[static_cast<std::size_t>(uniform_int(rng, 0, na - 1))].degree =
        static_cast<int>(uniform_int(rng, 2, shape.max_degree));
  return WeightedQuiver(std::move(vertices), std::move(arrows));
}

/// A random walk of up to max_length arrows from `start` (or a random
/// vertex); trivial when it cannot move.
inline Path random_path(Rng& rng, const WeightedQuiver& q, std::size_t max_length,
                        std::optional<VertexId> start = std::nullopt) {
  VertexId at = start ? *start
                      : q.vertices()[static_cast<std::size_t>(
                            uniform_int(rng, 0, static_cast<long long>(q.vertices().size()) - 1))];
  const auto length = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(max_length)));
  std::vector<ArrowId> arrows;
  for (std::size_t i = 0; i < length; ++i) {
    const auto out = q.arrows_from(at);
    if (out.empty()) break;
    const Arrow* a = out[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(out.size()) - 1))];
    arrows.push_back(a->id);
    at = a->target;
  }
  if (arrows.empty()) return Path::trivial(at);
  return Path::of(q, arrows);
}

struct IdealShape {
  int max_generators = 3;
  int max_terms = 3;
  int max_path_length = 3;
  int max_degree = 4;
};

/// 1..max_generators uniform generators, each a combination of up to
/// max_terms distinct paths sharing endpoints and degree.  Generators are
/// skipped when no suitable path turns up.
inline IdealPresentation random_ideal(Rng& rng, const WeightedQuiver& q, Field field,
                                      const IdealShape& shape = {}) {
  IdealPresentation ideal;
  const auto count = uniform_int(rng, 1, shape.max_generators);
  for (long long g = 0; g < count; ++g) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Path seed = random_path(rng, q, static_cast<std::size_t>(shape.max_path_length));
      if (seed.is_trivial() || seed.degree() > shape.max_degree) continue;
      auto candidates = enumerate_paths(q, seed.degree(), seed.source(), seed.target());
      std::shuffle(candidates.begin(), candidates.end(), rng);
      const auto terms = uniform_int(
          rng, 1, std::min<long long>(shape.max_terms, static_cast<long long>(candidates.size())));
      PathSum sum(field);
      for (long long k = 0; k < terms; ++k)
        sum.add_term(candidates[static_cast<std::size_t>(k)], random_nonzero_scalar(rng, field));
      ideal.generators.push_back(UniformElement::from(std::move(sum)));
      break;
    }
  }
  return ideal;
}

/// Dimensions uniform in 0..max_dim on every component of the window, every
/// block random.
inline GradedRep random_rep(Rng& rng, const WeightedQuiver& q, Field field, DegreeWindow window,
                            std::size_t max_dim) {
  GradedRep m(q, field, window);
  for (const VertexId& v : q.vertices())
    for (int d = window.lo; d <= window.hi; ++d)
      m.set_dim(v, d, static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(max_dim))));
  for (const Arrow& a : q.arrows())
    for (int d = window.lo; d + a.degree <= window.hi; ++d)
      m.set_block(a.id, d, random_matrix(rng, field, *m.dim(a.target, d + a.degree), *m.dim(a.source, d)));
  return m;
}

/// A representation of a quiver with two loops x, y at one vertex on which x
/// and y commute: constant dimension n, x acting by a random A and y by
/// A^2 + cA in every degree.
inline GradedRep commuting_loop_rep(Rng& rng, const WeightedQuiver& q, const ArrowId& x,
                                    const ArrowId& y, Field field, DegreeWindow window,
                                    std::size_t max_dim) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(std::max<std::size_t>(max_dim, 1))));
  const Matrix a = random_matrix(rng, field, n, n);
  const Matrix ya = a * a + a * random_scalar(rng, field);
  GradedRep m(q, field, window);
  for (const VertexId& v : q.vertices())
    for (int d = window.lo; d <= window.hi; ++d) m.set_dim(v, d, n);
  for (const Arrow& arrow : q.arrows())
    for (int d = window.lo; d + arrow.degree <= window.hi; ++d)
      m.set_block(arrow.id, d, arrow.id == x ? a : arrow.id == y ? ya : Matrix::identity(field, n));
  return m;
}

/// The subrepresentation generated by `seeds` (vectors in given components),
/// as a column basis per component.  Only meaningful when every component of
/// m in the window is known.
inline std::map<VertexDegree, Matrix> generated_subspaces(
    const GradedRep& m, const std::map<VertexDegree, Matrix>& seeds) {
  std::map<VertexDegree, Matrix> span;
  const DegreeWindow w = m.window();
  for (int d = w.lo; d <= w.hi; ++d) {
    for (const VertexId& v : m.quiver().vertices()) {
      const auto n = m.dim(v, d);
      if (!n) continue;
      Matrix cols(m.field(), *n, 0);
      if (auto it = seeds.find({v, d}); it != seeds.end()) cols = hstack(cols, it->second);
      // Arrows have positive degree, so their sources were handled earlier.
      for (const Arrow& a : m.quiver().arrows()) {
        if (a.target != v) continue;
        const Matrix* block = m.block(a.id, d - a.degree);
        auto src = span.find({a.source, d - a.degree});
        if (block != nullptr && src != span.end()) cols = hstack(cols, *block * src->second);
      }
      span.emplace(VertexDegree{v, d}, column_basis(cols));
    }
  }
  return span;
}

/// Rows of a above rows of b.
inline Matrix stack_rows(const Matrix& a, const Matrix& b) {
  return hstack(a.transpose(), b.transpose()).transpose();
}

/// N with every component re-coordinatized: N'_a = P_t N_a P_s^{-1}.
inline GradedRep conjugate(const GradedRep& n, const std::map<VertexDegree, Matrix>& change) {
  GradedRep out(n.quiver(), n.field(), n.window());
  for (const auto& [key, dim] : n.dims()) out.set_dim(key.first, key.second, dim);
  for (const auto& [key, block] : n.blocks()) {
    const Arrow& a = n.quiver().arrow(key.first);
    const Matrix& ps = change.at({a.source, key.second});
    const Matrix& pt = change.at({a.target, key.second + a.degree});
    out.set_block(key.first, key.second,
                  pt * block * solve(ps, Matrix::identity(n.field(), ps.rows())));
  }
  return out;
}

/// A random morphism out of m with (generically) nonzero kernel and cokernel:
/// m -> m/S -> (m/S ⊕ R), re-coordinatized by random invertible matrices.
/// S is generated by one or two random vectors; R is a random representation.
inline GradedMorphism random_morphism_from(Rng& rng, const GradedRep& m, std::size_t max_dim) {
  std::map<VertexDegree, Matrix> seeds;
  const auto nseeds = uniform_int(rng, 1, 2);
  std::vector<VertexDegree> nonzero;
  for (const auto& [key, dim] : m.dims())
    if (dim > 0) nonzero.push_back(key);
  for (long long i = 0; i < nseeds && !nonzero.empty(); ++i) {
    const VertexDegree& key =
        nonzero[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(nonzero.size()) - 1))];
    seeds.insert_or_assign(key, random_matrix(rng, m.field(), m.dims().at(key), 1));
  }
  const auto span = generated_subspaces(m, seeds);

  GradedRep sub(m.quiver(), m.field(), m.window());
  for (const auto& [key, basis] : span) sub.set_dim(key.first, key.second, basis.cols());
  for (const auto& [key, block] : m.blocks()) {
    const Arrow& a = m.quiver().arrow(key.first);
    const Matrix& s = span.at({a.source, key.second});
    const Matrix& t = span.at({a.target, key.second + a.degree});
    sub.set_block(a.id, key.second, solve(t, block * s));
  }
  const CokernelResult quotient = morphism_cokernel(GradedMorphism{sub, m, span});

  const GradedRep extra = random_rep(rng, m.quiver(), m.field(), m.window(), max_dim);
  const GradedRep sum = direct_sum(quotient.cokernel, extra);
  std::map<VertexDegree, Matrix> change;
  for (const auto& [key, dim] : sum.dims()) change.emplace(key, random_invertible(rng, m.field(), dim));
  GradedMorphism phi{m, conjugate(sum, change), {}};
  for (const auto& [key, p] : quotient.projection.components) {
    const Matrix padded = stack_rows(p, Matrix(m.field(), *extra.dim(key.first, key.second), p.cols()));
    phi.components.emplace(key, change.at(key) * padded);
  }
  return phi;
}

}  // namespace regrade
