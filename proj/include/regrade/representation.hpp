#pragma once

// Graded representations of a weighted quiver, truncated to a finite degree
// window.  A representation assigns a finite-dimensional space to each
// (vertex, degree) component and, for each arrow a and degree d, a matrix
// M_{a,d}: (s(a), d) -> (t(a), d + deg(a)).
//
// Components may be unknown: everything outside the window is, and a functor
// that shifts a vertex can leave a component inside the window unknown too.
// Path evaluation refuses to pass through unknown data, so checks are only
// ever made at window-interior degrees.
//
// Matrices act on columns, so a path a1*...*am evaluates to
// M_{am} * ... * M_{a1}: the first arrow is applied first.

#include "regrade/matrix.hpp"
#include "regrade/path.hpp"
#include "regrade/quiver.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regrade {

struct DegreeWindow {
  int lo = 0;
  int hi = 0;

  bool contains(int d) const { return lo <= d && d <= hi; }
  DegreeWindow shifted(int n) const { return {lo + n, hi + n}; }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// Thrown when an evaluation would need data outside the known components.
class WindowOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

using VertexDegree = std::pair<VertexId, int>;
using ArrowDegree = std::pair<ArrowId, int>;

class GradedRep {
 public:
  GradedRep() = default;

  /// All components unknown.
  GradedRep(WeightedQuiver quiver, Field field, DegreeWindow window)
      : quiver_(std::move(quiver)), field_(field), window_(window) {
    if (window_.lo > window_.hi) throw std::invalid_argument("empty degree window");
  }

  /// Every component of the window known and zero-dimensional.
  static GradedRep zero(const WeightedQuiver& q, Field field, DegreeWindow window) {
    GradedRep m(q, field, window);
    for (const VertexId& v : q.vertices())
      for (int d = window.lo; d <= window.hi; ++d) m.set_dim(v, d, 0);
    m.fill_zero_blocks();
    return m;
  }

  const WeightedQuiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const DegreeWindow& window() const { return window_; }
  const std::map<VertexDegree, std::size_t>& dims() const { return dims_; }
  const std::map<ArrowDegree, Matrix>& blocks() const { return blocks_; }

  std::optional<std::size_t> dim(const VertexId& v, int d) const {
    auto it = dims_.find({v, d});
    if (it == dims_.end()) return std::nullopt;
    return it->second;
  }
  bool known(const VertexId& v, int d) const { return dims_.count({v, d}) != 0; }

  const Matrix* block(const ArrowId& a, int d) const {
    auto it = blocks_.find({a, d});
    return it == blocks_.end() ? nullptr : &it->second;
  }

  void set_dim(const VertexId& v, int d, std::size_t n) {
    if (!quiver_.has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v.name + "'");
    if (!window_.contains(d))
      throw std::invalid_argument("degree " + std::to_string(d) + " outside window");
    dims_[{v, d}] = n;
  }

  /// Installs M_{a,d}; both endpoint components must be known and match the shape.
  void set_block(const ArrowId& a, int d, Matrix m) {
    const Arrow& arrow = quiver_.arrow(a);
    const auto src = dim(arrow.source, d);
    const auto tgt = dim(arrow.target, d + arrow.degree);
    if (!src || !tgt)
      throw std::invalid_argument("block " + a.name + "@" + std::to_string(d) +
                                  " touches an unknown component");
    if (m.rows() != *tgt || m.cols() != *src || m.field() != field_)
      throw std::invalid_argument("block " + a.name + "@" + std::to_string(d) + " has shape " +
                                  m.shape() + ", expected " + std::to_string(*tgt) + "x" +
                                  std::to_string(*src));
    blocks_.insert_or_assign({a, d}, std::move(m));
  }

  /// Adds a zero block wherever both endpoints are known and no block exists.
  void fill_zero_blocks() {
    for (const Arrow& a : quiver_.arrows())
      for (int d = window_.lo; d + a.degree <= window_.hi; ++d) {
        const auto src = dim(a.source, d);
        const auto tgt = dim(a.target, d + a.degree);
        if (src && tgt && !block(a.id, d)) blocks_.emplace(ArrowDegree{a.id, d}, Matrix(field_, *tgt, *src));
      }
  }

  /// Shape errors among the stored blocks; empty for a well-formed representation.
  std::vector<std::string> shape_errors() const {
    std::vector<std::string> errors;
    for (const auto& [key, m] : blocks_) {
      const Arrow* a = quiver_.find_arrow(key.first);
      if (a == nullptr) {
        errors.push_back("block for unknown arrow '" + key.first.name + "'");
        continue;
      }
      const auto src = dim(a->source, key.second);
      const auto tgt = dim(a->target, key.second + a->degree);
      if (!src || !tgt || m.rows() != *tgt || m.cols() != *src)
        errors.push_back("block " + key.first.name + "@" + std::to_string(key.second) +
                         " does not match its components");
    }
    return errors;
  }

  friend bool operator==(const GradedRep&, const GradedRep&) = default;

 private:
  WeightedQuiver quiver_;
  Field field_;
  DegreeWindow window_;
  std::map<VertexDegree, std::size_t> dims_;
  std::map<ArrowDegree, Matrix> blocks_;
};

/// True when every component and block along p starting in degree d is known.
inline bool can_evaluate(const GradedRep& m, const Path& p, int d) {
  if (!m.known(p.source(), d)) return false;
  const WeightedQuiver& q = m.quiver();
  for (const ArrowId& a : p.arrows()) {
    if (m.block(a, d) == nullptr) return false;
    d += q.arrow(a).degree;
  }
  return true;
}

/// M_{p,d}: (s(p), d) -> (t(p), d + deg p).  Throws WindowOverflow when the
/// path leaves the known data.
inline Matrix evaluate_path(const GradedRep& m, const Path& p, int d) {
  const auto n = m.dim(p.source(), d);
  if (!n)
    throw WindowOverflow("component " + p.source().name + "@" + std::to_string(d) + " unknown");
  Matrix acc = Matrix::identity(m.field(), *n);
  for (const ArrowId& a : p.arrows()) {
    const Matrix* block = m.block(a, d);
    if (block == nullptr)
      throw WindowOverflow("block " + a.name + "@" + std::to_string(d) + " unknown");
    acc = *block * acc;
    d += m.quiver().arrow(a).degree;
  }
  return acc;
}

inline bool can_evaluate(const GradedRep& m, const PathSum& rho, int d) {
  for (const auto& [p, c] : rho.terms())
    if (!can_evaluate(m, p, d)) return false;
  return true;
}

/// M_{rho,d} = sum of c * M_{p,d}.  rho must be uniform and nonzero.
inline Matrix evaluate_relation(const GradedRep& m, const UniformElement& rho, int d) {
  const auto rows = m.dim(rho.target, d + rho.degree);
  const auto cols = m.dim(rho.source, d);
  if (!rows || !cols) throw WindowOverflow("relation endpoints leave the known components");
  Matrix acc(m.field(), *rows, *cols);
  const PathSum sum = to_field(rho.sum, m.field());
  for (const auto& [p, c] : sum.terms()) acc += evaluate_path(m, p, d) * c;
  return acc;
}

struct RelationViolation {
  std::size_t generator = 0;
  int degree = 0;
};

struct Satisfaction {
  bool ok = true;
  std::vector<RelationViolation> violations;
  std::size_t checked = 0;  ///< (generator, degree) pairs that were interior
};

/// Checks M_rho = 0 for every generator at every degree where it can be evaluated.
inline Satisfaction satisfies(const GradedRep& m, const IdealPresentation& ideal) {
  Satisfaction out;
  const DegreeWindow w = m.window();
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const UniformElement& rho = ideal.generators[i];
    for (int d = w.lo; d + rho.degree <= w.hi; ++d) {
      if (!can_evaluate(m, rho.sum, d) || !m.known(rho.target, d + rho.degree)) continue;
      ++out.checked;
      if (!evaluate_relation(m, rho, d).is_zero()) {
        out.ok = false;
        out.violations.push_back({i, d});
      }
    }
  }
  return out;
}

/// M(n): component (v, d) of the result is component (v, d + n) of M.
inline GradedRep shift(const GradedRep& m, int n) {
  GradedRep out(m.quiver(), m.field(), m.window().shifted(-n));
  for (const auto& [key, dim] : m.dims()) out.set_dim(key.first, key.second - n, dim);
  for (const auto& [key, block] : m.blocks()) out.set_block(key.first, key.second - n, block);
  return out;
}

/// M ⊕ N on the components known in both.
inline GradedRep direct_sum(const GradedRep& m, const GradedRep& n) {
  if (m.quiver() != n.quiver() || m.window() != n.window() || m.field() != n.field())
    throw std::invalid_argument("direct_sum of incompatible representations");
  GradedRep out(m.quiver(), m.field(), m.window());
  for (const auto& [key, dim] : m.dims())
    if (auto other = n.dim(key.first, key.second)) out.set_dim(key.first, key.second, dim + *other);
  for (const auto& [key, block] : m.blocks())
    if (const Matrix* other = n.block(key.first, key.second))
      out.set_block(key.first, key.second, block_diagonal(block, *other));
  return out;
}

/// A degree-0 map of representations: one matrix per component known on
/// both sides.
struct GradedMorphism {
  GradedRep source;
  GradedRep target;
  std::map<VertexDegree, Matrix> components;

  const Matrix* component(const VertexId& v, int d) const {
    auto it = components.find({v, d});
    return it == components.end() ? nullptr : &it->second;
  }

  friend bool operator==(const GradedMorphism&, const GradedMorphism&) = default;
};

inline GradedMorphism identity_morphism(const GradedRep& m) {
  GradedMorphism phi{m, m, {}};
  for (const auto& [key, dim] : m.dims()) phi.components.emplace(key, Matrix::identity(m.field(), dim));
  return phi;
}

/// The (arrow, degree) squares phi_t * M_a = N_a * phi_s that fail, plus any
/// component whose shape is wrong.
inline std::vector<ArrowDegree> square_violations(const GradedMorphism& phi) {
  std::vector<ArrowDegree> out;
  for (const auto& [key, m] : phi.components) {
    const auto src = phi.source.dim(key.first, key.second);
    const auto tgt = phi.target.dim(key.first, key.second);
    if (!src || !tgt || m.rows() != *tgt || m.cols() != *src)
      out.push_back({ArrowId{"<component " + key.first.name + ">"}, key.second});
  }
  if (!out.empty()) return out;
  for (const auto& [key, ma] : phi.source.blocks()) {
    const Arrow& a = phi.source.quiver().arrow(key.first);
    const int d = key.second;
    const Matrix* na = phi.target.block(a.id, d);
    const Matrix* ps = phi.component(a.source, d);
    const Matrix* pt = phi.component(a.target, d + a.degree);
    if (na == nullptr || ps == nullptr || pt == nullptr) continue;
    if (!(*pt * ma == *na * *ps)) out.push_back(key);
  }
  return out;
}

inline bool commutes(const GradedMorphism& phi) { return square_violations(phi).empty(); }

/// psi ∘ phi, on components where both are defined.
inline GradedMorphism compose(const GradedMorphism& psi, const GradedMorphism& phi) {
  if (!(phi.target == psi.source))
    throw std::invalid_argument("compose: target of the first map is not the source of the second");
  GradedMorphism out{phi.source, psi.target, {}};
  for (const auto& [key, m] : phi.components)
    if (const Matrix* n = psi.component(key.first, key.second))
      out.components.emplace(key, *n * m);
  return out;
}

struct KernelResult {
  GradedRep kernel;
  GradedMorphism inclusion;
};

struct CokernelResult {
  GradedRep cokernel;
  GradedMorphism projection;
};

/// Componentwise nullspace with the induced arrow action.
inline KernelResult morphism_kernel(const GradedMorphism& phi) {
  const GradedRep& m = phi.source;
  GradedRep k(m.quiver(), m.field(), m.window());
  std::map<VertexDegree, Matrix> basis;
  for (const auto& [key, c] : phi.components) {
    Matrix b = nullspace(c);
    k.set_dim(key.first, key.second, b.cols());
    basis.emplace(key, std::move(b));
  }
  for (const auto& [key, ma] : m.blocks()) {
    const Arrow& a = m.quiver().arrow(key.first);
    auto s = basis.find({a.source, key.second});
    auto t = basis.find({a.target, key.second + a.degree});
    if (s == basis.end() || t == basis.end()) continue;
    // M_a maps ker phi_s into ker phi_t, so M_a * B_s = B_t * X is solvable.
    k.set_block(a.id, key.second, solve(t->second, ma * s->second));
  }
  GradedMorphism inclusion{k, m, std::move(basis)};
  return {std::move(k), std::move(inclusion)};
}

/// Componentwise quotient target / image with the induced arrow action.
inline CokernelResult morphism_cokernel(const GradedMorphism& phi) {
  const GradedRep& n = phi.target;
  GradedRep c(n.quiver(), n.field(), n.window());
  std::map<VertexDegree, Matrix> proj;
  std::map<VertexDegree, Matrix> section;
  for (const auto& [key, m] : phi.components) {
    Matrix q = cokernel_projection(m);
    c.set_dim(key.first, key.second, q.rows());
    section.emplace(key, solve(q, Matrix::identity(n.field(), q.rows())));
    proj.emplace(key, std::move(q));
  }
  for (const auto& [key, na] : n.blocks()) {
    const Arrow& a = n.quiver().arrow(key.first);
    auto s = section.find({a.source, key.second});
    auto t = proj.find({a.target, key.second + a.degree});
    if (s == section.end() || t == proj.end()) continue;
    c.set_block(a.id, key.second, t->second * na * s->second);
  }
  GradedMorphism projection{n, c, std::move(proj)};
  return {std::move(c), std::move(projection)};
}

}  // namespace regrade
