#pragma once

// Graded-piece dimensions of kQ/I by exact linear algebra in each degree.

#include "regrade/matrix.hpp"
#include "regrade/path.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace regrade {

struct HilbertOptions {
  Field field = Field::rationals();
  std::optional<VertexId> vertex;  ///< restrict to e_v (kQ/I): paths starting at v
  std::size_t max_paths = std::numeric_limits<std::size_t>::max();
};

/// The matrix whose rows are the products p * rho * q of degree d, in the
/// coordinates of the degree-d path basis `basis`.
inline Matrix ideal_slice(const WeightedQuiver& q, const IdealPresentation& ideal, int d,
                          const std::vector<Path>& basis, const HilbertOptions& opts) {
  std::map<Path, std::size_t> column;
  for (std::size_t j = 0; j < basis.size(); ++j) column.emplace(basis[j], j);
  std::vector<PathSum> rows;
  for (const UniformElement& g : ideal.generators) {
    const PathSum rho = to_field(g.sum, opts.field);
    if (rho.is_zero() || g.degree > d) continue;
    for (int left = 0; left + g.degree <= d; ++left) {
      const auto lefts = enumerate_paths(q, left, opts.vertex, g.source, opts.max_paths);
      const auto rights =
          enumerate_paths(q, d - g.degree - left, g.target, std::nullopt, opts.max_paths);
      for (const Path& p : lefts) {
        const PathSum prho = multiply_sums(PathSum::of(opts.field, p), rho);
        for (const Path& r : rights) rows.push_back(multiply_sums(prho, PathSum::of(opts.field, r)));
      }
    }
  }
  Matrix m(opts.field, rows.size(), basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [p, c] : rows[i].terms()) m(i, column.at(p)) = c;
  return m;
}

/// dim (kQ/I)_d, or dim e_v (kQ/I)_d when opts.vertex is set.
inline std::size_t graded_piece_dim(const WeightedQuiver& q, const IdealPresentation& ideal, int d,
                                    const HilbertOptions& opts = {}) {
  if (d < 0) return 0;
  const auto basis = enumerate_paths(q, d, opts.vertex, std::nullopt, opts.max_paths);
  if (basis.empty()) return 0;
  return basis.size() - rank(ideal_slice(q, ideal, d, basis, opts));
}

/// graded_piece_dim for d = 0..max_degree.
inline std::vector<std::size_t> hilbert_table(const WeightedQuiver& q,
                                              const IdealPresentation& ideal, int max_degree,
                                              const HilbertOptions& opts = {}) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(graded_piece_dim(q, ideal, d, opts));
  return out;
}

}  // namespace regrade
