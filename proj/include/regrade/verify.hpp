#pragma once

// Seeded property suites over random quivers, relations and representations,
// plus fixed golden instances.  A suite is a pure function of its SuiteConfig:
// trial i draws from make_rng(master_seed, i, stream), so reports are
// reproducible byte for byte and every failure names the trial to replay.

#include "regrade/functors.hpp"
#include "regrade/hilbert.hpp"
#include "regrade/path.hpp"
#include "regrade/quiver.hpp"
#include "regrade/random.hpp"
#include "regrade/representation.hpp"
#include "regrade/split.hpp"
#include "regrade/text_format.hpp"

#include <json.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace regrade {

struct SuiteConfig {
  std::uint64_t master_seed = 0;
  std::size_t trials = 200;
  DegreeWindow window{-2, 10};
  std::size_t max_dim = 3;
  Field field = Field::prime(kDefaultPrime);
  int max_degree = 10;
  /// A user presentation exercised alongside the built-in goldens.
  std::optional<PresentationFile> extra;
  /// Record wall time in reports (off by default so reports stay byte-stable).
  bool timing = false;
};

struct Counterexample {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string detail;
};

struct PropertyResult {
  std::string property;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t warnings = 0;
  std::optional<Counterexample> first_counterexample;
  std::string first_warning;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyResult> properties;
  std::optional<double> wall_seconds;

  bool passed() const {
    for (const auto& p : properties)
      if (p.failures > 0) return false;
    return true;
  }

  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.property == name) return &p;
    return nullptr;
  }
};

namespace detail {

// Accumulates per-property outcomes in first-seen order.
class PropertyLog {
 public:
  explicit PropertyLog(std::uint64_t seed) : seed_(seed) {}

  /// Records one trial of `name`.  `check` returns an empty string on success
  /// or a description of the failure; exceptions count as failures.
  void run(const std::string& name, std::size_t trial, const std::function<std::string()>& check) {
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    PropertyResult& r = entry(name);
    ++r.trials;
    if (failure.empty()) return;
    ++r.failures;
    if (!r.first_counterexample) r.first_counterexample = Counterexample{seed_, trial, failure};
  }

  void warn(const std::string& name, const std::string& message) {
    PropertyResult& r = entry(name);
    if (r.warnings++ == 0) r.first_warning = message;
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  PropertyResult& entry(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, results_.size());
    if (inserted) results_.push_back(PropertyResult{name, 0, 0, 0, std::nullopt, {}});
    return results_[it->second];
  }

  std::uint64_t seed_;
  std::vector<PropertyResult> results_;
  std::map<std::string, std::size_t> index_;
};

inline std::string instance_text(const WeightedQuiver& q, const IdealPresentation& ideal,
                                 const std::optional<ArrowId>& split = std::nullopt) {
  std::vector<std::string> comments;
  if (split) comments.push_back("split arrow " + split->name);
  return serialize_presentation(q, ideal, comments);
}

inline const Arrow& random_split_target(Rng& rng, const WeightedQuiver& q) {
  std::vector<const Arrow*> targets;
  for (const Arrow& a : q.arrows())
    if (a.degree >= 2) targets.push_back(&a);
  return *targets[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<long long>(targets.size()) - 1))];
}

// g ∘ f = 0 and rank f + rank g = dim of the middle space; a null f is the
// map from 0, a null g the map to 0.
inline bool exact_at(const Matrix* f, const Matrix* g, std::size_t middle) {
  const std::size_t rf = f ? rank(*f) : 0;
  const std::size_t rg = g ? rank(*g) : 0;
  if (f && g && !(*g * *f).is_zero()) return false;
  return rf + rg == middle;
}

// Checks 0 -> K -> M -> B -> C -> 0 at every component known throughout.
inline std::string sequence_exactness(const GradedMorphism& incl, const GradedMorphism& phi,
                                      const GradedMorphism& proj) {
  for (const auto& [key, dim] : phi.source.dims()) {
    const Matrix* i = incl.component(key.first, key.second);
    const Matrix* p = phi.component(key.first, key.second);
    const Matrix* q = proj.component(key.first, key.second);
    if (!i || !p || !q) continue;
    const std::string where = key.first.name + "@" + std::to_string(key.second);
    if (!exact_at(nullptr, i, i->cols())) return "inclusion not injective at " + where;
    if (!exact_at(i, p, dim)) return "not exact at the middle term, " + where;
    if (!exact_at(p, q, p->rows())) return "not exact at the target, " + where;
    if (!exact_at(q, nullptr, q->rows())) return "projection not surjective at " + where;
  }
  return {};
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

// Every component away from z is zero-dimensional and every block vanishes.
inline std::string supported_at(const GradedRep& m, const VertexId& z, const char* what) {
  for (const auto& [key, dim] : m.dims())
    if (key.first != z && dim != 0)
      return std::string(what) + " has dimension " + std::to_string(dim) + " at " + key.first.name +
             "@" + std::to_string(key.second);
  for (const auto& [key, block] : m.blocks())
    if (!block.is_zero())
      return std::string(what) + " has a nonzero action of " + key.first.name + "@" +
             std::to_string(key.second);
  return {};
}

// An independent dense route to dim e_v (kQ/I)_d: brute-force words,
// explicit concatenation, textbook rational elimination.
inline std::size_t naive_piece_dim(const WeightedQuiver& q, const IdealPresentation& ideal, int d,
                                   const VertexId& v) {
  using Word = std::vector<std::string>;
  const auto& arrows = q.arrows();
  auto walks = [&](int degree, const std::string& from) {
    std::vector<std::pair<Word, std::string>> out;  // word, end vertex
    std::vector<std::pair<Word, std::pair<std::string, int>>> frontier{{{}, {from, 0}}};
    while (!frontier.empty()) {
      auto [w, state] = frontier.back();
      frontier.pop_back();
      if (state.second == degree) {
        out.emplace_back(w, state.first);
        continue;
      }
      for (const Arrow& a : arrows)
        if (a.source.name == state.first && state.second + a.degree <= degree) {
          Word next = w;
          next.push_back(a.id.name);
          frontier.push_back({next, {a.target.name, state.second + a.degree}});
        }
    }
    return out;
  };
  std::map<Word, std::size_t> index;
  for (const auto& [w, end] : walks(d, v.name)) index.emplace(w, 0);
  std::size_t k = 0;
  for (auto& [w, i] : index) i = k++;
  if (index.empty()) return 0;

  std::vector<std::vector<Rational>> rows;
  for (const UniformElement& g : ideal.generators) {
    for (int left = 0; left + g.degree <= d; ++left) {
      for (const auto& [pw, pend] : walks(left, v.name)) {
        if (pend != g.source.name) continue;
        for (const auto& [qw, qend] : walks(d - left - g.degree, g.target.name)) {
          std::vector<Rational> row(index.size());
          for (const auto& [path, coef] : g.sum.terms()) {
            Word full = pw;
            for (const ArrowId& a : path.arrows()) full.push_back(a.name);
            full.insert(full.end(), qw.begin(), qw.end());
            row[index.at(full)] += coef.rational();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  std::size_t r = 0;
  const std::size_t cols = index.size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return cols - r;
}

}  // namespace detail

/// The k[x,y] presentation: one vertex v, loops x (degree 1) and y (degree 2),
/// relation x*y - y*x.
inline PresentationFile kxy_presentation(Field field = Field::rationals()) {
  return parse_presentation_or_throw(
      "[quiver]\nvertex v\narrow x v v 1\narrow y v v 2\n[relations]\nx*y - y*x\n", field);
}

/// Two vertices l, r; loops a at l and d at r; parallel arrows b, c: l -> r
/// with deg(b) = b_degree.  No relations.
inline WeightedQuiver parallel_arrows_quiver(int b_degree) {
  return WeightedQuiver({VertexId{"l"}, VertexId{"r"}},
                        {{ArrowId{"a"}, VertexId{"l"}, VertexId{"l"}, 1},
                         {ArrowId{"b"}, VertexId{"l"}, VertexId{"r"}, b_degree},
                         {ArrowId{"c"}, VertexId{"l"}, VertexId{"r"}, 1},
                         {ArrowId{"d"}, VertexId{"r"}, VertexId{"r"}, 1}});
}

inline SuiteReport run_split_suite(const SuiteConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  detail::PropertyLog log(cfg.master_seed);

  log.run("split.parallel_arrows_golden", 0, [] {
    for (int degree : {2, 3}) {
      const WeightedQuiver q = parallel_arrows_quiver(degree);
      const SplitTrace t = split_arrow(q, ArrowId{"b"});
      const WeightedQuiver expected(
          {VertexId{"l"}, VertexId{"r"}, VertexId{"z"}},
          {{ArrowId{"a"}, VertexId{"l"}, VertexId{"l"}, 1},
           {ArrowId{"b'"}, VertexId{"l"}, VertexId{"z"}, 1},
           {ArrowId{"b''"}, VertexId{"z"}, VertexId{"r"}, degree - 1},
           {ArrowId{"c"}, VertexId{"l"}, VertexId{"r"}, 1},
           {ArrowId{"d"}, VertexId{"r"}, VertexId{"r"}, 1}});
      if (!(t.after == expected))
        return "split of b (degree " + std::to_string(degree) + ") gave\n" +
               serialize_presentation(t.after, {});
    }
    return std::string();
  });

  log.run("split.rewrite_golden", 0, [] {
    const WeightedQuiver q = parallel_arrows_quiver(2);
    const SplitTrace t = split_arrow(q, ArrowId{"b"});
    const Path f1 = rewrite_path(t, Path::of(q, {"a", "a", "b", "d"}));
    const Path f2 = rewrite_path(t, Path::of(q, {"a", "c", "d"}));
    if (f1.to_string() != "a*a*b'*b''*d") return "f(a*a*b*d) = " + f1.to_string();
    if (f2.to_string() != "a*c*d") return "f(a*c*d) = " + f2.to_string();
    return std::string();
  });

  log.run("split.kxy_golden", 0, [] {
    const PresentationFile p = kxy_presentation();
    const RegradeResult r = regrade(p.quiver, p.ideal);
    const std::string text = serialize_presentation(r.final_quiver, r.final_ideal);
    const std::string expected =
        "[quiver]\nvertex v\nvertex z\narrow x v v 1\narrow y' v z 1\narrow y'' z v 1\n"
        "[relations]\nx*y'*y'' - y'*y''*x\n";
    if (r.trace.size() != 1) return "expected 1 split, got " + std::to_string(r.trace.size());
    if (text != expected) return "regraded k[x,y] presentation:\n" + text;
    return std::string();
  });

  if (cfg.extra) {
    log.run("split.file_regrade", 0, [&] {
      const PresentationFile& p = *cfg.extra;
      const RegradeResult r = regrade(p.quiver, p.ideal);
      if (static_cast<long long>(r.trace.size()) != weight_discrepancy(p.quiver))
        return std::string("trace length differs from D(Q)");
      if (weight_discrepancy(r.final_quiver) != 0) return std::string("final quiver has D > 0");
      const PresentationFile back =
          parse_presentation_or_throw(serialize_presentation(r.final_quiver, r.final_ideal));
      if (!(back.quiver == r.final_quiver) || !(back.ideal == r.final_ideal))
        return std::string("regraded presentation does not re-parse to itself");
      return std::string();
    });
  }

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = make_rng(cfg.master_seed, trial, 1);
    const WeightedQuiver q = random_quiver(rng);
    const IdealPresentation ideal = random_ideal(rng, q, Field::rationals());
    const Arrow& b = detail::random_split_target(rng, q);
    const auto where = [&] { return detail::instance_text(q, ideal, b.id); };

    log.run("split.discrepancy_decrement", trial, [&] {
      const SplitTrace t = split_arrow(q, b.id);
      if (weight_discrepancy(t.after) != weight_discrepancy(q) - 1)
        return "D(after) != D(before) - 1 for\n" + where();
      if (!validate(t.after).empty()) return "split produced an invalid quiver for\n" + where();
      if (t.after.find_arrow(b.id) != nullptr || t.after.arrow(t.first).degree != 1 ||
          t.after.arrow(t.second).degree != b.degree - 1 ||
          t.after.vertices().size() != q.vertices().size() + 1)
        return "split shape is wrong for\n" + where();
      return std::string();
    });

    RegradeResult full;
    log.run("split.regrade_terminates", trial, [&] {
      full = regrade(q, ideal);
      if (static_cast<long long>(full.trace.size()) != weight_discrepancy(q))
        return "trace length " + std::to_string(full.trace.size()) + " != D(Q) for\n" + where();
      if (full.final_quiver.max_degree() > 1) return "final quiver keeps a degree > 1 arrow for\n" + where();
      for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        const UniformElement& before = ideal.generators[i];
        const UniformElement& after = full.final_ideal.generators[i];
        PathSum composed = before.sum;
        for (const SplitTrace& t : full.trace) composed = rewrite_sum(t, composed);
        if (!(composed == after.sum) || after.source != before.source ||
            after.target != before.target || after.degree != before.degree)
          return "generator " + std::to_string(i) + " was not transported faithfully for\n" + where();
        for (const auto& [p, c] : after.sum.terms())
          Path::of(full.final_quiver, p.arrows());  // throws if not a path of the final quiver
      }
      return std::string();
    });

    log.run("split.regrade_idempotent", trial, [&] {
      const RegradeResult again = regrade(full.final_quiver, full.final_ideal);
      if (!again.trace.empty() || !(again.final_quiver == full.final_quiver) ||
          !(again.final_ideal == full.final_ideal))
        return "regrade is not the identity on a degree-1 presentation for\n" + where();
      return std::string();
    });

    const SplitTrace t = split_arrow(q, b.id);
    for (int pair = 0; pair < 5; ++pair) {
      const Path p = random_path(rng, q, 4);
      const bool composable = uniform_int(rng, 0, 3) != 0;
      const Path r = composable ? random_path(rng, q, 4, p.target()) : random_path(rng, q, 4);
      const auto pair_text = [&] {
        return "p = " + p.to_string() + ", q = " + r.to_string() + " in\n" + where();
      };
      log.run("split.rewrite_degree", trial, [&] {
        const Path fp = rewrite_path(t, p);
        if (fp.degree() != p.degree() || fp.source() != p.source() || fp.target() != p.target())
          return "f changes degree or endpoints of " + pair_text();
        return std::string();
      });
      log.run("split.rewrite_multiplicative", trial, [&] {
        const auto pq = multiply_paths(p, r);
        const auto fpfq = multiply_paths(rewrite_path(t, p), rewrite_path(t, r));
        if (pq.has_value() != fpfq.has_value()) return "zero pattern differs for " + pair_text();
        if (pq && !(rewrite_path(t, *pq) == *fpfq)) return "f(pq) != f(p)f(q) for " + pair_text();
        return std::string();
      });
    }
  }

  SuiteReport report{"split", cfg, log.take(), std::nullopt};
  if (cfg.timing)
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline SuiteReport run_functor_suite(const SuiteConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  detail::PropertyLog log(cfg.master_seed);
  const Field field = cfg.field;

  const PresentationFile kxy = kxy_presentation(field);
  const SplitTrace kxy_split = split_arrow(kxy.quiver, ArrowId{"y"});
  const IdealPresentation kxy_image = rewrite_ideal(kxy_split, kxy.ideal);
  const WeightedQuiver cubic({VertexId{"v"}}, {{ArrowId{"w"}, VertexId{"v"}, VertexId{"v"}, 3}});
  const RegradeResult cubic_regrade = regrade(cubic, {});

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = make_rng(cfg.master_seed, trial, 2);
    const WeightedQuiver q = random_quiver(rng);
    const IdealPresentation ideal = random_ideal(rng, q, field);
    const Arrow& b = detail::random_split_target(rng, q);
    const SplitTrace t = split_arrow(q, b.id);
    const GradedRep m = random_rep(rng, q, field, cfg.window, cfg.max_dim);
    const GradedRep fm = functor_F(t, m);
    const auto where = [&](const GradedRep& rep) {
      return detail::instance_text(q, ideal, b.id) + serialize_representation(rep);
    };

    log.run("functor.gf_identity", trial, [&] {
      if (!(functor_G(t, fm) == m)) return "G(F(M)) != M for\n" + where(m);
      return std::string();
    });

    log.run("functor.relation_transport", trial, [&] {
      for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        const UniformElement& rho = ideal.generators[i];
        const UniformElement f_rho = rewrite_sum(t, rho);
        for (int d = cfg.window.lo; d + rho.degree <= cfg.window.hi; ++d) {
          if (!can_evaluate(m, rho.sum, d)) continue;
          if (!can_evaluate(fm, f_rho.sum, d))
            return "F(M) cannot evaluate f(rho_" + std::to_string(i) + ") at interior degree " +
                   std::to_string(d) + " for\n" + where(m);
          if (!(evaluate_relation(fm, f_rho, d) == evaluate_relation(m, rho, d)))
            return "F(M)_{f(rho_" + std::to_string(i) + ")} != M_rho at degree " +
                   std::to_string(d) + " for\n" + where(m);
        }
      }
      return std::string();
    });

    log.run("functor.shift_compat", trial, [&] {
      if (!(functor_F(t, shift(m, 1)) == shift(fm, 1))) return "F(M(1)) != F(M)(1) for\n" + where(m);
      return std::string();
    });

    log.run("functor.exactness", trial, [&] {
      const GradedMorphism phi = random_morphism_from(rng, m, cfg.max_dim);
      const KernelResult k = morphism_kernel(phi);
      const CokernelResult c = morphism_cokernel(phi);
      if (auto err = detail::sequence_exactness(k.inclusion, phi, c.projection); !err.empty())
        return "input sequence: " + err + " for\n" + where(m);
      const GradedMorphism fi = functor_on_morphism(t, Direction::F, k.inclusion);
      const GradedMorphism fphi = functor_on_morphism(t, Direction::F, phi);
      const GradedMorphism fp = functor_on_morphism(t, Direction::F, c.projection);
      if (!commutes(fi) || !commutes(fphi) || !commutes(fp))
        return "F of a morphism fails a commuting square for\n" + where(m);
      if (auto err = detail::sequence_exactness(fi, fphi, fp); !err.empty())
        return "image under F: " + err + " for\n" + where(m);
      return std::string();
    });

    log.run("functor.morphism_functoriality", trial, [&] {
      const GradedMorphism phi = random_morphism_from(rng, m, cfg.max_dim);
      const GradedMorphism psi = random_morphism_from(rng, phi.target, cfg.max_dim);
      if (!(functor_on_morphism(t, Direction::F, identity_morphism(m)) == identity_morphism(fm)))
        return "F(id) != id for\n" + where(m);
      const GradedMorphism fphi = functor_on_morphism(t, Direction::F, phi);
      if (!(functor_on_morphism(t, Direction::G, fphi) == phi)) return "G(F(phi)) != phi for\n" + where(m);
      const GradedMorphism lhs = functor_on_morphism(t, Direction::F, compose(psi, phi));
      const GradedMorphism rhs = compose(functor_on_morphism(t, Direction::F, psi), fphi);
      if (!(lhs == rhs)) return "F(psi o phi) != F(psi) o F(phi) for\n" + where(m);
      return std::string();
    });

    const GradedRep n = random_rep(rng, t.after, field, cfg.window, cfg.max_dim);
    const auto where_n = [&] {
      return detail::instance_text(q, ideal, b.id) + serialize_representation(n, "N");
    };

    log.run("functor.counit_support", trial, [&] {
      const GradedMorphism eps = counit_epsilon(t, n);
      if (!commutes(eps)) return "eps_N is not a morphism for\n" + where_n();
      const KernelResult k = morphism_kernel(eps);
      const CokernelResult c = morphism_cokernel(eps);
      if (auto err = detail::supported_at(k.kernel, t.new_vertex, "Ker eps_N"); !err.empty())
        return err + " for\n" + where_n();
      if (auto err = detail::supported_at(c.cokernel, t.new_vertex, "Coker eps_N"); !err.empty())
        return err + " for\n" + where_n();
      return std::string();
    });

    log.run("functor.counit_iso_on_image", trial, [&] {
      const GradedMorphism eps = counit_epsilon(t, fm);
      if (!commutes(eps)) return "eps_F(M) is not a morphism for\n" + where(m);
      for (const auto& [key, c] : eps.components)
        if (!detail::is_invertible(c))
          return "eps_F(M) is not invertible at " + key.first.name + "@" + std::to_string(key.second) +
                 " for\n" + where(m);
      return std::string();
    });

    log.run("functor.counit_naturality", trial, [&] {
      const GradedMorphism psi = random_morphism_from(rng, n, cfg.max_dim);
      const GradedMorphism fg_psi =
          functor_on_morphism(t, Direction::F, functor_on_morphism(t, Direction::G, psi));
      const GradedMorphism lhs = compose(counit_epsilon(t, psi.target), fg_psi);
      const GradedMorphism rhs = compose(psi, counit_epsilon(t, n));
      if (!(lhs.components == rhs.components)) return "eps_N' o FG(psi) != psi o eps_N for\n" + where_n();
      return std::string();
    });

    log.run("functor.kxy_relations", trial, [&] {
      const GradedRep c = commuting_loop_rep(rng, kxy.quiver, ArrowId{"x"}, ArrowId{"y"}, field,
                                             cfg.window, cfg.max_dim);
      const Satisfaction base = satisfies(c, kxy.ideal);
      if (!base.ok || base.checked == 0) return "constructed k[x,y] module violates xy = yx:\n" + serialize_representation(c);
      const GradedRep fc = functor_F(kxy_split, c);
      const Satisfaction image = satisfies(fc, kxy_image);
      if (!image.ok || image.checked == 0) return "F(M) violates x*y'*y'' = y'*y''*x for\n" + serialize_representation(c);
      for (int d = cfg.window.lo; d + 3 <= cfg.window.hi; ++d)
        if (!(evaluate_relation(fc, kxy_image.generators[0], d) ==
              evaluate_relation(c, kxy.ideal.generators[0], d)))
          return "transport fails at degree " + std::to_string(d) + " for\n" + serialize_representation(c);
      if (!satisfies(functor_G(kxy_split, fc), kxy.ideal).ok) return std::string("G(F(M)) violates xy = yx");
      return std::string();
    });

    log.run("functor.multistep_gf", trial, [&] {
      const GradedRep c = random_rep(rng, cubic, field, cfg.window, cfg.max_dim);
      const GradedRep image = functor_F(cubic_regrade.trace, c);
      if (!(image.quiver() == cubic_regrade.final_quiver)) return std::string("F over the trace lands on the wrong quiver");
      if (!(functor_G(cubic_regrade.trace, image) == c))
        return "G(F(M)) != M over a two-split trace for\n" + serialize_representation(c);
      return std::string();
    });

    if (cfg.extra && weight_discrepancy(cfg.extra->quiver) > 0) {
      log.run("functor.file_instance", trial, [&] {
        const PresentationFile& p = *cfg.extra;
        const IdealPresentation pi = to_field(p.ideal, field);
        const RegradeResult r = regrade(p.quiver, pi);
        const SplitTrace& first = r.trace.front();
        const GradedRep c = random_rep(rng, p.quiver, field, cfg.window, cfg.max_dim);
        const GradedRep fc = functor_F(first, c);
        if (!(functor_G(first, fc) == c)) return "G(F(M)) != M for\n" + serialize_representation(c);
        for (const UniformElement& rho : pi.generators) {
          const UniformElement f_rho = rewrite_sum(first, rho);
          for (int d = cfg.window.lo; d + rho.degree <= cfg.window.hi; ++d)
            if (can_evaluate(c, rho.sum, d) &&
                !(evaluate_relation(fc, f_rho, d) == evaluate_relation(c, rho, d)))
              return "transport fails at degree " + std::to_string(d) + " for\n" + serialize_representation(c);
        }
        if (!(functor_G(r.trace, functor_F(r.trace, c)) == c))
          return "G(F(M)) != M over the full trace for\n" + serialize_representation(c);
        return std::string();
      });
    }
  }

  SuiteReport report{"functor", cfg, log.take(), std::nullopt};
  if (cfg.timing)
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline SuiteReport run_hilbert_suite(const SuiteConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  detail::PropertyLog log(cfg.master_seed);
  const Field prime = cfg.field.is_rational() ? Field::prime(kDefaultPrime) : cfg.field;
  const Field q_field = Field::rationals();

  const PresentationFile kxy = kxy_presentation();
  const RegradeResult kxy_regraded = regrade(kxy.quiver, kxy.ideal);

  log.run("hilbert.kxy_golden", 0, [&] {
    for (Field f : {q_field, prime}) {
      const auto table = hilbert_table(kxy.quiver, kxy.ideal, cfg.max_degree, {f, std::nullopt});
      for (int d = 0; d <= cfg.max_degree; ++d)
        if (table[static_cast<std::size_t>(d)] != static_cast<std::size_t>(d / 2 + 1))
          return "dim (k[x,y])_" + std::to_string(d) + " = " +
                 std::to_string(table[static_cast<std::size_t>(d)]) + " over " + f.to_string() +
                 ", expected " + std::to_string(d / 2 + 1);
    }
    return std::string();
  });

  struct Golden {
    std::string name;
    WeightedQuiver quiver;
    IdealPresentation ideal;
    std::optional<VertexId> vertex;
  };
  std::vector<Golden> goldens{
      {"k[x,y]", kxy.quiver, kxy.ideal, std::nullopt},
      {"regraded k[x,y]", kxy_regraded.final_quiver, kxy_regraded.final_ideal, std::nullopt},
      {"regraded k[x,y] at v", kxy_regraded.final_quiver, kxy_regraded.final_ideal, VertexId{"v"}},
  };
  {
    const WeightedQuiver par = parallel_arrows_quiver(2);
    goldens.push_back(
        {"parallel arrows with a*b - b*d", par,
         parse_presentation_or_throw(serialize_presentation(par, {}) + "a*b - b*d\n").ideal,
         std::nullopt});
  }
  if (cfg.extra) goldens.push_back({"input file", cfg.extra->quiver, cfg.extra->ideal, std::nullopt});

  for (std::size_t g = 0; g < goldens.size(); ++g) {
    const Golden& golden = goldens[g];
    log.run("hilbert.field_agreement", g, [&] {
      const int top = std::min(cfg.max_degree, 8);
      const auto over_q = hilbert_table(golden.quiver, golden.ideal, top, {q_field, golden.vertex});
      const auto over_p = hilbert_table(golden.quiver, golden.ideal, top, {prime, golden.vertex});
      if (over_q != over_p)
        log.warn("hilbert.field_agreement",
                 golden.name + ": dimensions over q and " + prime.to_string() +
                     " differ; retry with a different prime");
      return std::string();
    });
  }

  log.run("hilbert.naive_crosscheck", 0, [&] {
    const VertexId v{"v"};
    for (int d = 0; d <= cfg.max_degree; ++d) {
      const auto fast = graded_piece_dim(kxy_regraded.final_quiver, kxy_regraded.final_ideal, d, {q_field, v});
      const auto slow = detail::naive_piece_dim(kxy_regraded.final_quiver, kxy_regraded.final_ideal, d, v);
      if (fast != slow)
        return "e_v dimension in degree " + std::to_string(d) + ": " + std::to_string(fast) +
               " vs naive " + std::to_string(slow);
    }
    return std::string();
  });

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = make_rng(cfg.master_seed, trial, 3);
    const WeightedQuiver q = random_quiver(rng);
    const Arrow& b = detail::random_split_target(rng, q);
    const SplitTrace t = split_arrow(q, b.id);
    const GradedRep m = random_rep(rng, q, cfg.field, cfg.window, cfg.max_dim);

    log.run("hilbert.split_dimensions", trial, [&] {
      const GradedRep fm = functor_F(t, m);
      for (const VertexId& v : q.vertices())
        for (int d = cfg.window.lo; d <= cfg.window.hi; ++d)
          if (fm.dim(v, d) != m.dim(v, d))
            return "dim F(M) differs from dim M at " + v.name + "@" + std::to_string(d) + " for\n" +
                   detail::instance_text(q, {}, b.id) + serialize_representation(m);
      for (int d = cfg.window.lo; d <= cfg.window.hi; ++d)
        if (fm.dim(t.new_vertex, d) != m.dim(b.source, d - 1))
          return "dim F(M)_z differs from dim M_s(b)(-1) at degree " + std::to_string(d) + " for\n" +
                 detail::instance_text(q, {}, b.id) + serialize_representation(m);
      return std::string();
    });

    log.run("hilbert.free_counts", trial, [&] {
      const int d = static_cast<int>(uniform_int(rng, 0, 5));
      const auto dim = graded_piece_dim(q, {}, d, {prime, std::nullopt});
      if (dim != enumerate_paths(q, d).size())
        return "free algebra dimension in degree " + std::to_string(d) + " is not the path count for\n" +
               detail::instance_text(q, {});
      return std::string();
    });
  }

  SuiteReport report{"hilbert", cfg, log.take(), std::nullopt};
  if (cfg.timing)
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline std::vector<SuiteReport> run_suites(const std::string& which, const SuiteConfig& cfg) {
  std::vector<SuiteReport> out;
  if (which == "split" || which == "all") out.push_back(run_split_suite(cfg));
  if (which == "functor" || which == "all") out.push_back(run_functor_suite(cfg));
  if (which == "hilbert" || which == "all") out.push_back(run_hilbert_suite(cfg));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + which + "'");
  return out;
}

inline std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  const SuiteConfig& c = r.config;
  os << "suite " << r.suite << " (seed " << c.master_seed << ", trials " << c.trials << ", field "
     << c.field.to_string() << ", window " << c.window.lo << ":" << c.window.hi << ", max-dim "
     << c.max_dim << ")\n";
  for (const PropertyResult& p : r.properties) {
    os << (p.failures ? "FAIL " : "PASS ") << p.property << " trials=" << p.trials
       << " failures=" << p.failures;
    if (p.warnings) os << " warnings=" << p.warnings;
    os << '\n';
    if (p.warnings) os << "  warning: " << p.first_warning << '\n';
    if (p.first_counterexample) {
      os << "  first counterexample (seed " << p.first_counterexample->seed << ", trial "
         << p.first_counterexample->trial << "):\n";
      std::istringstream lines(p.first_counterexample->detail);
      for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
    }
  }
  if (r.wall_seconds) os << "wall time " << *r.wall_seconds << " s\n";
  os << (r.passed() ? "suite " + r.suite + " passed\n" : "suite " + r.suite + " FAILED\n");
  return os.str();
}

inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.config.master_seed;
  j["trials"] = r.config.trials;
  j["field"] = r.config.field.to_string();
  j["window"] = {r.config.window.lo, r.config.window.hi};
  j["max_dim"] = r.config.max_dim;
  j["passed"] = r.passed();
  auto& props = j["properties"] = nlohmann::ordered_json::array();
  for (const PropertyResult& p : r.properties) {
    nlohmann::ordered_json e;
    e["property"] = p.property;
    e["trials"] = p.trials;
    e["failures"] = p.failures;
    e["warnings"] = p.warnings;
    if (p.first_counterexample)
      e["first_counterexample"] = {{"seed", p.first_counterexample->seed},
                                   {"trial", p.first_counterexample->trial},
                                   {"detail", p.first_counterexample->detail}};
    else
      e["first_counterexample"] = nullptr;
    props.push_back(std::move(e));
  }
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j;
}

}  // namespace regrade
