#include "regrade/random.hpp"
#include "regrade/split.hpp"

#include <gtest/gtest.h>

using namespace regrade;

namespace {

const Field Q = Field::rationals();

WeightedQuiver parallel(int b_degree) {
  return WeightedQuiver({VertexId{"l"}, VertexId{"r"}},
                        {{ArrowId{"a"}, VertexId{"l"}, VertexId{"l"}, 1},
                         {ArrowId{"b"}, VertexId{"l"}, VertexId{"r"}, b_degree},
                         {ArrowId{"c"}, VertexId{"l"}, VertexId{"r"}, 1},
                         {ArrowId{"d"}, VertexId{"r"}, VertexId{"r"}, 1}});
}

WeightedQuiver kxy() {
  return WeightedQuiver({VertexId{"v"}}, {{ArrowId{"x"}, VertexId{"v"}, VertexId{"v"}, 1},
                                          {ArrowId{"y"}, VertexId{"v"}, VertexId{"v"}, 2}});
}

}  // namespace

TEST(SplitArrow, ParallelArrowsQuiver) {
  for (int degree : {2, 3, 5}) {
    const SplitTrace t = split_arrow(parallel(degree), ArrowId{"b"});
    EXPECT_EQ(t.new_vertex, VertexId{"z"});
    const Arrow& first = t.after.arrow(ArrowId{"b'"});
    const Arrow& second = t.after.arrow(ArrowId{"b''"});
    EXPECT_EQ(first.source, VertexId{"l"});
    EXPECT_EQ(first.target, VertexId{"z"});
    EXPECT_EQ(first.degree, 1);
    EXPECT_EQ(second.source, VertexId{"z"});
    EXPECT_EQ(second.target, VertexId{"r"});
    EXPECT_EQ(second.degree, degree - 1);
    EXPECT_EQ(t.after.find_arrow(ArrowId{"b"}), nullptr);
    for (const char* kept : {"a", "c", "d"}) EXPECT_EQ(t.after.arrow(ArrowId{kept}), t.before.arrow(ArrowId{kept}));
    EXPECT_EQ(weight_discrepancy(t.after), weight_discrepancy(t.before) - 1);
  }
}

TEST(SplitArrow, KxyGivesTwoVertexQuiver) {
  const SplitTrace t = split_arrow(kxy(), ArrowId{"y"});
  const WeightedQuiver expected({VertexId{"v"}, VertexId{"z"}},
                                {{ArrowId{"x"}, VertexId{"v"}, VertexId{"v"}, 1},
                                 {ArrowId{"y'"}, VertexId{"v"}, VertexId{"z"}, 1},
                                 {ArrowId{"y''"}, VertexId{"z"}, VertexId{"v"}, 1}});
  EXPECT_EQ(t.after, expected);
}

TEST(SplitArrow, Errors) {
  EXPECT_THROW(split_arrow(kxy(), ArrowId{"x"}), std::invalid_argument);
  EXPECT_THROW(split_arrow(kxy(), ArrowId{"w"}), std::invalid_argument);
}

TEST(SplitArrow, FreshNamesAvoidCollisions) {
  const WeightedQuiver q({VertexId{"v"}, VertexId{"z"}},
                         {{ArrowId{"b"}, VertexId{"v"}, VertexId{"z"}, 2},
                          {ArrowId{"b'"}, VertexId{"z"}, VertexId{"v"}, 1}});
  const SplitTrace t = split_arrow(q, ArrowId{"b"});
  EXPECT_EQ(t.new_vertex, VertexId{"z1"});
  EXPECT_EQ(t.first, ArrowId{"b''"});
  EXPECT_EQ(t.second, ArrowId{"b'''"});
  EXPECT_TRUE(validate(t.after).empty());
}

TEST(RewritePath, Goldens) {
  const WeightedQuiver q = parallel(2);
  const SplitTrace t = split_arrow(q, ArrowId{"b"});
  EXPECT_EQ(rewrite_path(t, Path::of(q, {"a", "a", "b", "d"})).to_string(), "a*a*b'*b''*d");
  EXPECT_EQ(rewrite_path(t, Path::of(q, {"a", "c", "d"})).to_string(), "a*c*d");
  for (const char* v : {"l", "r"})
    EXPECT_EQ(rewrite_path(t, Path::trivial(VertexId{v})), Path::trivial(VertexId{v}));
}

TEST(RewriteSum, CommutatorAndLinearity) {
  const WeightedQuiver q = kxy();
  const SplitTrace t = split_arrow(q, ArrowId{"y"});
  PathSum comm(Q);
  comm.add_term(Path::of(q, {"x", "y"}), Scalar(Q, 1));
  comm.add_term(Path::of(q, {"y", "x"}), Scalar(Q, -1));
  const UniformElement image = rewrite_sum(t, UniformElement::from(comm));
  EXPECT_EQ(image.sum.to_string(), "x*y'*y'' - y'*y''*x");
  EXPECT_EQ(image.degree, 3);

  PathSum xs(Q);
  xs.add_term(Path::of(q, {"x", "x"}), Scalar(Q, 4));
  EXPECT_EQ(rewrite_sum(t, UniformElement::from(xs)).sum.to_string(), "4*x*x");

  PathSum fives(Q);
  fives.add_term(Path::of(q, {"y"}), Scalar(Q, 2));
  fives.add_term(Path::of(q, {"y"}), Scalar(Q, 3));
  EXPECT_EQ(rewrite_sum(t, fives).to_string(), "5*y'*y''");
}

TEST(Regrade, KxyTakesOneSplit) {
  const WeightedQuiver q = kxy();
  PathSum comm(Q);
  comm.add_term(Path::of(q, {"x", "y"}), Scalar(Q, 1));
  comm.add_term(Path::of(q, {"y", "x"}), Scalar(Q, -1));
  const RegradeResult r = regrade::regrade(q, {{UniformElement::from(comm)}});
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.final_quiver, split_arrow(q, ArrowId{"y"}).after);
  EXPECT_EQ(r.final_ideal.generators.at(0).sum.to_string(), "x*y'*y'' - y'*y''*x");
}

TEST(Regrade, DegreeOneInputIsUnchanged) {
  const WeightedQuiver q({VertexId{"v"}}, {{ArrowId{"x"}, VertexId{"v"}, VertexId{"v"}, 1}});
  const RegradeResult r = regrade::regrade(q, {});
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.final_quiver, q);
}

TEST(Regrade, CubicLoopTakesTwoSplits) {
  const WeightedQuiver q({VertexId{"v"}}, {{ArrowId{"w"}, VertexId{"v"}, VertexId{"v"}, 3}});
  const RegradeResult r = regrade::regrade(q, {});
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].first, ArrowId{"w'"});
  EXPECT_EQ(r.trace[0].second, ArrowId{"w''"});
  EXPECT_EQ(r.trace[1].split_arrow, ArrowId{"w''"});
  EXPECT_EQ(r.trace[1].first, ArrowId{"w'''"});
  EXPECT_EQ(r.trace[1].second, ArrowId{"w''''"});
  EXPECT_EQ(r.final_quiver.vertices().size(), 3u);
  EXPECT_EQ(r.final_quiver.arrows().size(), 3u);
  EXPECT_EQ(weight_discrepancy(r.final_quiver), 0);
  // v -> z -> z1 -> v
  EXPECT_EQ(r.final_quiver.arrow(ArrowId{"w'"}).target, VertexId{"z"});
  EXPECT_EQ(r.final_quiver.arrow(ArrowId{"w'''"}).target, VertexId{"z1"});
  EXPECT_EQ(r.final_quiver.arrow(ArrowId{"w''''"}).target, VertexId{"v"});
}

TEST(Regrade, SplitOrderPrefersHighestDegreeThenName) {
  const WeightedQuiver q({VertexId{"v"}}, {{ArrowId{"a"}, VertexId{"v"}, VertexId{"v"}, 2},
                                           {ArrowId{"b"}, VertexId{"v"}, VertexId{"v"}, 3},
                                           {ArrowId{"c"}, VertexId{"v"}, VertexId{"v"}, 3}});
  const RegradeResult r = regrade::regrade(q, {});
  ASSERT_EQ(r.trace.size(), 5u);
  EXPECT_EQ(r.trace[0].split_arrow, ArrowId{"b"});
  EXPECT_EQ(r.trace[1].split_arrow, ArrowId{"c"});
}

TEST(SplitProperties, RandomQuivers) {
  Rng rng = make_rng(51, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedQuiver q = random_quiver(rng);
    for (const Arrow& b : q.arrows()) {
      if (b.degree < 2) continue;
      const SplitTrace t = split_arrow(q, b.id);
      ASSERT_EQ(weight_discrepancy(t.after), weight_discrepancy(q) - 1);
      for (int k = 0; k < 5; ++k) {
        const Path p = random_path(rng, q, 4);
        const Path fp = rewrite_path(t, p);
        EXPECT_EQ(fp.degree(), p.degree());
        EXPECT_EQ(fp.source(), p.source());
        EXPECT_EQ(fp.target(), p.target());
        const Path r = random_path(rng, q, 3);
        const auto pr = multiply_paths(p, r);
        const auto fpfr = multiply_paths(fp, rewrite_path(t, r));
        ASSERT_EQ(pr.has_value(), fpfr.has_value());
        if (pr) {
          EXPECT_EQ(rewrite_path(t, *pr), *fpfr);
        }
      }
    }
    const IdealPresentation ideal = random_ideal(rng, q, Q);
    const RegradeResult r = regrade::regrade(q, ideal);
    EXPECT_EQ(static_cast<long long>(r.trace.size()), weight_discrepancy(q));
    EXPECT_LE(r.final_quiver.max_degree(), 1);
    const RegradeResult again = regrade::regrade(r.final_quiver, r.final_ideal);
    EXPECT_TRUE(again.trace.empty());
    EXPECT_EQ(again.final_ideal, r.final_ideal);
  }
}
