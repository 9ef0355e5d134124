#include "regrade/path.hpp"
#include "regrade/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace regrade;

namespace {

const Field Q = Field::rationals();

WeightedQuiver kxy() {
  return WeightedQuiver({VertexId{"v"}}, {{ArrowId{"x"}, VertexId{"v"}, VertexId{"v"}, 1},
                                          {ArrowId{"y"}, VertexId{"v"}, VertexId{"v"}, 2}});
}

WeightedQuiver parallel(int b_degree = 2) {
  return WeightedQuiver({VertexId{"l"}, VertexId{"r"}},
                        {{ArrowId{"a"}, VertexId{"l"}, VertexId{"l"}, 1},
                         {ArrowId{"b"}, VertexId{"l"}, VertexId{"r"}, b_degree},
                         {ArrowId{"c"}, VertexId{"l"}, VertexId{"r"}, 1},
                         {ArrowId{"d"}, VertexId{"r"}, VertexId{"r"}, 1}});
}

PathSum sum(const WeightedQuiver& q, std::initializer_list<std::pair<long long, std::vector<const char*>>> terms,
            Field f = Q) {
  PathSum s(f);
  for (const auto& [c, names] : terms) {
    std::vector<ArrowId> ids;
    for (const char* n : names) ids.push_back(ArrowId{n});
    s.add_term(Path::of(q, ids), Scalar(f, c));
  }
  return s;
}

// Every arrow word of length <= d, kept when it composes and has degree d.
std::set<std::string> brute_force_paths(const WeightedQuiver& q, int d) {
  std::set<std::string> out;
  if (d == 0) {
    for (const auto& v : q.vertices()) out.insert("e_" + v.name);
    return out;
  }
  std::vector<std::vector<ArrowId>> words{{}};
  for (int len = 1; len <= d; ++len) {
    std::vector<std::vector<ArrowId>> next;
    for (const auto& w : words)
      for (const Arrow& a : q.arrows()) {
        auto longer = w;
        longer.push_back(a.id);
        next.push_back(longer);
      }
    for (const auto& w : next) {
      try {
        const Path p = Path::of(q, w);
        if (p.degree() == d) out.insert(p.to_string());
      } catch (const std::invalid_argument&) {
      }
    }
    words = std::move(next);
  }
  return out;
}

}  // namespace

TEST(MultiplyPaths, TrivialPathsAreLocalIdentities) {
  const WeightedQuiver q = parallel();
  const Path b = Path::of(q, {"b"});
  EXPECT_EQ(multiply_paths(Path::trivial(VertexId{"l"}), b), b);
  EXPECT_EQ(multiply_paths(Path::trivial(VertexId{"r"}), b), std::nullopt);
  EXPECT_EQ(multiply_paths(b, Path::trivial(VertexId{"r"})), b);
}

TEST(MultiplyPaths, ConcatenatesComposablePaths) {
  const WeightedQuiver q = parallel();
  const auto ab = multiply_paths(Path::of(q, {"a"}), Path::of(q, {"b"}));
  ASSERT_TRUE(ab);
  EXPECT_EQ(ab->to_string(), "a*b");
  EXPECT_EQ(ab->degree(), 3);
  EXPECT_EQ(multiply_paths(Path::of(q, {"b"}), Path::of(q, {"a"})), std::nullopt);
}

TEST(Path, RejectsNonComposableWords) {
  EXPECT_THROW(Path::of(parallel(), {"b", "a"}), std::invalid_argument);
  EXPECT_THROW(Path::of(parallel(), {"q"}), std::invalid_argument);
}

TEST(MultiplySums, CommutatorExamples) {
  const WeightedQuiver q = kxy();
  const PathSum comm = sum(q, {{1, {"x", "y"}}, {-1, {"y", "x"}}});
  EXPECT_EQ(comm.to_string(), "x*y - y*x");
  EXPECT_EQ(multiply_sums(comm, PathSum::of(Q, Path::trivial(VertexId{"v"}))), comm);
  const PathSum x = sum(q, {{1, {"x"}}}), y = sum(q, {{1, {"y"}}});
  EXPECT_EQ(multiply_sums(x, y) - multiply_sums(y, x), comm);
}

TEST(MultiplySums, CharacteristicTwoCancellation) {
  const Field F2 = Field::prime(2);
  const Path p = Path::of(kxy(), {"x"});
  EXPECT_TRUE((PathSum::of(F2, p) + PathSum::of(F2, p)).is_zero());
}

TEST(PathSum, CanonicalSerialization) {
  const WeightedQuiver q = kxy();
  PathSum s(Q);
  s.add_term(Path::of(q, {"y"}), Scalar(Q, Rational(-3, 2)));
  s.add_term(Path::trivial(VertexId{"v"}), Scalar(Q, 2));
  s.add_term(Path::of(q, {"x", "x"}), Scalar(Q, 1));
  EXPECT_EQ(s.to_string(), "2*e_v + x*x - 3/2*y");
  EXPECT_EQ(PathSum(Q).to_string(), "0");
}

TEST(MultiplySums, AssociativeAndUnitalOnRandomTriples) {
  Rng rng = make_rng(31, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedQuiver q = random_quiver(rng);
    auto random_sum = [&] {
      PathSum s(Q);
      const auto terms = uniform_int(rng, 0, 3);
      for (long long k = 0; k < terms; ++k) s.add_term(random_path(rng, q, 3), random_scalar(rng, Q));
      return s;
    };
    const PathSum x = random_sum(), y = random_sum(), z = random_sum();
    EXPECT_EQ(multiply_sums(multiply_sums(x, y), z), multiply_sums(x, multiply_sums(y, z)));
    EXPECT_EQ(multiply_sums(unit(q, Q), x), x);
    EXPECT_EQ(multiply_sums(x, unit(q, Q)), x);
  }
}

TEST(MultiplyPaths, DegreeIsAdditive) {
  Rng rng = make_rng(32, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedQuiver q = random_quiver(rng);
    const Path p = random_path(rng, q, 4);
    const Path r = random_path(rng, q, 4, p.target());
    const auto pr = multiply_paths(p, r);
    ASSERT_TRUE(pr);
    EXPECT_EQ(pr->degree(), p.degree() + r.degree());
  }
}

TEST(UniformComponents, CommutatorIsOneComponent) {
  const auto parts = uniform_components(sum(kxy(), {{1, {"x", "y"}}, {-1, {"y", "x"}}}));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].degree, 3);
  EXPECT_EQ(parts[0].source, VertexId{"v"});
  EXPECT_EQ(parts[0].target, VertexId{"v"});
}

TEST(UniformComponents, SplitsByTarget) {
  const WeightedQuiver q = parallel();
  EXPECT_EQ(uniform_components(sum(q, {{1, {"a"}}, {1, {"c"}}})).size(), 2u);
  EXPECT_TRUE(uniform_components(PathSum(Q)).empty());
}

TEST(UniformComponents, ResumToInputOnRandomSums) {
  Rng rng = make_rng(33, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedQuiver q = random_quiver(rng);
    PathSum s(Q);
    for (int k = 0; k < 6; ++k) s.add_term(random_path(rng, q, 3), random_scalar(rng, Q));
    PathSum back(Q);
    for (const UniformElement& u : uniform_components(s)) {
      EXPECT_NO_THROW(UniformElement::from(u.sum));
      back += u.sum;
    }
    EXPECT_EQ(back, s);
  }
}

TEST(UniformElement, RejectsZeroAndMixedDegrees) {
  EXPECT_THROW(UniformElement::from(PathSum(Q)), std::invalid_argument);
  EXPECT_THROW(UniformElement::from(sum(kxy(), {{1, {"x"}}, {1, {"y"}}})), std::invalid_argument);
}

TEST(EnumeratePaths, KxyGoldens) {
  const WeightedQuiver q = kxy();
  std::vector<std::string> d2, d4;
  for (const Path& p : enumerate_paths(q, 2)) d2.push_back(p.to_string());
  for (const Path& p : enumerate_paths(q, 4)) d4.push_back(p.to_string());
  EXPECT_EQ(d2, (std::vector<std::string>{"x*x", "y"}));
  EXPECT_EQ(d4, (std::vector<std::string>{"x*x*x*x", "x*x*y", "x*y*x", "y*x*x", "y*y"}));
}

TEST(EnumeratePaths, DegreeZeroGivesTrivialPaths) {
  const auto paths = enumerate_paths(parallel(), 0);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_TRUE(paths[0].is_trivial());
}

TEST(EnumeratePaths, MatchesBruteForceOnRandomQuivers) {
  Rng rng = make_rng(34, 0);
  for (int trial = 0; trial < 60; ++trial) {
    QuiverShape shape;
    shape.max_vertices = 3;
    shape.max_arrows = 4;
    const WeightedQuiver q = random_quiver(rng, shape);
    for (int d = 0; d <= 5; ++d) {
      std::set<std::string> got;
      for (const Path& p : enumerate_paths(q, d)) got.insert(p.to_string());
      EXPECT_EQ(got, brute_force_paths(q, d));
    }
  }
}

TEST(EnumeratePaths, EndpointFilterAndGuard) {
  const WeightedQuiver q = parallel();
  for (const Path& p : enumerate_paths(q, 3, VertexId{"l"}, VertexId{"r"})) {
    EXPECT_EQ(p.source(), VertexId{"l"});
    EXPECT_EQ(p.target(), VertexId{"r"});
  }
  EXPECT_THROW(enumerate_paths(kxy(), 20, std::nullopt, std::nullopt, 100), std::length_error);
}
