#include "regrade/verify.hpp"

#include <gtest/gtest.h>

using namespace regrade;

namespace {

SuiteConfig small_config(std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.master_seed = seed;
  cfg.trials = 15;
  cfg.window = {-1, 7};
  return cfg;
}

std::string render_all(const std::vector<SuiteReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += render_text(r);
  return out;
}

}  // namespace

TEST(Suites, AllPassOnSmallRuns) {
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    SuiteConfig cfg = small_config(3);
    cfg.field = f;
    for (const SuiteReport& r : run_suites("all", cfg)) {
      EXPECT_TRUE(r.passed()) << render_text(r);
      for (const PropertyResult& p : r.properties) EXPECT_GT(p.trials, 0u) << p.property;
    }
  }
}

TEST(Suites, ReportsAreDeterministic) {
  const std::string a = render_all(run_suites("all", small_config(7)));
  const std::string b = render_all(run_suites("all", small_config(7)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall time"), std::string::npos);
  EXPECT_EQ(run_suites("split", small_config(7)).front().properties.size(),
            run_suites("split", small_config(8)).front().properties.size());
}

TEST(Suites, TimingIsOptIn) {
  SuiteConfig cfg = small_config(1);
  cfg.trials = 2;
  cfg.timing = true;
  const SuiteReport r = run_suites("split", cfg).front();
  ASSERT_TRUE(r.wall_seconds.has_value());
  EXPECT_NE(render_text(r).find("wall time"), std::string::npos);
}

TEST(Suites, UnknownSuiteThrows) { EXPECT_THROW(run_suites("nope", small_config(0)), std::invalid_argument); }

TEST(Suites, ExtraPresentationAddsFileProperties) {
  SuiteConfig cfg = small_config(5);
  cfg.extra = kxy_presentation();
  const auto reports = run_suites("all", cfg);
  EXPECT_NE(reports[0].find("split.file_regrade"), nullptr);
  EXPECT_NE(reports[1].find("functor.file_instance"), nullptr);
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << render_text(r);
}

TEST(PropertyLog, CountsFailuresAndKeepsTheFirst) {
  detail::PropertyLog log(42);
  for (std::size_t trial = 0; trial < 10; ++trial) {
    log.run("p", trial, [&] { return trial % 4 == 3 ? "bad " + std::to_string(trial) : std::string(); });
    log.run("q", trial, [&]() -> std::string {
      if (trial == 5) throw std::runtime_error("boom");
      return {};
    });
  }
  const auto results = log.take();
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].property, "p");
  EXPECT_EQ(results[0].trials, 10u);
  EXPECT_EQ(results[0].failures, 2u);
  ASSERT_TRUE(results[0].first_counterexample);
  EXPECT_EQ(results[0].first_counterexample->trial, 3u);
  EXPECT_EQ(results[0].first_counterexample->seed, 42u);
  EXPECT_EQ(results[1].failures, 1u);
  EXPECT_EQ(results[1].first_counterexample->detail, "exception: boom");
}

TEST(PropertyLog, CounterexamplesReplayFromSeedAndTrial) {
  // A property that fails on some random draws: the reported (seed, trial)
  // must reproduce the same draw.
  const std::uint64_t seed = 99;
  detail::PropertyLog log(seed);
  for (std::size_t trial = 0; trial < 50; ++trial) {
    log.run("draw", trial, [&] {
      Rng rng = make_rng(seed, trial);
      const long long v = uniform_int(rng, 0, 9);
      return v == 0 ? "drew " + std::to_string(v) + " then " + std::to_string(uniform_int(rng, 0, 1000))
                    : std::string();
    });
  }
  const auto results = log.take();
  ASSERT_TRUE(results[0].first_counterexample) << "no failing draw in 50 trials";
  const Counterexample& c = *results[0].first_counterexample;
  Rng replay = make_rng(c.seed, c.trial);
  const long long v = uniform_int(replay, 0, 9);
  EXPECT_EQ(c.detail, "drew " + std::to_string(v) + " then " + std::to_string(uniform_int(replay, 0, 1000)));
}

TEST(NaivePieceDim, AgreesWithPrimaryRoutineOnRandomInstances) {
  const Field Q = Field::rationals();
  Rng rng = make_rng(101, 0);
  for (int trial = 0; trial < 25; ++trial) {
    QuiverShape shape;
    shape.max_vertices = 3;
    shape.max_arrows = 4;
    const WeightedQuiver q = random_quiver(rng, shape);
    const IdealPresentation ideal = random_ideal(rng, q, Q);
    for (int d = 0; d <= 5; ++d)
      for (const VertexId& v : q.vertices())
        EXPECT_EQ(detail::naive_piece_dim(q, ideal, d, v), graded_piece_dim(q, ideal, d, {Q, v}))
            << "trial " << trial << " degree " << d << " vertex " << v.name;
  }
}

TEST(Json, CarriesTheConfiguration) {
  SuiteConfig cfg = small_config(11);
  cfg.trials = 2;
  const auto j = to_json(run_suites("hilbert", cfg).front());
  EXPECT_EQ(j["suite"], "hilbert");
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["field"], "p32003");
  EXPECT_EQ(j["window"][0], -1);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["properties"][0]["first_counterexample"].is_null());
}
