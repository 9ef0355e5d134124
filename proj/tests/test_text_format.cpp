#include "regrade/random.hpp"
#include "regrade/text_format.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace regrade;

namespace {

const Field Q = Field::rationals();

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kKxy =
    "[quiver]\n"
    "vertex v\n"
    "arrow x v v 1\n"
    "arrow y v v 2\n"
    "[relations]\n"
    "x*y - y*x\n";

Diagnostic only_diagnostic(const std::string& text) {
  const ParseOutcome r = parse_presentation(text);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics.size(), 1u);
  return r.diagnostics.empty() ? Diagnostic{} : r.diagnostics.front();
}

}  // namespace

TEST(ParsePresentation, Kxy) {
  const ParseOutcome r = parse_presentation(kKxy);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.presentation->quiver.vertices().size(), 1u);
  EXPECT_EQ(r.presentation->quiver.arrow(ArrowId{"y"}).degree, 2);
  ASSERT_EQ(r.presentation->ideal.generators.size(), 1u);
  EXPECT_EQ(r.presentation->ideal.generators[0].sum.to_string(), "x*y - y*x");
  EXPECT_EQ(r.presentation->ideal.generators[0].degree, 3);
}

TEST(ParsePresentation, CommentsBlankLinesAndMissingRelations) {
  const ParseOutcome r = parse_presentation("# a comment\n\n[quiver]\n  vertex v   # trailing\narrow x v v 1\n");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.presentation->ideal.generators.empty());
}

TEST(ParsePresentation, MixedEndpointsSplitIntoUniformPieces) {
  const ParseOutcome r = parse_presentation(slurp(REGRADE_SAMPLES_DIR "/two_vertex_relations.quiver"));
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.presentation->ideal.generators.size(), 3u);
  for (const UniformElement& g : r.presentation->ideal.generators) EXPECT_NO_THROW(UniformElement::from(g.sum));
  EXPECT_EQ(r.presentation->ideal.generators[2].sum.to_string(), "p*s - 1/2*r*r*r*p");
}

TEST(ParsePresentation, TrivialPathsAndArrowPrecedence) {
  const ParseOutcome ok = parse_presentation("[quiver]\nvertex v\narrow x v v 1\n[relations]\nx*x*x - e_v*x*x*x*e_v + x*x*x\n");
  ASSERT_TRUE(ok.ok());
  EXPECT_EQ(ok.presentation->ideal.generators[0].sum.to_string(), "x*x*x");
  // An arrow literally named e_v wins over the trivial path.
  const ParseOutcome shadow = parse_presentation("[quiver]\nvertex v\narrow e_v v v 2\n[relations]\ne_v*e_v\n");
  ASSERT_TRUE(shadow.ok());
  EXPECT_EQ(shadow.presentation->ideal.generators[0].degree, 4);
}

TEST(ParseDiagnostics, UndeclaredArrowIsPositioned) {
  const Diagnostic d = only_diagnostic("[quiver]\nvertex v\narrow x v v 1\narrow y v v 2\n[relations]\nx*y - q*x\n");
  EXPECT_EQ(d.line, 6);
  EXPECT_EQ(d.column, 7);
  EXPECT_NE(d.message.find("undeclared name 'q'"), std::string::npos);
}

TEST(ParseDiagnostics, NonHomogeneousTerm) {
  const Diagnostic d = only_diagnostic("[quiver]\nvertex v\narrow x v v 1\narrow y v v 2\n[relations]\nx*x*x - y\n");
  EXPECT_EQ(d.line, 6);
  EXPECT_EQ(d.column, 9);
  EXPECT_NE(d.message.find("non-homogeneous"), std::string::npos);
}

TEST(ParseDiagnostics, QuiverErrors) {
  EXPECT_NE(only_diagnostic("[quiver]\nvertex v\narrow x v w 1\n").message.find("dangling endpoint"), std::string::npos);
  EXPECT_NE(only_diagnostic("[quiver]\nvertex v\nvertex v\n").message.find("duplicate id"), std::string::npos);
  const Diagnostic zero = only_diagnostic("[quiver]\nvertex v\narrow x v v 0\n");
  EXPECT_EQ(zero.line, 3);
  EXPECT_NE(zero.message.find("nonpositive degree"), std::string::npos);
  EXPECT_NE(only_diagnostic("vertex v\n[quiver]\n").message.find("before the [quiver]"), std::string::npos);
  EXPECT_NE(only_diagnostic("").message.find("missing [quiver]"), std::string::npos);
}

TEST(ParseDiagnostics, RelationErrors) {
  const std::string head = "[quiver]\nvertex a\nvertex b\narrow p a b 1\narrow r b b 1\n[relations]\n";
  EXPECT_NE(only_diagnostic(head + "r*p\n").message.find("does not compose"), std::string::npos);
  EXPECT_NE(only_diagnostic(head + "p - p\n").message.find("relation is zero"), std::string::npos);
  EXPECT_NE(only_diagnostic(head + "1/0*p\n").message.find("zero denominator"), std::string::npos);
  EXPECT_NE(only_diagnostic(head + "p $ r\n").message.find("unexpected character"), std::string::npos);
  EXPECT_NE(only_diagnostic(head + "p p\n").message.find("expected '+' or '-'"), std::string::npos);
}

TEST(ParsePresentation, PrimeFieldRejectsBadDenominator) {
  const ParseOutcome r =
      parse_presentation("[quiver]\nvertex v\narrow x v v 1\n[relations]\n1/7*x\n", Field::prime(7));
  EXPECT_FALSE(r.ok());
}

TEST(Serialize, KxyIsCanonical) {
  const PresentationFile p = parse_presentation_or_throw(kKxy);
  EXPECT_EQ(serialize_presentation(p), kKxy);
  EXPECT_EQ(serialize_presentation(p, {"hello"}), std::string("# hello\n") + kKxy);
}

TEST(Serialize, RoundTripOnRandomPresentations) {
  Rng rng = make_rng(91, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedQuiver q = random_quiver(rng);
    const IdealPresentation ideal = random_ideal(rng, q, Q);
    const std::string text = serialize_presentation(q, ideal);
    const ParseOutcome r = parse_presentation(text);
    ASSERT_TRUE(r.ok()) << text << (r.diagnostics.empty() ? "" : r.diagnostics[0].to_string());
    EXPECT_EQ(r.presentation->quiver, q);
    EXPECT_EQ(serialize_presentation(*r.presentation), text);
  }
}

TEST(Serialize, RepresentationRoundTrip) {
  Rng rng = make_rng(92, 0);
  for (Field f : {Q, Field::prime(101)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const WeightedQuiver q = random_quiver(rng);
      GradedRep m = random_rep(rng, q, f, {-1, 4}, 2);
      if (f == Q && !m.blocks().empty()) {
        auto& [key, block] = *m.blocks().begin();
        if (block.rows() > 0 && block.cols() > 0) {
          Matrix b = block;
          b(0, 0) = Scalar(Q, Rational(-5, 3));
          m.set_block(key.first, key.second, b);
        }
      }
      EXPECT_EQ(parse_representation(serialize_representation(m, "M"), q), m);
    }
  }
}

TEST(Serialize, RepresentationErrorsNameTheLine) {
  const WeightedQuiver q({VertexId{"v"}}, {{ArrowId{"x"}, VertexId{"v"}, VertexId{"v"}, 1}});
  try {
    parse_representation("[representation]\nfield q\nwindow 0 1\ndim v 0 1\ndim v 1 1\nblock x 0 1x1 1 2\n", q);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
  }
}

TEST(DescribeSplit, MentionsBothHalves) {
  const PresentationFile p = parse_presentation_or_throw(kKxy);
  EXPECT_EQ(describe_split(split_arrow(p.quiver, ArrowId{"y"})),
            "split y (v -> v, degree 2): y' : v -> z (degree 1), y'' : z -> v (degree 1)");
}
