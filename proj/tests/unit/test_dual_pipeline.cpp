#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "pappus/dual_pipeline.hpp"
#include "pappus/error.hpp"
#include "pappus/sampling.hpp"

namespace pappus {
namespace {

using testing::sym_line;
using testing::sym_point;

HomTriple pt(long x, long y, long z) { return HomTriple::point(x, y, z); }

const DualRoundTrip& generic_rt() {
  static const DualRoundTrip rt = run_round_trip(symbolic_scene());
  return rt;
}

std::vector<HomTriple> golden_returned() {
  std::vector<HomTriple> out(6, pt(1, 0, 0));
  for (const auto& row : golden::kReturnedPoints) out[Perm3::parse(row.sigma).index()] = sym_point(row.coords);
  return out;
}

TEST(DualPoints, MatchReferenceCoordinates) {
  for (const auto& row : golden::kDualPoints) {
    const HomTriple& p = generic_rt().dual_points[Perm3::parse(row.sigma).index()];
    EXPECT_TRUE(p.is_point());
    EXPECT_TRUE(projectively_equal(p, sym_point(row.coords))) << row.sigma;
  }
}

TEST(DualPoints, Specialized) {
  const auto pts = dual_points(canonical_scene(3, 5));
  EXPECT_TRUE(projectively_equal(pts[0], pt(15, -1, -2)));
}

TEST(MLines, MatchReferenceEquations) {
  EXPECT_TRUE(projectively_equal(generic_rt().m_lines.m1, sym_line(golden::kM1)));
  EXPECT_TRUE(projectively_equal(generic_rt().m_lines.m2, sym_line(golden::kM2)));
}

TEST(MLines, ParitySplit) {
  const auto& rt = generic_rt();
  for (const Perm3& sigma : Perm3::all()) {
    const HomTriple& p = rt.dual_points[sigma.index()];
    EXPECT_EQ(incident(p, rt.m_lines.m1), sigma.is_even()) << sigma.name();
    EXPECT_EQ(incident(p, rt.m_lines.m2), !sigma.is_even()) << sigma.name();
  }
}

TEST(MLines, SpecializationOracle) {
  const auto m1 = sym_line(golden::kM1).eval(3, 5), m2 = sym_line(golden::kM2).eval(3, 5);
  const auto pts = dual_points(canonical_scene(3, 5));
  for (const Perm3& sigma : Perm3::all())
    EXPECT_TRUE(incident(pts[sigma.index()], sigma.is_even() ? m1 : m2));
  const MLines fitted = fit_m_lines(pts);
  EXPECT_TRUE(projectively_equal(fitted.m1, m1));
  EXPECT_TRUE(projectively_equal(fitted.m2, m2));
}

TEST(MLines, NonCollinearTripleThrows) {
  std::vector<HomTriple> pts = dual_points(canonical_scene(3, 5));
  pts[Perm3::tau3().index()] = pt(7, 11, 13);
  try {
    (void)fit_m_lines(pts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TripleNotCollinear);
  }
}

TEST(SecondStage, ReturnedPointsMatchReferenceTable) {
  const auto expected = golden_returned();
  const auto& rt = generic_rt();
  EXPECT_TRUE(same_projective_set(rt.returned_points, expected));
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_TRUE(projectively_equal(rt.returned_points[i], expected[i])) << Perm3::all()[i].name();
  for (const HomTriple& l : rt.second_stage_lines) EXPECT_TRUE(l.is_line());
}

TEST(SecondStage, IndexingSearchFindsOneAssignment) {
  const auto found = infer_indexing(generic_rt().dual_points, golden_returned());
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], default_second_stage_roles());
}

TEST(SecondStage, SixDistinctLinesAtShowcasePair) {
  const auto rt = run_round_trip(canonical_scene(3, 5));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      EXPECT_FALSE(projectively_equal(rt.second_stage_lines[i], rt.second_stage_lines[j]));
  const auto expected = golden_returned();
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_TRUE(projectively_equal(rt.returned_points[i], expected[i].eval(3, 5)));
}

TEST(SecondStage, GlueLocusStillGivesSixLines) {
  const auto rt = run_round_trip(canonical_scene(3, 3));
  EXPECT_EQ(rt.second_stage_lines.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      EXPECT_FALSE(projectively_equal(rt.second_stage_lines[i], rt.second_stage_lines[j]));
}

TEST(Landing, Examples) {
  const PappusScene s = symbolic_scene();
  const std::vector<HomTriple> one_each = {sym_point({"b-2", "b-2", "2*b^2-2*b-1"}),
                                           sym_point({"2*a-1", "a^2-2*a", "0"})};
  EXPECT_TRUE(incident(one_each[0], s.line_b()));
  EXPECT_TRUE(incident(one_each[1], s.line_a()));
  const Landing l = landing_check(generic_rt().returned_points, s);
  EXPECT_EQ(l.on_la.size(), 3u);
  EXPECT_EQ(l.on_lb.size(), 3u);
  for (std::size_t i : l.on_la) EXPECT_FALSE(Perm3::all()[i].is_even());
  for (std::size_t i : l.on_lb) EXPECT_TRUE(Perm3::all()[i].is_even());
  const auto rt = run_round_trip(canonical_scene(3, 5));
  EXPECT_EQ(rt.landing.on_la.size(), 3u);
  EXPECT_EQ(rt.landing.on_lb.size(), 3u);
}

TEST(Landing, PointOffBothCarriersFails) {
  auto pts = generic_rt().returned_points;
  pts[0] = pt(1, 2, 3);
  try {
    (void)landing_check(pts, symbolic_scene());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LandingFailure);
  }
}

TEST(SingleParameter, Examples) {
  const auto& rt = generic_rt();
  EXPECT_TRUE(single_parameter_check(rt.returned_points, rt.landing));
  const std::vector<HomTriple> mixed = {sym_point({"a", "b", "0"})};
  EXPECT_FALSE(single_parameter_check(mixed, Landing{{0}, {}}));
  const std::vector<HomTriple> good = {sym_point({"2*a-1", "a^2-2*a", "0"}),
                                       sym_point({"b-2", "b-2", "2*b^2-2*b-1"})};
  EXPECT_TRUE(single_parameter_check(good, Landing{{0}, {1}}));
  EXPECT_THROW((void)single_parameter_check(run_round_trip(canonical_scene(3, 5)).returned_points,
                                            Landing{{3, 4, 5}, {0, 1, 2}}),
               Error);
}

TEST(DoubleDuality, EveryPipelineLine) {
  const auto& rt = generic_rt();
  std::vector<HomTriple> lines = rt.second_stage_lines;
  lines.push_back(rt.m_lines.m1);
  lines.push_back(rt.m_lines.m2);
  for (const HomTriple& l : lines) {
    EXPECT_TRUE(projectively_equal(dual(dual(l)), l));
    EXPECT_TRUE(dual(dual(l)).is_line());
  }
}

TEST(RoundTripProperty, RationalRunsMatchSpecializedSymbolic) {
  const auto expected = golden_returned();
  std::vector<HomTriple> duals(6, pt(1, 0, 0));
  for (const auto& row : golden::kDualPoints) duals[Perm3::parse(row.sigma).index()] = sym_point(row.coords);
  for (const ParamPair& p : sample_nondegenerate(41, 1000)) {
    const auto r = run_round_trip(canonical_scene(p.a, p.b));
    for (std::size_t i = 0; i < 6; ++i) {
      ASSERT_TRUE(projectively_equal(r.dual_points[i], duals[i].eval(p.a, p.b)));
      ASSERT_TRUE(projectively_equal(r.returned_points[i], expected[i].eval(p.a, p.b)))
          << p.a << " " << p.b;
    }
    ASSERT_EQ(r.landing.on_la.size(), 3u);
    ASSERT_EQ(r.landing.on_lb.size(), 3u);
  }
}

}  // namespace
}  // namespace pappus
