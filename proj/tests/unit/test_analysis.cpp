#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "pappus/analysis.hpp"
#include "pappus/error.hpp"
#include "pappus/sampling.hpp"

namespace pappus {
namespace {

using testing::sym;
using testing::sym_line;

BiPoly poly(const std::string& text) { return sym(text).ratfunc().num(); }

const GlueCondition& glue_for(const Perm3& s) { return glue_conditions().at(s.index()); }

BigRational q(const std::string& text) { return BigRational::parse(text); }

std::set<std::string> names(const std::vector<Perm3>& v) {
  std::set<std::string> out;
  for (const Perm3& p : v) out.insert(p.name());
  return out;
}

// b on the glue curve of sigma for a given a: the condition is affine in b.
std::optional<BigRational> b_on_glue(const Perm3& sigma, const BigRational& a0) {
  const BiPoly p = glue_for(sigma).poly.substitute_a(a0);
  const BigRational c1 = p.coefficient({0, 1});
  if (c1.is_zero() || p.degree_b() != 1) return std::nullopt;
  return -p.coefficient({0, 0}) / c1;
}

TEST(Glue, DerivedFromReferencePappusLines) {
  // Oracle: S = (1:1:0) on ux + vy + wz = 0 iff u + v = 0.
  for (const auto& row : golden::kPappusLines) {
    const Scalar u_plus_v = sym(row.coords[0]) + sym(row.coords[1]);
    const Perm3 sigma = Perm3::parse(row.sigma);
    EXPECT_TRUE(proportional_over_q(glue_for(sigma).poly, u_plus_v.ratfunc().num())) << row.sigma;
  }
}

TEST(Glue, Values) {
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::identity()).poly, poly("a*b-1")));
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::tau3()).poly, poly("a+b-1")));
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::tau2()).poly, poly("a*b-a+1")));
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::parse("t3^2")).poly, poly("a*b-a-b")));
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::parse("t2t3")).poly, poly("a-b")));
  EXPECT_TRUE(proportional_over_q(glue_for(Perm3::parse("t2t3^2")).poly, poly("a*b-b+1")));
}

TEST(Glue, ReferencePolynomialsAgreeAsASet) {
  std::vector<bool> used(6, false);
  for (const auto& [label, text] : golden::kGlue) {
    bool found = false;
    for (std::size_t i = 0; i < 6 && !found; ++i) {
      if (!used[i] && proportional_over_q(glue_conditions()[i].poly, poly(text))) used[i] = found = true;
    }
    EXPECT_TRUE(found) << text;
  }
}

TEST(Glue, ReferenceLabelsDisagreeOnThreeSigmas) {
  std::set<std::string> mismatched;
  for (const auto& [label, text] : golden::kGlue)
    if (!proportional_over_q(glue_for(Perm3::parse(label)).poly, poly(text))) mismatched.insert(label);
  EXPECT_EQ(mismatched, (std::set<std::string>{"t3^2", "t2t3", "t2t3^2"}));
}

TEST(Glue, Proportionality) {
  EXPECT_TRUE(proportional_over_q(poly("2*a*b-2"), poly("a*b-1")));
  EXPECT_TRUE(proportional_over_q(poly("1-a*b"), poly("a*b-1")));
  EXPECT_FALSE(proportional_over_q(poly("a*b-2"), poly("a*b-1")));
  EXPECT_FALSE(proportional_over_q(poly("0"), poly("a*b-1")));
}

TEST(Glue, VanishingAtSamplePoints) {
  EXPECT_EQ(names(vanishing_glue(q("1/2"), 2)), (std::set<std::string>{"id", "t2t3^2"}));
  EXPECT_EQ(names(vanishing_glue(3, 5)), std::set<std::string>{});
  EXPECT_EQ(names(vanishing_glue(3, -2)), std::set<std::string>{"t3"});
}

TEST(CrossRatioTable, MatchesReferenceTable) {
  const auto table = cross_ratio_table(symbolic_scene());
  for (const auto& [label, text] : golden::kBRatios)
    EXPECT_EQ(table.at(Perm3::parse(label).index()), sym(text)) << label;
  EXPECT_EQ(a_line_cross_ratio(symbolic_scene()), sym("1-a"));
}

TEST(CrossRatioTable, BracketOracleAtRationalPairs) {
  for (const ParamPair& p : sample_general(61, 50)) {
    const PappusScene s = canonical_scene(p.a, p.b);
    const auto table = cross_ratio_table(s);
    for (const Perm3& sigma : Perm3::all()) {
      const auto o = testing::cross_ratio_oracle(
          testing::to_frac(s.point_b(sigma(1))), testing::to_frac(s.point_b(sigma(2))),
          testing::to_frac(s.point_b(sigma(3))), testing::to_frac(s.s_point()));
      EXPECT_TRUE(testing::same_frac(o, table[sigma.index()].rational()));
    }
  }
}

TEST(SIncidence, Examples) {
  const auto yes = s_incidence_theorem_check(canonical_scene(BigRational(1, 2), 2), Perm3::identity());
  EXPECT_TRUE(yes.s_on_line);
  EXPECT_TRUE(yes.agree());
  const auto no = s_incidence_theorem_check(canonical_scene(3, 5), Perm3::identity());
  EXPECT_FALSE(no.s_on_line);
  EXPECT_TRUE(no.agree());
  const auto t3 = s_incidence_theorem_check(canonical_scene(3, -2), Perm3::tau3());
  EXPECT_TRUE(t3.s_on_line && t3.ratios_equal);
}

TEST(CLineCrossRatio, Examples) {
  EXPECT_EQ(c_line_cross_ratio(canonical_scene(3, -2), Perm3::tau3()), Scalar(-2));
  EXPECT_EQ(names(vanishing_glue(2, -1)), (std::set<std::string>{"t3", "t2t3^2"}));
  EXPECT_EQ(c_line_cross_ratio(canonical_scene(2, -1), Perm3::parse("t2t3^2")), Scalar(-1));
  EXPECT_EQ(c_line_cross_ratio(canonical_scene(2, -1), Perm3::tau3()), Scalar(-1));
  EXPECT_EQ(c_line_cross_ratio(canonical_scene(BigRational(1, 2), 2), Perm3::identity()),
            Scalar(BigRational(1, 2)));
  try {
    (void)c_line_cross_ratio(canonical_scene(3, 5), Perm3::identity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SNotOnLine);
  }
}

TEST(AnalysisProperty, GlueSoundnessAndCLineValue) {
  ParameterSampler sampler(62);
  int on_curve = 0;
  for (int i = 0; i < 1000; ++i) {
    ParamPair p = sampler.next_nondegenerate();
    // Every other sample is moved onto a glue curve.
    if (i % 2 == 1) {
      const Perm3 sigma = Perm3::all()[static_cast<std::size_t>(i / 2) % 6];
      const auto b = b_on_glue(sigma, p.a);
      if (!b || !is_nondegenerate(p.a, *b)) continue;
      p.b = *b;
      ++on_curve;
    }
    const PappusScene s = canonical_scene(p.a, p.b);
    const auto vanishing = vanishing_glue(p.a, p.b);
    ASSERT_LE(vanishing.size(), 2u) << p.a << " " << p.b;
    for (const Perm3& sigma : Perm3::all()) {
      const bool glue = std::find(vanishing.begin(), vanishing.end(), sigma) != vanishing.end();
      const SIncidence inc = s_incidence_theorem_check(s, sigma);
      ASSERT_EQ(inc.s_on_line, glue);
      ASSERT_EQ(inc.s_on_line, s_on_pappus_line(s, sigma));
      ASSERT_TRUE(inc.agree());
      if (inc.s_on_line) ASSERT_EQ(c_line_cross_ratio(s, sigma), Scalar(1) - Scalar(p.a));
    }
  }
  EXPECT_GT(on_curve, 300);
}

TEST(PairsTable, ComputedCells) {
  const SPairsTable t = s_pairs_table();
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(names(t.at({-1, -1})), (std::set<std::string>{"id", "t2t3"}));
  EXPECT_EQ(names(t.at({q("1/2"), 2})), (std::set<std::string>{"id", "t2t3^2"}));
  EXPECT_EQ(names(t.at({2, -1})), (std::set<std::string>{"t3", "t2t3^2"}));
  for (const auto& [key, sigmas] : t) EXPECT_EQ(sigmas.size(), 2u);
}

TEST(PairsTable, AgreesWithReferenceTableExceptOneCell) {
  const SPairsTable t = s_pairs_table();
  std::vector<std::string> differing;
  for (const auto& cell : golden::kSPairs) {
    const std::set<std::string> printed{cell.sigmas[0], cell.sigmas[1]};
    if (names(t.at({q(cell.a), q(cell.b)})) != printed) differing.push_back(cell.a + "," + cell.b);
  }
  EXPECT_EQ(differing, (std::vector<std::string>{"2,-1"}));
}

TEST(PairsTable, RegularityRules) {
  const SPairsTable t = s_pairs_table();
  const auto r = table3_regularity_check(t);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  // Row b = -1: the a = -1 cell times t3^2 gives the a = 1/2 cell.
  const Perm3 t3sq = Perm3::tau3() * Perm3::tau3();
  std::set<std::string> moved;
  for (const Perm3& s : t.at({-1, -1})) moved.insert((s * t3sq).name());
  EXPECT_EQ(moved, names(t.at({q("1/2"), -1})));
}

TEST(PairsTable, ReferenceTableBreaksRightRule) {
  SPairsTable printed;
  for (const auto& cell : golden::kSPairs)
    printed[{q(cell.a), q(cell.b)}] = {Perm3::parse(cell.sigmas[0]), Perm3::parse(cell.sigmas[1])};
  const auto r = table3_regularity_check(printed);
  EXPECT_FALSE(r.right);
  EXPECT_FALSE(r.failures.empty());
}

TEST(Overlap, ShowcaseRationalPairHasNone) {
  const auto r = overlap_check(3, 5);
  EXPECT_EQ(r.overlapping_class(), "none");
  EXPECT_TRUE(r.even_distinct && r.odd_distinct);
}

TEST(Overlap, OmegaRootWithRationalAHasNone) {
  for (const Scalar& b : {Scalar::omega(), Scalar(QuadExt(1, -1))}) {
    const auto r = overlap_check(3, b);
    EXPECT_EQ(r.overlapping_class(), "none");
    EXPECT_FALSE(r.exactly_one());
  }
}

TEST(Overlap, TrueLocusSelectsOneParityPerRoot) {
  const Scalar w = Scalar::omega();
  const Scalar w_bar = Scalar(1) - w;
  EXPECT_TRUE((w * w - w + Scalar(1)).is_zero());
  EXPECT_TRUE((w_bar * w_bar - w_bar + Scalar(1)).is_zero());
  const auto even = overlap_check(w, w);
  EXPECT_TRUE(even.exactly_one());
  EXPECT_EQ(even.overlapping_class(), "even");
  const auto odd = overlap_check(w_bar, w);
  EXPECT_TRUE(odd.exactly_one());
  EXPECT_EQ(odd.overlapping_class(), "odd");
  EXPECT_EQ(overlap_check(w_bar, w_bar).overlapping_class(), "even");
  EXPECT_EQ(overlap_check(w, w_bar).overlapping_class(), "odd");
}

TEST(Overlap, DegenerateParameters) {
  EXPECT_THROW((void)overlap_check(1), Error);
  EXPECT_THROW((void)overlap_check(0), Error);
}

TEST(Super, GridMatchesReferenceMatchings) {
  for (const auto& am : golden::kAMatching) {
    for (const auto& bm : golden::kBMatching) {
      const SuperReport r = super_report(q(am.value), q(bm.value));
      EXPECT_TRUE(r.is_super);
      EXPECT_TRUE(r.pair_through_s);
      EXPECT_TRUE(r.all_harmonic);
      for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_TRUE(r.a_matching[i].has_value());
        ASSERT_TRUE(r.b_matching[i].has_value());
        EXPECT_EQ(r.a_matching[i]->name(), am.sigmas[i]) << "a=" << am.value << " A" << i + 1;
        EXPECT_EQ(r.b_matching[i]->name(), bm.sigmas[i]) << "b=" << bm.value << " B" << i + 1;
      }
      for (const auto& [sigma, ratio] : r.c_ratios) EXPECT_TRUE(is_harmonic_value(ratio));
    }
  }
}

TEST(Super, ShowcasePairIsNotSuper) {
  const SuperReport r = super_report(3, 5);
  EXPECT_FALSE(r.is_super);
  EXPECT_FALSE(r.pair_through_s);
  EXPECT_FALSE(r.all_harmonic);
  EXPECT_TRUE(r.clauses_agree());
  EXPECT_EQ(r.a_ratio, Scalar(-2));
}

TEST(Super, HalfPairExample) {
  const SuperReport r = super_report(-1, q("1/2"));
  EXPECT_TRUE(r.is_super);
  EXPECT_EQ(r.a_matching[0]->name(), "t2t3^2");
  EXPECT_EQ(r.b_matching[0]->name(), "t3");
}

TEST(Super, HarmonicAOnlyIsNotSuper) {
  const SuperReport r = super_report(2, 5);
  EXPECT_FALSE(r.is_super);
  EXPECT_TRUE(r.harmonic_verdicts[0]);
  EXPECT_FALSE(r.all_harmonic);
  EXPECT_TRUE(r.clauses_agree());
}

TEST(SuperProperty, ClausesAgreeAtRandomPairs) {
  for (const ParamPair& p : sample_nondegenerate(63, 1000)) {
    const SuperReport r = super_report(p.a, p.b);
    ASSERT_TRUE(r.clauses_agree()) << p.a << " " << p.b;
    if (r.is_super) {
      ASSERT_TRUE(r.a_class.has_value() && r.b_class.has_value());
    }
  }
}

TEST(SuperProperty, ClausesAgreeOnGlueIntersections) {
  // Pairs on two glue curves at once are the only candidates for clause ii).
  for (const Perm3& s1 : Perm3::all()) {
    for (long num = -6; num <= 6; ++num) {
      for (long den = 1; den <= 4; ++den) {
        const BigRational a0(num, den);
        const auto b0 = b_on_glue(s1, a0);
        if (!b0 || !is_nondegenerate(a0, *b0)) continue;
        const SuperReport r = super_report(a0, *b0);
        ASSERT_TRUE(r.clauses_agree()) << a0 << " " << *b0;
      }
    }
  }
}

}  // namespace
}  // namespace pappus
