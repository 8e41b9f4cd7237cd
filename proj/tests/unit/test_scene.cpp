#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "pappus/error.hpp"
#include "pappus/relabel.hpp"
#include "pappus/sampling.hpp"
#include "pappus/scene.hpp"

namespace pappus {
namespace {

using testing::sym;
using testing::sym_line;
using testing::sym_point;

HomTriple pt(long x, long y, long z) { return HomTriple::point(x, y, z); }

const PappusScene& generic() {
  static const PappusScene scene = symbolic_scene();
  return scene;
}

// Perm3

TEST(Perm3, GeneratorsAndOrders) {
  const Perm3 t2 = Perm3::tau2(), t3 = Perm3::tau3(), id = Perm3::identity();
  EXPECT_EQ(t2 * t2, id);
  EXPECT_EQ(t3 * t3 * t3, id);
  EXPECT_NE(t3 * t3, id);
  std::set<Perm3> generated{id};
  for (int round = 0; round < 4; ++round) {
    std::set<Perm3> next = generated;
    for (const Perm3& p : generated) {
      next.insert(p * t2);
      next.insert(p * t3);
    }
    generated = next;
  }
  EXPECT_EQ(generated.size(), 6u);
}

TEST(Perm3, CompositionAppliesRightFactorFirst) {
  const Perm3 t2t3 = Perm3::tau2() * Perm3::tau3();
  EXPECT_EQ(t2t3.one_line(), "(3 2 1)");
  EXPECT_EQ((Perm3::tau2() * Perm3::tau3() * Perm3::tau3()).one_line(), "(1 3 2)");
  EXPECT_EQ((Perm3::tau3() * Perm3::tau3()).one_line(), "(2 3 1)");
}

TEST(Perm3, NamesParityAndParsing) {
  const auto& all = Perm3::all();
  const std::vector<std::string> names = {"id", "t2", "t3", "t3^2", "t2t3", "t2t3^2"};
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].name(), names[i]);
    EXPECT_EQ(all[i].index(), i);
    EXPECT_EQ(Perm3::parse(names[i]), all[i]);
    EXPECT_EQ(Perm3::parse(all[i].one_line()), all[i]);
    EXPECT_EQ(all[i] * all[i].inverse(), Perm3::identity());
  }
  EXPECT_TRUE(Perm3::identity().is_even());
  EXPECT_TRUE(Perm3::tau3().is_even());
  EXPECT_FALSE(Perm3::tau2().is_even());
  EXPECT_THROW(Perm3::parse("(1 1 2)"), Error);
  EXPECT_THROW(Perm3::parse("t4"), Error);
}

// Canonical scene

TEST(Scene, JoinsMatchReferenceEquations) {
  for (const auto& row : golden::kJoins) {
    EXPECT_TRUE(projectively_equal(generic().join_line(row.i, row.j), sym_line(row.coords)))
        << "L(A" << row.i << ",B" << row.j << ")";
  }
  EXPECT_TRUE(projectively_equal(generic().join_line(2, 1), sym_line({"a*b", "-b", "1-a"})));
}

TEST(Scene, FrameAndS) {
  const PappusScene s = canonical_scene(3, 5);
  EXPECT_TRUE(projectively_equal(s.s_point(), pt(1, 1, 0)));
  EXPECT_TRUE(projectively_equal(s.line_a(), HomTriple::line(0, 0, 1)));
  EXPECT_TRUE(projectively_equal(s.line_b(), HomTriple::line(1, -1, 0)));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(incident(s.point_a(i), s.line_a()));
    EXPECT_TRUE(incident(s.point_b(i), s.line_b()));
  }
}

TEST(Scene, CPointsMatchReferenceCoordinates) {
  for (const auto& row : golden::kCPoints) {
    const Perm3 sigma = Perm3::parse(row.sigma);
    EXPECT_TRUE(projectively_equal(generic().c_point(row.k, sigma), sym_point(row.coords)))
        << "C_" << row.k << "," << row.sigma << " = " << generic().c_point(row.k, sigma).to_string();
  }
}

TEST(Scene, PappusLinesMatchReferenceEquations) {
  for (const auto& row : golden::kPappusLines) {
    const Perm3 sigma = Perm3::parse(row.sigma);
    EXPECT_TRUE(projectively_equal(generic().pappus_line(sigma), sym_line(row.coords))) << row.sigma;
  }
}

TEST(Scene, SymbolicCollinearityForEverySigma) {
  for (const Perm3& sigma : Perm3::all()) {
    EXPECT_TRUE(det3(generic().c_point(1, sigma), generic().c_point(2, sigma), generic().c_point(3, sigma)).is_zero());
  }
}

TEST(Scene, SpecializedExamples) {
  const PappusScene s = canonical_scene(3, 5);
  EXPECT_TRUE(projectively_equal(s.c_point(1, Perm3::identity()), pt(0, -2, 1)));
  EXPECT_TRUE(projectively_equal(s.pappus_line(Perm3::identity()), HomTriple::line(15, -1, -2)));
  EXPECT_TRUE(projectively_equal(meet(s.pappus_line(Perm3::identity()), s.line_a()), pt(1, 15, 0)));
  // Cramer oracle for C_{1,id} = L(A2,B3) ^ L(A3,B2) at (3, 5): 3x - y - 2z = 0 and x = 0.
  EXPECT_EQ(s.c_point(1, Perm3::identity()).to_string(), "(0 : 2 : -1)");
}

TEST(Scene, SpecializationCommutesWithConstruction) {
  ParameterSampler sampler(31);
  for (int i = 0; i < 60; ++i) {
    const ParamPair p = sampler.next_nondegenerate();
    const PappusScene direct = canonical_scene(p.a, p.b);
    const PappusScene via = generic().specialized(p.a, p.b);
    for (const Perm3& sigma : Perm3::all()) {
      for (int k = 1; k <= 3; ++k) EXPECT_TRUE(projectively_equal(direct.c_point(k, sigma), via.c_point(k, sigma)));
      EXPECT_TRUE(projectively_equal(direct.pappus_line(sigma), via.pappus_line(sigma)));
    }
  }
}

TEST(Scene, DegenerateParameters) {
  for (long a : {0L, 1L}) {
    try {
      (void)canonical_scene(a, 2);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateParameters);
      EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
    }
  }
  EXPECT_THROW((void)canonical_scene(2, 1), Error);
  EXPECT_THROW((void)canonical_scene(2, 0), Error);
  EXPECT_NO_THROW((void)canonical_scene(3, 5, {.strict = true}));
}

TEST(Scene, WorksOverEveryField) {
  EXPECT_NO_THROW((void)canonical_scene(Scalar(3), Scalar::omega()));
  const PappusScene q = canonical_scene(Scalar(QuadExt(2, 1)), Scalar::omega());
  for (const Perm3& sigma : Perm3::all())
    EXPECT_TRUE(det3(q.c_point(1, sigma), q.c_point(2, sigma), q.c_point(3, sigma)).is_zero());
}

TEST(SceneProperty, InvariantsAtRandomRationalPairs) {
  for (const ParamPair& p : sample_nondegenerate(32, 1000)) {
    const PappusScene s = canonical_scene(p.a, p.b);
    for (const Perm3& sigma : Perm3::all()) {
      const auto& l = s.pappus_line(sigma);
      for (int k = 1; k <= 3; ++k) {
        ASSERT_TRUE(incident(s.c_point(k, sigma), l));
        ASSERT_TRUE(incident(s.c_point(k, sigma), s.join_line(k == 1 ? 2 : 1, sigma(k == 3 ? 2 : 3))));
      }
      ASSERT_FALSE(projectively_equal(l, s.line_a()));
      ASSERT_FALSE(projectively_equal(l, s.line_b()));
    }
  }
}

// verify_pappus

TEST(VerifyPappus, ConcreteInstances) {
  const std::array<HomTriple, 3> a = {pt(1, 0, 0), pt(1, 1, 0), pt(1, 2, 0)};
  const std::array<HomTriple, 3> b = {pt(0, 0, 1), pt(0, 1, 1), pt(0, 2, 1)};
  EXPECT_TRUE(verify_pappus(a, b));
  EXPECT_TRUE(verify_pappus(generic().a_points(), generic().b_points()));
  const PappusScene w = canonical_scene(Scalar(5), Scalar::omega());
  EXPECT_TRUE(verify_pappus(w.a_points(), w.b_points()));
}

TEST(VerifyPappus, RejectsBadInitialData) {
  const auto code = [](std::array<HomTriple, 3> a, std::array<HomTriple, 3> b) {
    try {
      (void)verify_pappus(a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  const std::array<HomTriple, 3> b = {pt(0, 0, 1), pt(0, 1, 1), pt(0, 2, 1)};
  EXPECT_EQ(code({pt(1, 0, 0), pt(1, 0, 0), pt(1, 2, 0)}, b), ErrorCode::InvalidInitialData);
  EXPECT_EQ(code({pt(1, 0, 0), pt(1, 1, 0), pt(1, 2, 1)}, b), ErrorCode::InvalidInitialData);
  // A-triple passing through the intersection of the two carriers.
  EXPECT_EQ(code({pt(0, 1, 0), pt(1, 1, 0), pt(1, 2, 0)}, b), ErrorCode::InvalidInitialData);
}

TEST(VerifyPappusProperty, RandomCarriers) {
  testing::Gen g(33);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const HomTriple p = g.point(FieldTag::rational), q = g.point(FieldTag::rational);
    const HomTriple r = g.point(FieldTag::rational), u = g.point(FieldTag::rational);
    const auto along = [&](const HomTriple& x, const HomTriple& y) {
      const Scalar t = g.rational();
      return HomTriple::point(x.x() + t * y.x(), x.y() + t * y.y(), x.z() + t * y.z());
    };
    const std::array<HomTriple, 3> a = {p, q, along(p, q)};
    const std::array<HomTriple, 3> b = {r, u, along(r, u)};
    try {
      EXPECT_TRUE(verify_pappus(a, b));
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInitialData);
    }
  }
  EXPECT_GT(checked, 200);
}

// Labels and relabeling

TEST(Labels, CollinearityRule) {
  int count = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const bool rule = abc_collinear_rule(i, j, k);
        const PappusScene s = canonical_scene(3, 7);
        const auto cfg = configuration_of(s);
        const bool geometric = collinear(cfg[kAllLabels[i - 1]], cfg[kAllLabels[2 + j]], cfg[kAllLabels[5 + k]]);
        EXPECT_EQ(rule, geometric) << i << j << k;
        count += rule;
      }
  EXPECT_EQ(count, 6);
}

TEST(Labels, NamesRoundTrip) {
  for (Label l : kAllLabels) EXPECT_EQ(parse_label(label_name(l)), l);
  EXPECT_FALSE(parse_label("D1").has_value());
}

TEST(Labeling, RejectsNonBijection) {
  using L = Label;
  EXPECT_THROW(Labeling({L::A1, L::A1, L::A3, L::B1, L::B2, L::B3, L::C1, L::C2, L::C3}), Error);
  EXPECT_TRUE(Labeling().is_identity());
}

TEST(Relabel, IdentityIsNoOp) {
  const auto cfg = configuration_of(canonical_scene(3, 5));
  const auto out = apply_relabeling(cfg, Labeling());
  for (Label l : kAllLabels) EXPECT_TRUE(projectively_equal(out[l], cfg[l]));
}

TEST(Relabel, SwappingAAndCKeepsTheLineSet) {
  for (const auto& scene : {canonical_scene(3, 5), generic()}) {
    const auto cfg = configuration_of(scene);
    const auto out = apply_relabeling(cfg, swap_a_c_labeling());
    EXPECT_TRUE(same_line_set(configuration_lines(cfg), configuration_lines(out)));
    EXPECT_TRUE(projectively_equal(configuration_lines(out)[0], scene.pappus_line(Perm3::identity())));
  }
}

TEST(Relabel, ArbitraryCarrierPairKeepsTheLineSet) {
  using L = Label;
  for (const auto& scene : {canonical_scene(3, 5), canonical_scene(BigRational(-2, 7), BigRational(9, 4)), generic()}) {
    const auto cfg = configuration_of(scene);
    const auto derived = relabel_from_initial(cfg, {L::B1, L::C2, L::A3}, {L::C1, L::A2, L::B3});
    EXPECT_EQ(derived.labeling(L::C3), L::C3);
    EXPECT_EQ(derived.labeling(L::A1), L::C1);
    EXPECT_EQ(derived.labeling(L::B2), L::C2);
    const auto lines = configuration_lines(derived.configuration);
    EXPECT_TRUE(same_line_set(configuration_lines(cfg), lines));
    EXPECT_TRUE(projectively_equal(lines[0], join(cfg[L::B1], cfg[L::A3])));
    EXPECT_TRUE(projectively_equal(lines[1], join(cfg[L::A2], cfg[L::B3])));
    EXPECT_TRUE(projectively_equal(lines[2], join(cfg[L::A1], cfg[L::B2])));
    const auto again = apply_relabeling(cfg, derived.labeling);
    for (Label l : kAllLabels) EXPECT_TRUE(projectively_equal(again[l], derived.configuration[l]));
  }
}

TEST(Relabel, CarelessLabelingIsRejected) {
  using L = Label;
  const auto cfg = configuration_of(canonical_scene(3, 5));
  // A1 <-> A2 keeps every triple collinear but the C-points stop matching.
  const Labeling swap({L::A2, L::A1, L::A3, L::B1, L::B2, L::B3, L::C1, L::C2, L::C3});
  try {
    (void)apply_relabeling(cfg, swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleLabeling);
  }
  EXPECT_THROW((void)relabel_from_initial(cfg, {L::A1, L::B1, L::C1}, {L::A2, L::B2, L::C2}), Error);
}

TEST(RelabelProperty, InvarianceAtRandomPairs) {
  using L = Label;
  for (const ParamPair& p : sample_general(34, 100)) {
    const auto cfg = configuration_of(canonical_scene(p.a, p.b));
    const auto base = configuration_lines(cfg);
    EXPECT_TRUE(same_line_set(base, configuration_lines(apply_relabeling(cfg, swap_a_c_labeling()))));
    const auto derived = relabel_from_initial(cfg, {L::B1, L::C2, L::A3}, {L::C1, L::A2, L::B3});
    EXPECT_TRUE(same_line_set(base, configuration_lines(derived.configuration)));
  }
}

}  // namespace
}  // namespace pappus
