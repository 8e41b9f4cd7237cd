#include "pappus/analysis.hpp"

#include <algorithm>

#include "pappus/dual_pipeline.hpp"
#include "pappus/error.hpp"

namespace pappus {

namespace {

Scalar quad_ratio(const HomTriple& p, const HomTriple& q, const HomTriple& r, const HomTriple& s) {
  try {
    return cross_ratio(p, q, r, s).value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoincidentInputs) throw;
    throw Error(ErrorCode::DegenerateParameters, e.what());
  }
}

Scalar s_value(const HomTriple& line, const HomTriple& s) {
  return line.x() * s.x() + line.y() * s.y() + line.z() * s.z();
}

}  // namespace

const std::vector<GlueCondition>& glue_conditions() {
  static const std::vector<GlueCondition> conditions = [] {
    const PappusScene scene = symbolic_scene();
    std::vector<GlueCondition> out;
    for (const Perm3& s : Perm3::all()) {
      const RatFunc v = s_value(scene.pappus_line(s), scene.s_point()).ratfunc();
      const BiPoly den = v.den().normalized();
      BiPoly poly = v.num();
      if (!den.is_constant()) {
        if (auto q = v.num().exact_divide(v.den())) poly = *q;
      }
      out.push_back({s, poly.normalized()});
    }
    return out;
  }();
  return conditions;
}

bool proportional_over_q(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p * q.leading_term().second == q * p.leading_term().second;
}

std::vector<Perm3> vanishing_glue(const BigRational& a0, const BigRational& b0) {
  std::vector<Perm3> out;
  for (const auto& g : glue_conditions()) {
    if (g.poly.eval(a0, b0).is_zero()) out.push_back(g.sigma);
  }
  return out;
}

Scalar a_line_cross_ratio(const PappusScene& scene) {
  return quad_ratio(scene.point_a(1), scene.point_a(2), scene.point_a(3), scene.s_point());
}

std::vector<Scalar> cross_ratio_table(const PappusScene& scene) {
  std::vector<Scalar> out;
  for (const Perm3& s : Perm3::all()) {
    out.push_back(quad_ratio(scene.point_b(s(1)), scene.point_b(s(2)), scene.point_b(s(3)), scene.s_point()));
  }
  return out;
}

bool s_on_pappus_line(const PappusScene& scene, const Perm3& sigma) {
  return incident(scene.s_point(), scene.pappus_line(sigma));
}

SIncidence s_incidence_theorem_check(const PappusScene& scene, const Perm3& sigma) {
  SIncidence r;
  r.s_on_line = s_on_pappus_line(scene, sigma);
  r.ratios_equal = a_line_cross_ratio(scene) == cross_ratio_table(scene).at(sigma.index());
  return r;
}

Scalar c_line_cross_ratio(const PappusScene& scene, const Perm3& sigma) {
  if (!s_on_pappus_line(scene, sigma)) {
    throw Error(ErrorCode::SNotOnLine, "S is not on L_C," + sigma.name());
  }
  return quad_ratio(scene.c_point(1, sigma), scene.c_point(2, sigma), scene.c_point(3, sigma), scene.s_point());
}

const std::array<BigRational, 3>& harmonic_values() {
  static const std::array<BigRational, 3> values = {BigRational(-1), BigRational(1, 2), BigRational(2)};
  return values;
}

SPairsTable s_pairs_table() {
  SPairsTable table;
  for (const auto& b : harmonic_values()) {
    for (const auto& a : harmonic_values()) table[{a, b}] = vanishing_glue(a, b);
  }
  return table;
}

namespace {

bool same_pair(std::vector<Perm3> x, std::vector<Perm3> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::string pair_text(const std::vector<Perm3>& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].name();
  return out + "}";
}

}  // namespace

RegularityResult table3_regularity_check(const SPairsTable& table) {
  RegularityResult r;
  const auto& v = harmonic_values();
  const Perm3 t3 = Perm3::tau3();
  const Perm3 t3sq = t3 * t3;
  const auto cell = [&](std::size_t ia, std::size_t ib) -> const std::vector<Perm3>& { return table.at({v[ia], v[ib]}); };
  const auto where = [&](std::size_t ia, std::size_t ib) {
    return "(a=" + v[ia].to_string() + ", b=" + v[ib].to_string() + ")";
  };
  for (std::size_t ib = 0; ib < 3; ++ib) {
    for (std::size_t ia = 0; ia < 3; ++ia) {
      const auto& here = cell(ia, ib);
      if (here.size() != 2) {
        r.right = r.down = false;
        r.failures.push_back(where(ia, ib) + " holds " + pair_text(here) + ", not a pair");
        continue;
      }
      if (ia + 1 < 3) {
        const std::vector<Perm3> expect = {here[0] * t3sq, here[1] * t3sq};
        if (!same_pair(expect, cell(ia + 1, ib))) {
          r.right = false;
          r.failures.push_back("right of " + where(ia, ib) + ": expected " + pair_text(expect) + ", found " +
                               pair_text(cell(ia + 1, ib)));
        }
      }
      if (ib + 1 < 3) {
        const std::vector<Perm3> e1 = {here[0] * t3sq, here[1] * t3};
        const std::vector<Perm3> e2 = {here[1] * t3sq, here[0] * t3};
        if (!same_pair(e1, cell(ia, ib + 1)) && !same_pair(e2, cell(ia, ib + 1))) {
          r.down = false;
          r.failures.push_back("below " + where(ia, ib) + ": expected " + pair_text(e1) + " or " + pair_text(e2) +
                               ", found " + pair_text(cell(ia, ib + 1)));
        }
      }
    }
  }
  return r;
}

std::string OverlapReport::overlapping_class() const {
  if (even_overlap && odd_overlap) return "both";
  if (even_overlap) return "even";
  if (odd_overlap) return "odd";
  return "none";
}

OverlapReport overlap_check(const Scalar& a0, const Scalar& b0) {
  const PappusScene scene = canonical_scene(a0, b0);
  OverlapReport r{scene.a(), scene.b()};
  const auto classify = [&](bool even, bool& overlap, bool& distinct) {
    std::vector<const HomTriple*> lines;
    for (const Perm3& s : Perm3::all()) {
      if (s.is_even() == even) lines.push_back(&scene.pappus_line(s));
    }
    std::size_t equal_pairs = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) equal_pairs += projectively_equal(*lines[i], *lines[j]) ? 1 : 0;
    }
    overlap = equal_pairs == 3;
    distinct = equal_pairs == 0;
  };
  classify(true, r.even_overlap, r.even_distinct);
  classify(false, r.odd_overlap, r.odd_distinct);
  return r;
}

SuperReport super_report(const BigRational& a0, const BigRational& b0) {
  const PappusScene scene = canonical_scene(Scalar(a0), Scalar(b0));
  SuperReport r;
  r.a = a0;
  r.b = b0;
  const auto& hv = harmonic_values();
  if (std::find(hv.begin(), hv.end(), a0) != hv.end()) r.a_class = a0;
  if (std::find(hv.begin(), hv.end(), b0) != hv.end()) r.b_class = b0;

  // i) the returned points are the initial points
  const DualRoundTrip rt = run_round_trip(scene);
  const auto match = [&](const HomTriple& p, bool even) -> std::optional<Perm3> {
    for (const Perm3& s : Perm3::all()) {
      if (s.is_even() == even && projectively_equal(p, rt.returned_points.at(s.index()))) return s;
    }
    return std::nullopt;
  };
  bool all_matched = true;
  for (int i = 1; i <= 3; ++i) {
    r.a_matching[static_cast<std::size_t>(i - 1)] = match(scene.point_a(i), false);
    r.b_matching[static_cast<std::size_t>(i - 1)] = match(scene.point_b(i), true);
    all_matched = all_matched && r.a_matching[static_cast<std::size_t>(i - 1)] &&
                  r.b_matching[static_cast<std::size_t>(i - 1)];
  }
  r.is_super = all_matched;

  // ii) a pair of Pappus lines through S
  for (const Perm3& s : Perm3::all()) {
    if (s_on_pappus_line(scene, s)) r.s_lines.push_back(s);
  }
  r.pair_through_s = r.s_lines.size() >= 2;

  // iii) harmonic quadruples on L_A, L_B and a Pappus line through S
  r.a_ratio = a_line_cross_ratio(scene);
  r.b_ratio = quad_ratio(scene.point_b(1), scene.point_b(2), scene.point_b(3), scene.s_point());
  r.harmonic_verdicts[0] = is_harmonic_value(r.a_ratio);
  r.harmonic_verdicts[1] = is_harmonic_value(r.b_ratio);
  for (const Perm3& s : r.s_lines) {
    r.c_ratios.emplace_back(s, c_line_cross_ratio(scene, s));
    r.harmonic_verdicts[2] = r.harmonic_verdicts[2] || is_harmonic_value(r.c_ratios.back().second);
  }
  r.all_harmonic = r.harmonic_verdicts[0] && r.harmonic_verdicts[1] && r.harmonic_verdicts[2];
  return r;
}

}  // namespace pappus
