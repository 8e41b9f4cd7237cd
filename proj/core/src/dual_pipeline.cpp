#include "pappus/dual_pipeline.hpp"

#include <algorithm>

#include "pappus/error.hpp"
#include "pappus/relabel.hpp"

namespace pappus {

namespace {

const HomTriple& by_sigma(const std::vector<HomTriple>& v, const Perm3& s) { return v.at(s.index()); }

std::array<Perm3, 3> even_triple() { return {Perm3::identity(), Perm3::tau3(), Perm3::tau3() * Perm3::tau3()}; }

std::array<Perm3, 3> odd_triple() {
  const Perm3 t2 = Perm3::tau2();
  const Perm3 t3 = Perm3::tau3();
  return {t2, t2 * t3, t2 * t3 * t3};
}

HomTriple fit_triple(const std::vector<HomTriple>& pts, const std::array<Perm3, 3>& triple, const char* name) {
  const HomTriple& p = by_sigma(pts, triple[0]);
  const HomTriple& q = by_sigma(pts, triple[1]);
  const HomTriple& r = by_sigma(pts, triple[2]);
  if (projectively_equal(p, q)) {
    throw Error(ErrorCode::DegenerateParameters, std::string(name) + ": dual points of " + triple[0].name() +
                                                     " and " + triple[1].name() + " coincide");
  }
  HomTriple line = join(p, q);
  if (!incident(r, line)) {
    throw Error(ErrorCode::TripleNotCollinear, std::string(name) + ": dual point of " + triple[2].name() +
                                                   " is off the line");
  }
  return line;
}

}  // namespace

std::vector<HomTriple> dual_points(const PappusScene& scene) {
  const auto& lines = scene.pappus_lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (projectively_equal(lines[i], lines[j])) {
        throw Error(ErrorCode::DegenerateParameters,
                    "L_C," + Perm3::all()[i].name() + " = L_C," + Perm3::all()[j].name());
      }
    }
  }
  std::vector<HomTriple> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(dual(l));
  return out;
}

MLines fit_m_lines(const std::vector<HomTriple>& dual_pts) {
  return {fit_triple(dual_pts, even_triple(), "M1"), fit_triple(dual_pts, odd_triple(), "M2")};
}

SecondStageRoles default_second_stage_roles() { return {odd_triple(), even_triple()}; }

std::vector<HomTriple> second_stage(const std::vector<HomTriple>& dual_pts, const SecondStageRoles& roles) {
  std::vector<HomTriple> initial;
  initial.reserve(6);
  for (const Perm3& s : roles.a_role) initial.push_back(by_sigma(dual_pts, s));
  for (const Perm3& s : roles.b_role) initial.push_back(by_sigma(dual_pts, s));
  return pappus_lines_of(std::span<const HomTriple, 3>(initial.data(), 3),
                         std::span<const HomTriple, 3>(initial.data() + 3, 3));
}

Landing landing_check(const std::vector<HomTriple>& returned, const PappusScene& scene) {
  Landing out;
  for (std::size_t i = 0; i < returned.size(); ++i) {
    const bool la = incident(returned[i], scene.line_a());
    const bool lb = incident(returned[i], scene.line_b());
    if (!la && !lb) {
      throw Error(ErrorCode::LandingFailure, "M*_C," + Perm3::all()[i].name() + " = " +
                                                 returned[i].canonical().to_string() + " lies on neither L_A nor L_B");
    }
    if (la) out.on_la.push_back(i);
    if (lb) out.on_lb.push_back(i);
  }
  if (out.on_la.size() != 3 || out.on_lb.size() != 3) {
    throw Error(ErrorCode::LandingFailure, "split is " + std::to_string(out.on_la.size()) + " on L_A, " +
                                               std::to_string(out.on_lb.size()) + " on L_B");
  }
  return out;
}

namespace {

// Every coordinate ratio against the first nonzero coordinate passes `free`.
template <typename Pred>
bool ratios_free(const HomTriple& p, Pred free) {
  const auto& c = p.coords();
  const auto lead = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
  for (const Scalar& s : c) {
    if (!free((s / *lead).ratfunc())) return false;
  }
  return true;
}

}  // namespace

bool single_parameter_check(const std::vector<HomTriple>& returned, const Landing& landing) {
  for (const auto& p : returned) {
    if (p.field() != FieldTag::symbolic) {
      throw Error(ErrorCode::FieldMismatch, "single-parameter check needs symbolic coordinates");
    }
  }
  for (std::size_t i : landing.on_la) {
    if (!ratios_free(returned.at(i), [](const RatFunc& f) { return f.is_free_of_b(); })) return false;
  }
  for (std::size_t i : landing.on_lb) {
    if (!ratios_free(returned.at(i), [](const RatFunc& f) { return f.is_free_of_a(); })) return false;
  }
  return true;
}

DualRoundTrip run_round_trip(const PappusScene& scene, const SecondStageRoles& roles) {
  auto pts = dual_points(scene);
  auto m = fit_m_lines(pts);
  auto lines = second_stage(pts, roles);
  std::vector<HomTriple> returned;
  returned.reserve(lines.size());
  for (const auto& l : lines) returned.push_back(dual(l));
  auto landing = landing_check(returned, scene);
  return {std::move(pts), std::move(m), std::move(lines), std::move(returned), std::move(landing)};
}

bool same_projective_set(const std::vector<HomTriple>& x, const std::vector<HomTriple>& y) {
  return same_line_set(x, y);
}

std::vector<SecondStageRoles> infer_indexing(const std::vector<HomTriple>& dual_pts,
                                             const std::vector<HomTriple>& expected) {
  std::vector<SecondStageRoles> found;
  for (bool odd_on_a : {true, false}) {
    auto a = odd_on_a ? odd_triple() : even_triple();
    std::sort(a.begin(), a.end());
    do {
      auto b = odd_on_a ? even_triple() : odd_triple();
      std::sort(b.begin(), b.end());
      do {
        const SecondStageRoles roles{a, b};
        std::vector<HomTriple> lines;
        try {
          lines = second_stage(dual_pts, roles);
        } catch (const Error&) {
          continue;
        }
        bool match = lines.size() == expected.size();
        for (std::size_t i = 0; match && i < lines.size(); ++i) match = projectively_equal(dual(lines[i]), expected[i]);
        if (match) found.push_back(roles);
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return found;
}

}  // namespace pappus
