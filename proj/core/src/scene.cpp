#include "pappus/scene.hpp"

#include "pappus/error.hpp"

namespace pappus {

namespace {

const HomTriple& at(std::span<const HomTriple, 3> t, int i) { return t[static_cast<std::size_t>(i - 1)]; }

HomTriple join_ab(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b, int i, int j) {
  return join(at(a, i), at(b, j));
}

HomTriple checked_meet(const HomTriple& l, const HomTriple& m, const char* what) {
  try {
    return meet(l, m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoincidentInputs) throw;
    throw Error(ErrorCode::DegenerateParameters, std::string(what) + ": joining lines coincide");
  }
}

std::string param_text(const Scalar& s) { return s.to_string(); }

}  // namespace

std::array<HomTriple, 3> pappus_c_points(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b,
                                         const Perm3& s) {
  return {checked_meet(join_ab(a, b, 2, s(3)), join_ab(a, b, 3, s(2)), "C_1"),
          checked_meet(join_ab(a, b, 1, s(3)), join_ab(a, b, 3, s(1)), "C_2"),
          checked_meet(join_ab(a, b, 1, s(2)), join_ab(a, b, 2, s(1)), "C_3")};
}

namespace {

HomTriple line_through(const std::array<HomTriple, 3>& c, const Perm3& sigma) {
  // Two C-points may coincide (e.g. when an initial point sits on the other
  // carrier line); any two distinct ones still determine the line.
  std::size_t j = 1, k = 2;
  if (projectively_equal(c[0], c[1])) {
    j = 2;
    k = 1;
    if (projectively_equal(c[0], c[2])) {
      throw Error(ErrorCode::DegenerateParameters, "C-points coincide for sigma=" + sigma.name());
    }
  }
  HomTriple line = join(c[0], c[j]);
  if (!incident(c[k], line)) {
    throw Error(ErrorCode::NonCollinearCPoints, "C-points for sigma=" + sigma.name() + " are not collinear");
  }
  return line;
}

}  // namespace

HomTriple pappus_line_of(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b, const Perm3& sigma) {
  return line_through(pappus_c_points(a, b, sigma), sigma);
}

std::vector<HomTriple> pappus_lines_of(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b) {
  std::vector<HomTriple> out;
  out.reserve(6);
  for (const Perm3& s : Perm3::all()) out.push_back(pappus_line_of(a, b, s));
  return out;
}

PappusScene canonical_scene(const Scalar& a_in, const Scalar& b_in, const SceneOptions& options) {
  const FieldTag f = common_field(a_in.field(), b_in.field());
  const Scalar a = a_in.promoted(f);
  const Scalar b = b_in.promoted(f);
  if (a.is_zero()) throw Error(ErrorCode::DegenerateParameters, "a = 0 (A2 coincides with A1)");
  if (a.is_one()) throw Error(ErrorCode::DegenerateParameters, "a = 1 (A2 coincides with S)");
  if (b.is_zero()) throw Error(ErrorCode::DegenerateParameters, "b = 0 (B1 coincides with S)");
  if (b.is_one()) throw Error(ErrorCode::DegenerateParameters, "b = 1 (B1 coincides with B3)");

  PappusScene scene;
  scene.a_ = a;
  scene.b_ = b;
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  scene.a_points_ = {HomTriple::point(one, zero, zero), HomTriple::point(one, a, zero),
                     HomTriple::point(zero, one, zero)};
  scene.b_points_ = {HomTriple::point(one, one, b), HomTriple::point(zero, zero, one),
                     HomTriple::point(one, one, one)};
  const auto as = scene.a_points();
  const auto bs = scene.b_points();

  const HomTriple la = join(at(as, 1), at(as, 3));
  const HomTriple lb = join(at(bs, 2), at(bs, 3));
  scene.frame_ = {la, lb, meet(la, lb)};

  scene.joins_.reserve(9);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) scene.joins_.push_back(join_ab(as, bs, i, j));
  }
  scene.c_points_.reserve(18);
  scene.pappus_lines_.reserve(6);
  for (const Perm3& s : Perm3::all()) {
    const auto c = pappus_c_points(as, bs, s);
    scene.c_points_.insert(scene.c_points_.end(), c.begin(), c.end());
    scene.pappus_lines_.push_back(line_through(c, s));
  }

  if (options.strict) {
    const auto& all = Perm3::all();
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        if (projectively_equal(scene.pappus_lines_[i], scene.pappus_lines_[j])) {
          throw Error(ErrorCode::DegenerateParameters,
                      "L_C," + all[i].name() + " = L_C," + all[j].name() + " at a=" + param_text(a) +
                          ", b=" + param_text(b));
        }
      }
    }
  }
  return scene;
}

PappusScene symbolic_scene() { return canonical_scene(Scalar::var_a(), Scalar::var_b()); }

PappusScene PappusScene::specialized(const BigRational& a0, const BigRational& b0) const {
  PappusScene out;
  out.a_ = a_.eval(a0, b0);
  out.b_ = b_.eval(a0, b0);
  const auto at_pair = [&](const std::vector<HomTriple>& in) {
    std::vector<HomTriple> v;
    v.reserve(in.size());
    for (const auto& t : in) v.push_back(t.eval(a0, b0));
    return v;
  };
  out.a_points_ = at_pair(a_points_);
  out.b_points_ = at_pair(b_points_);
  out.frame_ = at_pair(frame_);
  out.joins_ = at_pair(joins_);
  out.c_points_ = at_pair(c_points_);
  out.pappus_lines_ = at_pair(pappus_lines_);
  return out;
}

bool verify_pappus(std::span<const HomTriple, 3> a, std::span<const HomTriple, 3> b) {
  const auto invalid = [](const std::string& why) { return Error(ErrorCode::InvalidInitialData, why); };
  for (const auto* triple : {&a, &b}) {
    const char name = triple == &a ? 'A' : 'B';
    for (int i = 1; i <= 3; ++i) {
      if (!at(*triple, i).is_point()) throw invalid(std::string(1, name) + std::to_string(i) + " is not a point");
      for (int j = i + 1; j <= 3; ++j) {
        if (projectively_equal(at(*triple, i), at(*triple, j))) {
          throw invalid(std::string(1, name) + std::to_string(i) + " = " + name + std::to_string(j));
        }
      }
    }
    if (!collinear(at(*triple, 1), at(*triple, 2), at(*triple, 3))) {
      throw invalid(std::string(1, name) + "-points are not collinear");
    }
  }
  const HomTriple la = join(at(a, 1), at(a, 2));
  const HomTriple lb = join(at(b, 1), at(b, 2));
  if (projectively_equal(la, lb)) throw invalid("L_A = L_B");
  const HomTriple s = meet(la, lb);
  for (int i = 1; i <= 3; ++i) {
    if (projectively_equal(at(a, i), s)) throw invalid("A" + std::to_string(i) + " lies on L_B");
    if (projectively_equal(at(b, i), s)) throw invalid("B" + std::to_string(i) + " lies on L_A");
  }
  const auto c = pappus_c_points(a, b, Perm3::identity());
  return det3(c[0], c[1], c[2]).is_zero();
}

}  // namespace pappus
