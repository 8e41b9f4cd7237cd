#include "pappus/projective.hpp"

#include <algorithm>

#include "pappus/error.hpp"

namespace pappus {

namespace {

using Coords = std::array<Scalar, 3>;

Coords cross(const HomTriple& p, const HomTriple& q) {
  return {p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(), p.x() * q.y() - p.y() * q.x()};
}

bool all_zero(const Coords& c) { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

Coords canonical_rational(const Coords& c) {
  std::array<BigRational, 3> q{c[0].rational(), c[1].rational(), c[2].rational()};
  BigRational scale = rational_content(q).inverse();
  for (const auto& v : q) {
    if (!v.is_zero()) {
      if (v.sign() < 0) scale = -scale;
      break;
    }
  }
  return {Scalar(q[0] * scale), Scalar(q[1] * scale), Scalar(q[2] * scale)};
}

Coords canonical_quadext(const Coords& c) {
  for (const auto& v : c) {
    if (!v.is_zero()) {
      const Scalar inv = v.inverse();
      return {c[0] * inv, c[1] * inv, c[2] * inv};
    }
  }
  return c;
}

Coords canonical_symbolic(const Coords& c) {
  // Clear denominators: multiply through by each distinct non-constant one.
  std::array<BiPoly, 3> num{c[0].ratfunc().num(), c[1].ratfunc().num(), c[2].ratfunc().num()};
  std::vector<BiPoly> dens;
  for (const auto& v : c) {
    const BiPoly& d = v.ratfunc().den();
    if (!d.is_constant() && std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (const BiPoly& d : dens) {
      if (d == c[i].ratfunc().den()) continue;
      num[i] *= d;
    }
  }

  Monomial low{~0u, ~0u};
  for (const auto& p : num) {
    if (p.is_zero()) continue;
    const Monomial m = p.monomial_content();
    low.a = std::min(low.a, m.a);
    low.b = std::min(low.b, m.b);
  }
  for (auto& p : num) {
    if (!p.is_zero()) p = p.divide_monomial(low);
  }

  // Divide through by the smallest coordinate when it divides the others.
  const BiPoly* pivot = nullptr;
  for (const auto& p : num) {
    if (p.is_zero()) continue;
    if (pivot == nullptr || p.terms().size() < pivot->terms().size() ||
        (p.terms().size() == pivot->terms().size() && p.total_degree() < pivot->total_degree())) {
      pivot = &p;
    }
  }
  if (pivot != nullptr && !pivot->is_constant()) {
    std::array<std::optional<BiPoly>, 3> quot;
    bool divides = true;
    for (std::size_t i = 0; i < 3 && divides; ++i) {
      if (num[i].is_zero()) {
        quot[i] = BiPoly();
      } else {
        quot[i] = num[i].exact_divide(*pivot);
        divides = quot[i].has_value();
      }
    }
    if (divides) {
      for (std::size_t i = 0; i < 3; ++i) num[i] = *quot[i];
    }
  }

  std::vector<BigRational> coeffs;
  for (const auto& p : num) {
    for (const auto& [m, k] : p.terms()) coeffs.push_back(k);
  }
  BigRational scale = rational_content(coeffs).inverse();
  for (const auto& p : num) {
    if (!p.is_zero()) {
      if (p.leading_term().second.sign() < 0) scale = -scale;
      break;
    }
  }
  return {Scalar(RatFunc(num[0] * scale)), Scalar(RatFunc(num[1] * scale)), Scalar(RatFunc(num[2] * scale))};
}

void require_role(const HomTriple& t, Role role, const char* op) {
  if (t.role() != role) {
    throw Error(ErrorCode::InvalidInitialData,
                std::string(op) + " expects " + (role == Role::point ? "points" : "lines") + ", got " + t.to_string());
  }
}

}  // namespace

HomTriple::HomTriple(Scalar x, Scalar y, Scalar z, Role role)
    : coords_{std::move(x), std::move(y), std::move(z)}, role_(role) {
  const FieldTag f = common_field(common_field(coords_[0].field(), coords_[1].field()), coords_[2].field());
  for (auto& c : coords_) c = c.promoted(f);
  if (all_zero(coords_)) throw Error(ErrorCode::InvalidInitialData, "zero homogeneous triple");
}

HomTriple HomTriple::canonical() const {
  Coords c;
  switch (field()) {
    case FieldTag::rational: c = canonical_rational(coords_); break;
    case FieldTag::quadext: c = canonical_quadext(coords_); break;
    case FieldTag::symbolic: c = canonical_symbolic(coords_); break;
  }
  return HomTriple(c[0], c[1], c[2], role_);
}

HomTriple HomTriple::eval(const BigRational& a0, const BigRational& b0) const {
  Coords c{coords_[0].eval(a0, b0), coords_[1].eval(a0, b0), coords_[2].eval(a0, b0)};
  if (all_zero(c)) {
    throw Error(ErrorCode::DegenerateParameters,
                to_string() + " vanishes at a=" + a0.to_string() + ", b=" + b0.to_string());
  }
  return HomTriple(c[0], c[1], c[2], role_).canonical();
}

std::string HomTriple::to_string() const {
  const HomTriple c = canonical();
  const std::string body = c.x().to_string() + " : " + c.y().to_string() + " : " + c.z().to_string();
  return is_point() ? "(" + body + ")" : "[" + body + "]";
}

bool projectively_equal(const HomTriple& p, const HomTriple& q) {
  return all_zero(cross(p, q));
}

Scalar det3(const HomTriple& p, const HomTriple& q, const HomTriple& r) {
  const Coords c = cross(q, r);
  return p.x() * c[0] + p.y() * c[1] + p.z() * c[2];
}

HomTriple join(const HomTriple& p, const HomTriple& q) {
  require_role(p, Role::point, "join");
  require_role(q, Role::point, "join");
  const Coords c = cross(p, q);
  if (all_zero(c)) throw Error(ErrorCode::CoincidentInputs, "join of equal points " + p.to_string());
  return HomTriple(c[0], c[1], c[2], Role::line).canonical();
}

HomTriple meet(const HomTriple& l, const HomTriple& m) {
  require_role(l, Role::line, "meet");
  require_role(m, Role::line, "meet");
  const Coords c = cross(l, m);
  if (all_zero(c)) throw Error(ErrorCode::CoincidentInputs, "meet of equal lines " + l.to_string());
  return HomTriple(c[0], c[1], c[2], Role::point).canonical();
}

bool incident(const HomTriple& p, const HomTriple& l) {
  require_role(p, Role::point, "incident");
  require_role(l, Role::line, "incident");
  return (p.x() * l.x() + p.y() * l.y() + p.z() * l.z()).is_zero();
}

HomTriple dual(const HomTriple& t) {
  return HomTriple(t.x(), t.y(), t.z(), t.is_point() ? Role::line : Role::point);
}

bool collinear(const HomTriple& p, const HomTriple& q, const HomTriple& r) { return det3(p, q, r).is_zero(); }

namespace {

CrossRatioValue cross_ratio_impl(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d,
                                 const std::optional<HomTriple>& aux, bool throw_on_coincident) {
  const std::array<const HomTriple*, 4> pts{&a, &b, &c, &d};
  for (const auto* p : pts) require_role(*p, Role::point, "cross_ratio");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (projectively_equal(*pts[i], *pts[j])) {
        if (!throw_on_coincident) return {Scalar::zero(a.field()), true};
        throw Error(ErrorCode::CoincidentInputs,
                    "cross-ratio inputs " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
  if (!collinear(a, b, c) || !collinear(a, b, d) || !collinear(a, c, d) || !collinear(b, c, d)) {
    throw Error(ErrorCode::NotCollinear, "cross-ratio of non-collinear points");
  }
  const HomTriple carrier = join(a, b);
  HomTriple o = HomTriple::point(1, 0, 0);
  if (aux) {
    if (incident(*aux, carrier)) throw Error(ErrorCode::BadAuxiliaryPoint, aux->to_string() + " lies on the carrier line");
    o = *aux;
  } else {
    const std::array<HomTriple, 3> basis{HomTriple::point(1, 0, 0), HomTriple::point(0, 1, 0), HomTriple::point(0, 0, 1)};
    for (const auto& e : basis) {
      if (!incident(e, carrier)) {
        o = e;
        break;
      }
    }
  }
  const Scalar num = det3(o, a, c) * det3(o, b, d);
  const Scalar den = det3(o, a, d) * det3(o, b, c);
  return {num / den, false};
}

}  // namespace

CrossRatioValue cross_ratio(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d,
                            const std::optional<HomTriple>& aux) {
  return cross_ratio_impl(a, b, c, d, aux, true);
}

CrossRatioValue cross_ratio_checked(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d,
                                    const std::optional<HomTriple>& aux) {
  return cross_ratio_impl(a, b, c, d, aux, false);
}

std::vector<Scalar> ratio_orbit(const Scalar& lambda) {
  const Scalar one = Scalar::one(lambda.field());
  if (lambda.is_zero() || lambda == one) {
    throw Error(ErrorCode::DegenerateRatio, "cross-ratio " + lambda.to_string() + " has no orbit");
  }
  const std::array<Scalar, 6> all{lambda,
                                  one / lambda,
                                  one - lambda,
                                  one / (one - lambda),
                                  lambda / (lambda - one),
                                  (lambda - one) / lambda};
  std::vector<Scalar> out;
  for (const auto& v : all) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

bool is_harmonic_value(const Scalar& lambda) {
  return lambda == Scalar(-1) || lambda == Scalar(BigRational(1, 2)) || lambda == Scalar(2);
}

bool is_harmonic(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d) {
  return is_harmonic_value(cross_ratio(a, b, c, d).value);
}

}  // namespace pappus
