#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pappus/scalar.hpp"

namespace pappus {

enum class Role { point, line };

/// Homogeneous triple over one field, read either as the point (x:y:z) or
/// as the line x*X + y*Y + z*Z = 0. Never the zero triple.
class HomTriple {
 public:
  /// Coordinates are promoted to their common field. Throws
  /// InvalidInitialData for the zero triple.
  HomTriple(Scalar x, Scalar y, Scalar z, Role role);

  static HomTriple point(Scalar x, Scalar y, Scalar z) { return {std::move(x), std::move(y), std::move(z), Role::point}; }
  static HomTriple line(Scalar x, Scalar y, Scalar z) { return {std::move(x), std::move(y), std::move(z), Role::line}; }

  const Scalar& x() const { return coords_[0]; }
  const Scalar& y() const { return coords_[1]; }
  const Scalar& z() const { return coords_[2]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<Scalar, 3>& coords() const { return coords_; }

  Role role() const { return role_; }
  bool is_point() const { return role_ == Role::point; }
  bool is_line() const { return role_ == Role::line; }
  FieldTag field() const { return coords_[0].field(); }

  /// Display-canonical representative of the same projective class:
  ///   Q:      coprime integers, first nonzero coordinate positive
  ///   Q(w):   first nonzero coordinate scaled to 1
  ///   Q(a,b): denominators cleared, rational and monomial content removed,
  ///           divided through by a coordinate dividing the others exactly
  ///           when one exists, first nonzero leading coefficient positive
  HomTriple canonical() const;

  /// Specialization of a symbolic triple at (a0, b0). Throws
  /// DegenerateParameters if the specialized triple is zero.
  HomTriple eval(const BigRational& a0, const BigRational& b0) const;

  /// "(x : y : z)" for points, "[x : y : z]" for lines, canonical form.
  std::string to_string() const;

 private:
  std::array<Scalar, 3> coords_;
  Role role_;
};

/// Same projective class: every 2x2 minor of the 2x3 matrix vanishes. Roles
/// are not compared.
bool projectively_equal(const HomTriple& p, const HomTriple& q);

/// Determinant of the matrix with columns p, q, r.
Scalar det3(const HomTriple& p, const HomTriple& q, const HomTriple& r);

/// Line through two distinct points. Throws CoincidentInputs.
HomTriple join(const HomTriple& p, const HomTriple& q);
/// Intersection of two distinct lines. Throws CoincidentInputs.
HomTriple meet(const HomTriple& l, const HomTriple& m);

/// p lies on l.
bool incident(const HomTriple& p, const HomTriple& l);

/// Point <-> line with identical coordinates.
HomTriple dual(const HomTriple& t);

/// All four points on a common line (det3 = 0 on every triple).
bool collinear(const HomTriple& p, const HomTriple& q, const HomTriple& r);

struct CrossRatioValue {
  Scalar value;
  bool degenerate = false;
};

/// [A,B;C,D] = [O,A,C][O,B,D] / ([O,A,D][O,B,C]). O defaults to the first
/// of (1:0:0), (0:1:0), (0:0:1) off the common line.
/// Throws CoincidentInputs, NotCollinear, BadAuxiliaryPoint.
CrossRatioValue cross_ratio(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d,
                            const std::optional<HomTriple>& aux = std::nullopt);

/// As cross_ratio, but coincident inputs yield {0, degenerate = true}
/// instead of throwing.
CrossRatioValue cross_ratio_checked(const HomTriple& a, const HomTriple& b, const HomTriple& c,
                                    const HomTriple& d, const std::optional<HomTriple>& aux = std::nullopt);

/// {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l} with exact duplicates merged,
/// in that order of first appearance. Throws DegenerateRatio for l in {0, 1}.
std::vector<Scalar> ratio_orbit(const Scalar& lambda);

/// lambda is one of -1, 1/2, 2.
bool is_harmonic_value(const Scalar& lambda);

/// Cross-ratio of the collinear quadruple lies in {-1, 1/2, 2}.
bool is_harmonic(const HomTriple& a, const HomTriple& b, const HomTriple& c, const HomTriple& d);

}  // namespace pappus
