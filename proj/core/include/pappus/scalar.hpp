#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "pappus/big_rational.hpp"
#include "pappus/quadext.hpp"
#include "pappus/ratfunc.hpp"

namespace pappus {

enum class FieldTag { rational, symbolic, quadext };

std::string_view to_string(FieldTag tag) noexcept;
/// Accepts "rational", "symbolic", "quadext".
FieldTag parse_field_tag(std::string_view text);

/// The field both tags embed into. Q embeds into Q(a,b) and Q(w); Q(a,b)
/// and Q(w) are incompatible (FieldMismatch).
FieldTag common_field(FieldTag x, FieldTag y);

/// Element of one of the three exact fields. Mixed arithmetic is allowed only
/// through the canonical embedding of Q.
class Scalar {
 public:
  using Value = std::variant<BigRational, RatFunc, QuadExt>;

  Scalar() : value_(BigRational(0)) {}
  Scalar(long v) : value_(BigRational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(BigRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RatFunc v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadExt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Scalar var_a() { return Scalar(RatFunc::var_a()); }
  static Scalar var_b() { return Scalar(RatFunc::var_b()); }
  static Scalar omega() { return Scalar(QuadExt::omega()); }
  /// Zero (resp. one) of the given field.
  static Scalar zero(FieldTag field);
  static Scalar one(FieldTag field);

  FieldTag field() const;
  const Value& value() const { return value_; }

  const BigRational& rational() const;
  const RatFunc& ratfunc() const;
  const QuadExt& quadext() const;

  /// Same value viewed in `field`; throws FieldMismatch if not embeddable.
  Scalar promoted(FieldTag field) const;

  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;
  /// Specialize a symbolic scalar at (a0, b0). Rationals pass through;
  /// Q(w) values are rejected with FieldMismatch.
  Scalar eval(const BigRational& a0, const BigRational& b0) const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend Scalar operator-(const Scalar& x);
  /// Mathematical equality (cross-multiplication for Q(a,b)).
  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  Value value_;
};

}  // namespace pappus
