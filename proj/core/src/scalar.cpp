#include "pappus/scalar.hpp"

#include <utility>

#include "pappus/error.hpp"

namespace pappus {

std::string_view to_string(FieldTag tag) noexcept {
  switch (tag) {
    case FieldTag::rational: return "rational";
    case FieldTag::symbolic: return "symbolic";
    case FieldTag::quadext: return "quadext";
  }
  return "?";
}

FieldTag parse_field_tag(std::string_view text) {
  if (text == "rational") return FieldTag::rational;
  if (text == "symbolic") return FieldTag::symbolic;
  if (text == "quadext") return FieldTag::quadext;
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
}

FieldTag common_field(FieldTag x, FieldTag y) {
  if (x == y) return x;
  if (x == FieldTag::rational) return y;
  if (y == FieldTag::rational) return x;
  throw Error(ErrorCode::FieldMismatch, "cannot combine Q(a,b) with Q(w)");
}

Scalar Scalar::zero(FieldTag field) { return Scalar(0).promoted(field); }
Scalar Scalar::one(FieldTag field) { return Scalar(1).promoted(field); }

FieldTag Scalar::field() const {
  switch (value_.index()) {
    case 0: return FieldTag::rational;
    case 1: return FieldTag::symbolic;
    default: return FieldTag::quadext;
  }
}

const BigRational& Scalar::rational() const {
  if (const auto* v = std::get_if<BigRational>(&value_)) return *v;
  throw Error(ErrorCode::FieldMismatch, "expected a rational scalar, got " + std::string(pappus::to_string(field())));
}

const RatFunc& Scalar::ratfunc() const {
  if (const auto* v = std::get_if<RatFunc>(&value_)) return *v;
  throw Error(ErrorCode::FieldMismatch, "expected a symbolic scalar, got " + std::string(pappus::to_string(field())));
}

const QuadExt& Scalar::quadext() const {
  if (const auto* v = std::get_if<QuadExt>(&value_)) return *v;
  throw Error(ErrorCode::FieldMismatch, "expected a Q(w) scalar, got " + std::string(pappus::to_string(field())));
}

Scalar Scalar::promoted(FieldTag target) const {
  const FieldTag from = field();
  if (from == target) return *this;
  if (from != FieldTag::rational) {
    throw Error(ErrorCode::FieldMismatch, std::string("cannot embed ") + std::string(pappus::to_string(from)) +
                                              " into " + std::string(pappus::to_string(target)));
  }
  const BigRational& q = std::get<BigRational>(value_);
  if (target == FieldTag::symbolic) return Scalar(RatFunc(q));
  return Scalar(QuadExt(q));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const { return *this == Scalar(1); }

Scalar Scalar::inverse() const {
  return std::visit([](const auto& v) { return Scalar(v.inverse()); }, value_);
}

Scalar Scalar::eval(const BigRational& a0, const BigRational& b0) const {
  switch (field()) {
    case FieldTag::rational: return *this;
    case FieldTag::symbolic: return Scalar(std::get<RatFunc>(value_).eval(a0, b0));
    case FieldTag::quadext: break;
  }
  throw Error(ErrorCode::FieldMismatch, "cannot specialize a Q(w) scalar at (a, b)");
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

namespace {

// Applies op to both operands after promotion to their common field.
template <typename Op>
Scalar combine(const Scalar& x, const Scalar& y, Op op) {
  if (x.value().index() == y.value().index()) {
    return std::visit(
        [&](const auto& xv) -> Scalar {
          using T = std::decay_t<decltype(xv)>;
          return Scalar(op(xv, std::get<T>(y.value())));
        },
        x.value());
  }
  const FieldTag f = common_field(x.field(), y.field());
  return combine(x.promoted(f), y.promoted(f), op);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& x, const auto& y) { return x + y; });
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& x, const auto& y) { return x - y; });
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  return *this = combine(*this, rhs, [](const auto& x, const auto& y) { return x * y; });
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  return *this = combine(*this, rhs, [](const auto& x, const auto& y) { return x / y; });
}

Scalar operator-(const Scalar& x) {
  return std::visit([](const auto& v) { return Scalar(-v); }, x.value_);
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.value_.index() == y.value_.index()) return x.value_ == y.value_;
  const FieldTag f = common_field(x.field(), y.field());
  return x.promoted(f).value_ == y.promoted(f).value_;
}

}  // namespace pappus
