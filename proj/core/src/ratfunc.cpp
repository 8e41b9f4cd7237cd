#include "pappus/ratfunc.hpp"

#include "pappus/error.hpp"

namespace pappus {

namespace {

// Specialization points used for the variable-freeness test. A handful of
// distinct values guarantees one where the numerator and denominator do not
// both vanish.
const long kProbeValues[] = {2, 3, 5, 7, 11, 13, 17, 19};

std::string wrap(const std::string& text, bool parens) { return parens ? "(" + text + ")" : text; }

}  // namespace

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (den_.is_constant() && !den_.constant_value().is_one()) {
    num_ *= den_.constant_value().inverse();
    den_ = BiPoly(1);
  }
}

bool operator==(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  if (!rhs.den_.is_constant()) den_ *= rhs.den_;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

BigRational RatFunc::eval(const BigRational& a0, const BigRational& b0) const {
  const BigRational d = den_.eval(a0, b0);
  if (d.is_zero()) {
    throw Error(ErrorCode::PoleAtPoint,
                "denominator " + den_.to_string() + " vanishes at a=" + a0.to_string() + ", b=" + b0.to_string());
  }
  return num_.eval(a0, b0) / d;
}

bool RatFunc::is_free_of_a() const {
  // f is free of a iff f equals its specialization f(a0, b) for a0 off the poles.
  for (long probe : kProbeValues) {
    const BiPoly num_at = num_.substitute_a(BigRational(probe));
    const BiPoly den_at = den_.substitute_a(BigRational(probe));
    if (den_at.is_zero()) continue;
    return *this == RatFunc(num_at, den_at);
  }
  return false;
}

bool RatFunc::is_free_of_b() const {
  for (long probe : kProbeValues) {
    const BiPoly num_at = num_.substitute_b(BigRational(probe));
    const BiPoly den_at = den_.substitute_b(BigRational(probe));
    if (den_at.is_zero()) continue;
    return *this == RatFunc(num_at, den_at);
  }
  return false;
}

RatFunc RatFunc::simplified() const {
  if (num_.is_zero()) return RatFunc();
  BiPoly n = num_;
  BiPoly d = den_;
  const Monomial mn = n.monomial_content();
  const Monomial md = d.monomial_content();
  const Monomial common{std::min(mn.a, md.a), std::min(mn.b, md.b)};
  n = n.divide_monomial(common);
  d = d.divide_monomial(common);
  if (auto q = n.exact_divide(d)) {
    n = *q;
    d = BiPoly(1);
  } else if (auto r = d.exact_divide(n)) {
    d = *r;
    n = BiPoly(1);
  }
  // Pull the rational scale onto the numerator; the denominator is kept
  // primitive with a positive graded-lex leading coefficient.
  const BiPoly dn = d.normalized();
  const BigRational scale = d.leading_term().second / dn.leading_term().second;
  return RatFunc(n * scale.inverse(), dn);
}

std::string RatFunc::to_string() const {
  const RatFunc s = simplified();
  if (s.den_.is_constant()) return s.num_.to_string();
  const std::string n = s.num_.to_string();
  const std::string d = s.den_.to_string();
  return wrap(n, s.num_.terms().size() > 1) + "/" +
         wrap(d, s.den_.terms().size() > 1 || d.find('*') != std::string::npos);
}

}  // namespace pappus
