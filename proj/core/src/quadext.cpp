#include "pappus/quadext.hpp"

#include "pappus/error.hpp"

namespace pappus {

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  // (x0 + x1 w)(y0 + y1 w) = x0 y0 + (x0 y1 + x1 y0) w + x1 y1 (w - 1)
  const BigRational hi = c1_ * rhs.c1_;
  const BigRational lo = c0_ * rhs.c0_ - hi;
  const BigRational mid = c0_ * rhs.c1_ + c1_ * rhs.c0_ + hi;
  c0_ = lo;
  c1_ = mid;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q(w)");
  const BigRational n = norm().inverse();
  const QuadExt c = conjugate();
  return QuadExt(c.c0() * n, c.c1() * n);
}

std::string QuadExt::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string w = c1_.abs().is_one() ? "w" : c1_.abs().to_string() + "*w";
  if (c0_.is_zero()) return (c1_.sign() < 0 ? "-" : "") + w;
  return c0_.to_string() + (c1_.sign() < 0 ? " - " : " + ") + w;
}

}  // namespace pappus
