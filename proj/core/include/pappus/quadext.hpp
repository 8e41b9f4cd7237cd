#pragma once

#include <string>

#include "pappus/big_rational.hpp"

namespace pappus {

/// c0 + c1*w in Q(w), where w is a root of x^2 - x + 1 (so w^2 = w - 1).
/// The other root is 1 - w.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const BigRational& c0) : c0_(c0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long c0) : c0_(c0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(BigRational c0, BigRational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static QuadExt omega() { return QuadExt(0, 1); }

  const BigRational& c0() const { return c0_; }
  const BigRational& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool is_rational() const { return c1_.is_zero(); }

  /// Image under the Galois automorphism w -> 1 - w.
  QuadExt conjugate() const { return QuadExt(c0_ + c1_, -c1_); }
  /// Field norm c0^2 + c0*c1 + c1^2.
  BigRational norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }
  QuadExt inverse() const;
  std::string to_string() const;

  QuadExt& operator+=(const QuadExt& rhs) { c0_ += rhs.c0_; c1_ += rhs.c1_; return *this; }
  QuadExt& operator-=(const QuadExt& rhs) { c0_ -= rhs.c0_; c1_ -= rhs.c1_; return *this; }
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs) { return *this *= rhs.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.c0_, -x.c1_); }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  BigRational c0_;
  BigRational c1_;
};

}  // namespace pappus
