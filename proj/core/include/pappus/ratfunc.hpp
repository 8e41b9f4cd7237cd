#pragma once

#include <string>

#include "pappus/bipoly.hpp"

namespace pappus {

/// Element of Q(a, b) kept as an unreduced fraction num/den.
///
/// No polynomial GCD is ever taken. Equality is decided by
/// cross-multiplication, so two representations of the same function compare
/// equal regardless of common factors. `simplified()` performs the cheap
/// reductions used for display only.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const BiPoly& num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(BiPoly num, BiPoly den);

  static RatFunc var_a() { return RatFunc(BiPoly::var_a()); }
  static RatFunc var_b() { return RatFunc(BiPoly::var_b()); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// True if the function does not depend on a (resp. b), decided by
  /// cross-multiplication against a specialization in that variable.
  bool is_free_of_a() const;
  bool is_free_of_b() const;

  RatFunc inverse() const;
  /// Throws PoleAtPoint if the denominator vanishes at (a0, b0).
  BigRational eval(const BigRational& a0, const BigRational& b0) const;

  /// Monomial cancellation, exact-division attempts, content normalization.
  RatFunc simplified() const;
  /// Text form: "num" or "(num)/(den)" over variables a, b.
  std::string to_string() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  friend RatFunc operator-(const RatFunc& x) { return RatFunc(-x.num_, x.den_); }
  friend bool operator==(const RatFunc& x, const RatFunc& y);

 private:
  BiPoly num_;
  BiPoly den_;
};

}  // namespace pappus
