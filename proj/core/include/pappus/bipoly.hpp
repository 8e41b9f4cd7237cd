#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pappus/big_rational.hpp"

#ifndef PAPPUS_MAX_POLY_DEGREE
#define PAPPUS_MAX_POLY_DEGREE 64
#endif

namespace pappus {

/// Per-variable degree tripwire. Exceeding it signals runaway expression
/// growth, not a legitimate computation.
inline constexpr std::uint32_t kMaxPolyDegree = PAPPUS_MAX_POLY_DEGREE;

/// Exponent pair (deg_a, deg_b).
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  std::uint32_t total() const { return a + b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in the indeterminates a, b with rational coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class BiPoly {
 public:
  using Terms = std::map<Monomial, BigRational>;

  BiPoly() = default;
  BiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(BigRational(constant)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly var_a() { return monomial({1, 0}, 1); }
  static BiPoly var_b() { return monomial({0, 1}, 1); }
  static BiPoly monomial(Monomial m, const BigRational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term if the polynomial is constant; 0 for the zero polynomial.
  BigRational constant_value() const;
  BigRational coefficient(Monomial m) const;

  std::uint32_t degree_a() const;
  std::uint32_t degree_b() const;
  std::uint32_t total_degree() const;

  BigRational eval(const BigRational& a0, const BigRational& b0) const;
  /// Partial specializations: a := a0 (resp. b := b0), other variable kept.
  BiPoly substitute_a(const BigRational& a0) const;
  BiPoly substitute_b(const BigRational& b0) const;

  /// Positive rational content (see rational_content); 1 for zero.
  BigRational content() const;
  /// Componentwise minimum exponent over all terms; {0,0} for zero.
  Monomial monomial_content() const;
  /// Divides every term by the monomial m (which must divide all terms).
  BiPoly divide_monomial(Monomial m) const;
  /// Exact quotient if divisor divides *this in Q[a,b], otherwise nullopt.
  std::optional<BiPoly> exact_divide(const BiPoly& divisor) const;

  /// Leading term in graded-lex order (total degree, then degree in a).
  std::pair<Monomial, BigRational> leading_term() const;
  /// Content removed and graded-lex leading coefficient made positive.
  BiPoly normalized() const;

  std::string to_string() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigRational& rhs);

  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator*(BiPoly x, const BigRational& y) { return x *= y; }
  friend BiPoly operator-(const BiPoly& x);
  friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms_ == y.terms_; }

 private:
  void check_degree() const;

  Terms terms_;
};

}  // namespace pappus
