#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pappus {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpz_class& integer) : value_(integer) {}
  explicit BigRational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q" (decimal integers, q != 0).
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational inverse() const;
  BigRational abs() const { return BigRational(::abs(value_)); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
  BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
  BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  friend BigRational operator-(const BigRational& x) { return BigRational(mpq_class(-x.value_)); }

  friend bool operator==(const BigRational& x, const BigRational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

 private:
  mpq_class value_;
};

/// gcd of |numerators| / lcm of denominators; the positive rational c such
/// that every input divided by c is an integer with overall gcd 1.
/// Returns 1 for an all-zero input.
template <typename Range>
BigRational rational_content(const Range& values) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const BigRational& v : values) {
    if (v.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get().get_den_mpz_t());
  }
  if (num_gcd == 0) return BigRational(1);
  return BigRational(num_gcd, den_lcm);
}

}  // namespace pappus
