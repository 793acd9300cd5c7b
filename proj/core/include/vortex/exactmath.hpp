#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vortex/error.hpp"

namespace vortex {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const { return denominator() == 1; }
  /// Throws InvalidInput unless is_integer().
  BigInt to_integer() const;
  /// Throws InvalidInput unless the value is an integer that fits in an int.
  int to_int() const;

  BigInt floor() const;
  BigInt ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "n" when the denominator is 1.
  std::string to_string() const;
  /// Accepts "n", "-n", "p/q" (any sign, any common factor). Throws InvalidInput.
  static Rational parse(std::string_view text);

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Polynomial in t with arbitrary-precision integer coefficients.
/// Coefficient i multiplies t^i; trailing zeros are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// c * t^power.
  static IntPolynomial monomial(const BigInt& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero outside the stored range.
  BigInt coefficient(int i) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  BigInt evaluate(const BigInt& t) const;

  /// True iff every coefficient is >= 0.
  bool is_nonnegative() const;

  /// "1+4t+t^2" style rendering; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Raised by exact_div when the divisor does not divide exactly.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(IntPolynomial remainder);
  const IntPolynomial& remainder() const { return remainder_; }

 private:
  IntPolynomial remainder_;
};

/// Returns r with p == q * r. Throws DivisionByZero for q == 0 and
/// NotDivisible when the integer long division leaves a remainder.
IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& q);

/// coefficient(i) == coefficient(degree - i) for 0 <= i <= degree.
/// Throws InvalidInput when degree < p.degree().
bool is_palindromic(const IntPolynomial& p, int degree);

}  // namespace vortex
