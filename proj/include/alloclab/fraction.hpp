#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alloclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Argument outside the documented domain of an operation. The CLI maps this
// to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a documented size cap (enumeration state count, n caps,
// sweep row cap...). The CLI maps this to exit code 3.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (cpp_rational canonicalizes on every operation). All
// probability math in the library goes through this type; binary64 appears
// only in the documented fast paths and in Monte Carlo estimates.
class Fraction {
 public:
  Fraction() : v_(0) {}
  Fraction(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design
  Fraction(const BigInt& num, const BigInt& den);
  explicit Fraction(BigRat v) : v_(std::move(v)) {}

  // Accepts "a", "a/b" and decimal strings with at most 18 fractional
  // digits (parsed losslessly as a/10^k). Throws DomainError otherwise.
  static Fraction parse(const std::string& text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const BigRat& raw() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  // Integer exponent; negative exponents require a nonzero value.
  Fraction pow(std::int64_t e) const;

  double to_double() const { return v_.convert_to<double>(); }

  // "a/b", or just "a" for integers.
  std::string str() const;
  // Fixed-point rendering with `places` digits after the point, rounded to
  // nearest (ties away from zero), e.g. (220/243).decimal(5) == "0.90535".
  std::string decimal(int places) const;
  // Rounded to `digits` significant digits; plain notation for moderate
  // magnitudes, scientific otherwise.
  std::string decimal_sig(int digits) const;

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return Fraction(a.v_ + b.v_); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return Fraction(a.v_ - b.v_); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(a.v_ * b.v_); }
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction operator-() const { return Fraction(-v_); }
  Fraction& operator+=(const Fraction& o) { v_ += o.v_; return *this; }
  Fraction& operator-=(const Fraction& o) { v_ -= o.v_; return *this; }
  Fraction& operator*=(const Fraction& o) { v_ *= o.v_; return *this; }
  Fraction& operator/=(const Fraction& o);

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return a.v_ != b.v_; }
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Fraction& a, const Fraction& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return a.v_ >= b.v_; }

 private:
  BigRat v_;
};

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

// base^e for e >= 0.
BigInt ipow(const BigInt& base, std::int64_t e);

}  // namespace alloclab
