#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace twq {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction p/q, always reduced with q >= 1.
class Rational {
 public:
  Rational() : p_(0), q_(1) {}
  Rational(std::int64_t p) : p_(p), q_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt p) : p_(std::move(p)), q_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt p, BigInt q);

  const BigInt& num() const { return p_; }
  const BigInt& den() const { return q_; }

  int sign() const { return p_.sign(); }
  bool is_zero() const { return p_.is_zero(); }
  bool is_integer() const { return q_ == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const { return Rational(boost::multiprecision::abs(p_), q_, Reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-p_, q_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with q printed even when 1.
  std::string str() const;

  // Accepts "p", "p/q", and decimals such as "-0.125".
  static Rational parse(std::string_view text);

 private:
  struct Reduced {};
  Rational(BigInt p, BigInt q, Reduced) : p_(std::move(p)), q_(std::move(q)) {}

  BigInt p_;
  BigInt q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Simplest fraction strictly inside (lo, hi): smallest denominator, then
// smallest absolute numerator. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

// Smallest k >= 0 with 2^k >= x, for x > 0.
std::int64_t ceil_log2(const Rational& x);

}  // namespace twq
