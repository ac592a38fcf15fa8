#include "twq/rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "twq/errors.hpp"

namespace twq {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt p, BigInt q) {
  if (q.is_zero()) throw DomainError("rational with zero denominator");
  if (q.sign() < 0) {
    p = -p;
    q = -q;
  }
  BigInt g = mp::gcd(mp::abs(p), q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  p_ = std::move(p);
  q_ = std::move(q);
}

BigInt Rational::floor() const {
  BigInt quo, rem;
  mp::divide_qr(p_, q_, quo, rem);
  if (rem.sign() < 0) --quo;
  return quo;
}

BigInt Rational::ceil() const {
  BigInt quo, rem;
  mp::divide_qr(p_, q_, quo, rem);
  if (rem.sign() > 0) ++quo;
  return quo;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.q_ == b.q_) return Rational(a.p_ + b.p_, a.q_);
  return Rational(a.p_ * b.q_ + b.p_ * a.q_, a.q_ * b.q_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.p_ * b.p_, a.q_ * b.q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.p_.is_zero()) throw DomainError("division by zero");
  return Rational(a.p_ * b.q_, a.q_ * b.p_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.p_ * b.q_;
  BigInt rhs = b.p_ * a.q_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return p_.str() + "/" + q_.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError(0, "expected digits in '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(0, "invalid number '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

BigInt pow10(std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    r = Rational(parse_digits(s.substr(0, slash), text), parse_digits(s.substr(slash + 1), text));
  } else {
    std::int64_t exp = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view es = s.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (es.size() > 6) throw ParseError(0, "exponent too large in '" + std::string(text) + "'");
      exp = parse_digits(es, text).convert_to<std::int64_t>();
      if (eneg) exp = -exp;
      s = s.substr(0, e);
    }
    std::string_view ip = s, fp;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      ip = s.substr(0, dot);
      fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty()) throw ParseError(0, "invalid number '" + std::string(text) + "'");
    }
    BigInt digits = ip.empty() ? BigInt(0) : parse_digits(ip, text);
    if (!fp.empty()) digits = digits * pow10(static_cast<std::int64_t>(fp.size())) + parse_digits(fp, text);
    exp -= static_cast<std::int64_t>(fp.size());
    r = exp >= 0 ? Rational(digits * pow10(exp)) : Rational(digits, pow10(-exp));
  }
  return neg ? -r : r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("simplest_between: empty interval");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_between(-hi, -lo);

  // 0 <= lo < hi. Continued-fraction descent; b_inf marks an unbounded upper end.
  Rational a = lo, b = hi;
  bool b_inf = false;
  std::vector<BigInt> terms;
  for (;;) {
    BigInt f = a.floor();
    if (b_inf || Rational(f + 1) < b) {
      terms.push_back(f + 1);
      break;
    }
    terms.push_back(f);
    // a - f in [0,1), b - f in (0,1]. Invert and swap.
    Rational na = Rational(1) / (b - Rational(f));
    if (a == Rational(f)) {
      b_inf = true;
    } else {
      b = Rational(1) / (a - Rational(f));
    }
    a = na;
  }
  Rational x(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) x = Rational(*it) + Rational(1) / x;
  return x;
}

std::int64_t ceil_log2(const Rational& x) {
  if (x.sign() <= 0) throw DomainError("ceil_log2 of non-positive value");
  BigInt n = x.ceil();
  if (n <= 1) return 0;
  return static_cast<std::int64_t>(mp::msb(BigInt(n - 1))) + 1;
}

}  // namespace twq
