#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lazard/error.hpp"

namespace lazard {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long n) : value_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0)
      throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpz_class n) : value_(std::move(n)) {}
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "p/q" or "p" with optional leading sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+'))
        t.remove_prefix(1);
      if (t.empty())
        return false;
      for (char c : t)
        if (c < '0' || c > '9')
          return false;
      return true;
    };
    auto strip_plus = [](std::string t) {
      if (!t.empty() && t.front() == '+')
        t.erase(0, 1);
      return t;
    };
    if (slash == std::string::npos) {
      if (!valid_int(s))
        throw InputError("malformed rational '" + s + "'");
      return Rational(mpz_class(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
      throw InputError("malformed rational '" + s + "'");
    mpz_class d(den);
    if (d == 0)
      throw DivisionByZero();
    return Rational(mpq_class(mpz_class(strip_plus(num)), d));
  }

  std::string str() const {
    if (value_.get_den() == 1)
      return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero())
      throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.value_ = -a.value_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class value_;
};

enum class ArithOp { add, sub, mul, div };

inline Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
  case ArithOp::add: return a + b;
  case ArithOp::sub: return a - b;
  case ArithOp::mul: return a * b;
  case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

/// Converts an exact integer to int64, throwing if it does not fit.
inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw SizeLimitExceeded("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

} // namespace lazard
