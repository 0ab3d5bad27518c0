#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "hgm/errors.hpp"

namespace hgm {

/// Arbitrary-precision integer. All core arithmetic is exact; nothing in the
/// library rounds.
using Int = mpz_class;

/// mpz_class has no long long constructor; LP64 is assumed throughout.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

/// Exact rational, always stored in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}        // NOLINT: implicit by design
  Rational(const Int& n) : num_(n), den_(1) {}  // NOLINT
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
  Rational(long num, long den) : num_(num), den_(den) { canonicalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }
  /// Fractional part r - floor(r), in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "p/q" for non-integers, "p" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
  }

  /// Parses "p" or "p/q" (optional sign on p). Throws ParseError.
  static Rational parse(std::string_view text);

 private:
  void canonicalize() {
    if (den_ == 0) fail(errc::parse_error, "zero denominator");
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hgm
