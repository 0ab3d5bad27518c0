#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hgm/rational.hpp"

namespace hgm {

/// Integer-coefficient polynomial in one variable. Coefficients are stored by
/// exponent with trailing zeros trimmed; the zero polynomial has an empty
/// coefficient sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Int coeff(size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial& operator*=(const Int& k);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// Multiplies by x^k.
  IntPolynomial shifted(size_t k) const;

  /// Exact synthetic division by (1-x). A nonzero remainder means a broken
  /// caller invariant and raises InternalError.
  IntPolynomial divided_by_one_minus_x() const;
  IntPolynomial divided_by_one_minus_x_pow(int m) const;

  /// Coefficients 0..order of the power series of this/(1-x)^n.
  std::vector<Int> series_div_one_minus_x_pow(int n, long order) const;

  Int eval_at_one() const;

  static IntPolynomial one_minus_x_pow(int m);
  /// 1 + x + ... + x^{m-1}; zero polynomial for m == 0.
  static IntPolynomial geometric(long m);
  static IntPolynomial monomial(size_t k, Int coeff = Int(1));

  /// Human form, e.g. "1+4x+x^2".
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace hgm
