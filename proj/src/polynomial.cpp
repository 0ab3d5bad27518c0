#include "hgm/polynomial.hpp"

#include <sstream>

#include "hgm/numbers.hpp"

namespace hgm {

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const Int& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted(size_t k) const {
  if (is_zero()) return {};
  std::vector<Int> out(k, Int(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divided_by_one_minus_x() const {
  if (is_zero()) return {};
  // (1-x)g = f with g_k = f_k + g_{k-1}; the remainder is f(1).
  std::vector<Int> g(c_.size() - 1, Int(0));
  Int carry(0);
  for (size_t k = 0; k + 1 < c_.size(); ++k) {
    carry += c_[k];
    g[k] = carry;
  }
  if (c_.back() + carry != 0)
    fail(errc::internal_error, "division by (1-x) left remainder " + eval_at_one().get_str());
  return IntPolynomial(std::move(g));
}

IntPolynomial IntPolynomial::divided_by_one_minus_x_pow(int m) const {
  IntPolynomial r = *this;
  for (int i = 0; i < m; ++i) r = r.divided_by_one_minus_x();
  return r;
}

std::vector<Int> IntPolynomial::series_div_one_minus_x_pow(int n, long order) const {
  // 1/(1-x)^n = sum_k C(n-1+k, n-1) x^k.
  std::vector<Int> out(order + 1, Int(0));
  for (long k = 0; k <= order; ++k) {
    for (size_t i = 0; i < c_.size() && static_cast<long>(i) <= k; ++i)
      out[k] += c_[i] * binomial(n - 1 + (k - static_cast<long>(i)), n - 1);
  }
  return out;
}

Int IntPolynomial::eval_at_one() const {
  Int s(0);
  for (const auto& c : c_) s += c;
  return s;
}

IntPolynomial IntPolynomial::one_minus_x_pow(int m) {
  IntPolynomial r{1};
  IntPolynomial base{1, -1};
  for (int i = 0; i < m; ++i) r = r * base;
  return r;
}

IntPolynomial IntPolynomial::geometric(long m) {
  std::vector<Int> c(std::max<long>(m, 0), Int(1));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(size_t k, Int coeff) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? "-" : "+");
    }
    Int mag = abs(a);
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hgm
