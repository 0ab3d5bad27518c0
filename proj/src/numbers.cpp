#include "hgm/numbers.hpp"

#include <cctype>
#include <ostream>

namespace hgm {

Rational Rational::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail(errc::parse_error, "empty rational");
  text = text.substr(begin, end - begin + 1);

  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  // Base must be pinned to 10: the default mpz string base treats leading
  // zeros as octal, and GMP does not accept a leading '+'.
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) fail(errc::parse_error, "bad rational '" + std::string(text) + "'");
    return Rational(to_mpz(text), Int(1));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    fail(errc::parse_error, "bad rational '" + std::string(text) + "'");
  Int d = to_mpz(den);
  if (d == 0) fail(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(to_mpz(num), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int moebius(unsigned long long n) {
  if (n == 0) fail(errc::bad_range, "moebius(0)");
  int factors = 0;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

Int chu_vandermonde(long n, long k) {
  // C(n-1+j, n-1) counts degree-j monomials in n variables; for n = 0 that
  // count is [j == 0].
  auto monomials = [n](long j) -> Int {
    if (j < 0) return Int(0);
    if (n == 0) return Int(j == 0 ? 1 : 0);
    return binomial(n - 1 + j, n - 1);
  };
  Int sum(0);
  for (long i = 0; i <= n; ++i) {
    Int term = binomial(n, i) * monomials(k - i);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

bool frac_sum_identity_check(const Rational& r) {
  Rational lhs = frac(r) + frac(-r);
  Rational expected = r.is_integer() ? Rational(0) : Rational(1);
  if (lhs != expected) return false;
  for (long m = 1; m <= 12; ++m) {
    Rational sum(0);
    for (long i = 1; i <= m; ++i) sum += frac(r + Rational(i, m));
    Rational rhs = sum - Rational(m - 1, 2);
    if (frac(r * Rational(m)) != rhs) return false;
  }
  return true;
}

namespace {

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
  return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % m);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
  unsigned long long r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                               31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  unsigned long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for 64-bit inputs.
  for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                               31ULL, 37ULL}) {
    unsigned long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<unsigned long long> primes_one_mod(unsigned long long m, int count,
                                               unsigned long long cap) {
  if (m == 0) fail(errc::bad_range, "modulus must be positive");
  std::vector<unsigned long long> out;
  if (m == 1) {
    for (unsigned long long p = 2; static_cast<int>(out.size()) < count; ++p) {
      if (cap && p > cap) break;
      if (is_prime(p)) out.push_back(p);
    }
    return out;
  }
  for (unsigned long long p = m + 1; static_cast<int>(out.size()) < count; p += m) {
    if (cap && p > cap) break;
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace hgm
