#include <doctest.h>

#include "hgm/numbers.hpp"

using namespace hgm;

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(49) == 0);
  // sum_{d|n} mu(d) = [n == 1]
  for (unsigned long long n = 1; n <= 200; ++n) {
    long long s = 0;
    for (unsigned long long d = 1; d <= n; ++d)
      if (n % d == 0) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("chu-vandermonde evaluates to [k == 0]") {
  CHECK(chu_vandermonde(3, 0) == 1);
  CHECK(chu_vandermonde(3, 2) == 0);
  CHECK(chu_vandermonde(1, 5) == 0);
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= 12; ++k) CHECK(chu_vandermonde(n, k) == (k == 0 ? 1 : 0));
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("fractional-part identities") {
  CHECK(frac_sum_identity_check(Rational(1, 2)));
  CHECK(frac_sum_identity_check(Rational(7)));
  CHECK(frac_sum_identity_check(Rational(2, 5)));
  CHECK(frac_sum_identity_check(Rational(-3, 7)));
  CHECK(frac_sum_identity_check(Rational(11, 12)));
  for (long num = -12; num <= 12; ++num)
    for (long den = 1; den <= 9; ++den) CHECK(frac_sum_identity_check(Rational(num, den)));
}

TEST_CASE("primality and progressions") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1000000016000000063ULL));  // = 1000000007^2
  CHECK(primes_one_mod(6, 2) == std::vector<unsigned long long>{7, 13});
  CHECK(primes_one_mod(10, 2) == std::vector<unsigned long long>{11, 31});
  CHECK(primes_one_mod(1, 2) == std::vector<unsigned long long>{2, 3});
  CHECK(primes_one_mod(20, 2, 31).empty());
  CHECK(primes_one_mod(8, 2, 31) == std::vector<unsigned long long>{17});
}
