#pragma once

#include <vector>

#include "hgm/rational.hpp"

namespace hgm {

/// Binomial coefficient with the lattice-count convention: 0 unless 0 <= k <= n.
Int binomial(long n, long k);

/// Moebius function of n >= 1.
int moebius(unsigned long long n);

/// sum_{i=0}^{n} (-1)^i C(n,i) C(n-1+k-i, n-1); evaluates to 1 when k = 0 and
/// to 0 otherwise.
Int chu_vandermonde(long n, long k);

/// Fractional part {r} = r - floor(r).
inline Rational frac(const Rational& r) { return r.frac(); }

/// Checks {r}+{-r} = [r not integer] and, for every m in 1..12, the Gauss
/// multiplication identity {rm} = sum_{i=1..m} {r + i/m} - (m-1)/2.
bool frac_sum_identity_check(const Rational& r);

bool is_prime(unsigned long long n);

/// The smallest `count` primes p = 1 (mod m), in order. With cap > 0 only
/// primes <= cap are returned (possibly fewer than `count`).
std::vector<unsigned long long> primes_one_mod(unsigned long long m, int count,
                                               unsigned long long cap = 0);

}  // namespace hgm
