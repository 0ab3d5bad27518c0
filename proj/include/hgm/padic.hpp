#pragma once

#include <vector>

#include "hgm/datum.hpp"

namespace hgm {

/// A prime p = 1 (mod M(HD)) together with the datum it applies to.
struct PadicContext {
  unsigned long long p = 0;
  HypergeometricDatum hd;

  static PadicContext create(unsigned long long p, HypergeometricDatum hd);
};

/// M(HD) as a 64-bit modulus for prime searches; throws BadRange when the
/// level does not fit.
unsigned long long level_modulus(const HypergeometricDatum& hd);

/// First p-adic digit [a]_0 of a rational with denominator coprime to p.
long long first_digit(const Rational& a, unsigned long long p);

/// ord_p (a)_k = -floor(a - k/(p-1)) for a in (0,1], 1 <= k < p; 0 when
/// k <= [-a]_0 and 1 otherwise.
int pochhammer_order(const Rational& a, long long k, unsigned long long p);

/// orders[k] = ord_p A_HD(k) for k = 0..p-1, from the floor-sum formula.
struct ValuationProfile {
  std::vector<long long> orders;
};

ValuationProfile valuation_profile(const PadicContext& ctx);

/// Phi(i) = ord_p A(k) + r on the digit intervals ([-mu_i]_0, [-mu_{i+1}]_0],
/// and at k = mu_{i+1}(p-1) when mu_i < mu_{i+1}.
bool verify_phi_bridge(const GammaVector& g, unsigned long long p);

/// ord_p A(mu(p-1)) = s - r + sum {-mu p_i} - sum {-mu q_j} for every datum
/// element mu.
bool verify_lemma_fractional(const GammaVector& g, unsigned long long p);

}  // namespace hgm
