#pragma once

#include <set>

#include "hgm/datum.hpp"
#include "hgm/polynomial.hpp"
#include "hgm/zigzag.hpp"

namespace hgm {

/// Slot table of S = {0..n}: slot 0 carries p_r (the positive entry left out
/// of e_n), slots 1..r-1 carry p_1..p_{r-1}, slots r..n carry q_1..q_s with
/// slot n carrying q_s = 1. S_+ = {0..r-1}, S_- = {r..n}.
struct SlotTable {
  std::vector<long long> value;
  int r = 0, s = 0, n = 0;
};

SlotTable slot_table(const GammaVector& g);

/// w(t) = sum_{S_+} {-p t} + sum_{S_-} {q t}; integer-valued and >= 0.
long long weight_w(const GammaVector& g, const Rational& t);

/// Counting form of w(t) for 0 < t <= 1:
/// sum_{S_+} #{k : 0 < k/p < t} - sum_{S_-} #{k : 0 < k/q <= t} + r.
long long weight_w_alt(const GammaVector& g, const Rational& t);

using IndexSet = std::set<int>;

/// gcd of the slot values outside T; T must be a proper subset of S.
long long d_T(const GammaVector& g, const IndexSet& T);

/// f(x;T) = sum_{c=0}^{d-1} x^{w(c/d)} with d = d_T.
IntPolynomial f_T(const GammaVector& g, const IndexSet& T);

enum class IeSide { Plus, Minus };

/// Inclusion-exclusion Hodge polynomial; both sides agree and the
/// coefficients are the Hodge multiplicities.
IntPolynomial hodge_polynomial_ie(const GammaVector& g, IeSide side);

/// sum_{t in T} x^{w(t)} (1 + x + ... + x^{m(t)-1}) over the positive-slot
/// breakpoints t; equals hodge_polynomial_ie.
IntPolynomial hodge_polynomial_simplified(const GammaVector& g);

/// Hodge vector from hodge_polynomial_ie(Plus), padded to n+1 entries.
HodgeVector hodge_vector_genfun(const GammaVector& g);

HodgeVector hodge_vector_from_polynomial(const IntPolynomial& f, int n);

}  // namespace hgm
