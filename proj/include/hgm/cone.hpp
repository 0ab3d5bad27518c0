#pragma once

#include <functional>
#include <vector>

#include "hgm/datum.hpp"
#include "hgm/zigzag.hpp"

namespace hgm {

/// Integer vector in Z^n. Weight of a cone point is its first coordinate;
/// depth is the sum of its negative entries.
using LatticeVector = std::vector<long long>;

inline long long weight(const LatticeVector& v) { return v.empty() ? 0 : v[0]; }
long long depth(const LatticeVector& v);

/// The n+1 spanning vectors of C(Delta): e_0 = [1,0..0], e_i = unit bumps, and
/// e_n = [1, p_1..p_{r-1}, -q_1..-q_{s-1}] (slot order of GammaVector).
struct ConeBasis {
  GammaVector gamma;
  int n = 0;
  std::vector<LatticeVector> e;  // size n+1
};

ConeBasis cone_basis(const GammaVector& g);

/// Whether v = sum c_i e_i with all c_i >= 0 rational. Reduces to a rational
/// interval intersection in the coefficient of e_n.
bool cone_membership(const ConeBasis& basis, const LatticeVector& v);

namespace kernel {
enum class Kind { Auto, Scalar, Avx2, Neon };
}

/// Exact lattice-point counts w(0..k_max) by weight, via slice-by-weight box
/// enumeration filtered by the membership predicate. Slices run in parallel;
/// counts are exact and independent of worker count.
std::vector<unsigned long long> weight_census(const ConeBasis& basis, long long k_max,
                                              kernel::Kind kind = kernel::Kind::Auto);

/// H(k) = sum_{i=0..n} (-1)^i C(n,i) w(k-i) for k = 0..n.
HodgeVector hodge_from_census(const std::vector<unsigned long long>& census, int n);

/// u_mu: the integral "ceiling" of mu*e_n. Throws NotDatumElement when mu is
/// not an element of the datum of g.
LatticeVector primitive_element(const GammaVector& g, const Rational& mu);

/// Apexes w_0..w_{L-1} (index = -depth) and the removed basis index s(i) of
/// each translated subcone in the disjoint partition of the cone semigroup.
struct ApexSequence {
  std::vector<LatticeVector> apexes;
  std::vector<int> removed_index;
};

ApexSequence apex_sequence(const GammaVector& g);

/// Membership of v in w_i + C({e_j : j != s(i)}, Z>=0).
bool in_translated_subcone(const ConeBasis& basis, const LatticeVector& apex, int removed,
                           const LatticeVector& v);

/// Checks that every lattice point of weight <= k_max is covered by exactly
/// one translated subcone of the apex partition.
bool verify_partition(const GammaVector& g, long long k_max);

/// n! * Vol(Delta): sum of |det| over the simplicial decomposition obtained by
/// dropping each positive slot; equals the natural length L.
Int normalized_volume(const GammaVector& g);

/// Calls fn for every lattice point of C(Delta) of weight exactly k.
void for_each_point(const ConeBasis& basis, long long k,
                    const std::function<void(const LatticeVector&)>& fn);

}  // namespace hgm
