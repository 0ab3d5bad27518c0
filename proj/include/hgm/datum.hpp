#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hgm/rational.hpp"

namespace hgm {

/// Signed multiset [p_1..p_r, -q_1..-q_s] with sum(p) = sum(q) = L, the
/// denominators of a hypergeometric datum defined over Q.
///
/// Storage order: positives descending (positives.back() is the entry left
/// out of the last cone basis vector); negatives with the entries > 1
/// ascending followed by the 1s, so that negatives.back() = 1. This is the
/// coordinate order used by the cone machinery. Text forms are canonicalized
/// with both sides descending.
struct GammaVector {
  std::vector<long long> positives;
  std::vector<long long> negatives;
  long long L = 0;

  int r() const { return static_cast<int>(positives.size()); }
  int s() const { return static_cast<int>(negatives.size()); }
  int n() const { return r() + s() - 1; }

  /// Builds from signed entries, validating and canonicalizing. Throws
  /// InvalidGamma on structural violations.
  static GammaVector from_entries(const std::vector<long long>& entries);
  /// Parses "3,-1,-1,-1" (comma- or space-separated signed integers).
  static GammaVector parse(std::string_view text);

  /// Canonical text form, both sides sorted descending: "4,4,2,-6,-3,-1".
  std::string str() const;

  bool operator==(const GammaVector& o) const {
    return positives == o.positives && negatives == o.negatives;
  }
  /// Scan order: (L, positives desc, negatives desc), lexicographic.
  bool operator<(const GammaVector& o) const;
};

inline long long natural_length(const GammaVector& g) { return g.L; }

/// Two equal-length multisets of rationals in (0,1], each a disjoint union of
/// full primitive-residue orbits {i/d : gcd(i,d)=1}, with 1 in beta. The value
/// 1 stands for the class of 0 mod 1; parsing reduces inputs mod 1 into (0,1].
struct HypergeometricDatum {
  std::vector<Rational> alpha;  // sorted ascending
  std::vector<Rational> beta;   // sorted ascending

  static HypergeometricDatum from_multisets(std::vector<Rational> a, std::vector<Rational> b);
  /// Parses "1/3,2/3,1;1,1,1" (';' separates alpha from beta).
  static HypergeometricDatum parse(std::string_view text);

  std::string alpha_str() const;
  std::string beta_str() const;
  bool operator==(const HypergeometricDatum& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
};

enum class Side { Beta = 0, Alpha = 1 };

struct MergedEntry {
  Rational value;
  Side side;
};

/// The sorted combined list mu_1 <= ... <= mu_2L; on ties all Beta copies
/// precede the Alpha copies. (mu_0 = 0 is an implicit sentinel.)
struct MergedList {
  std::vector<MergedEntry> entries;
  size_t size() const { return entries.size(); }
};

HypergeometricDatum gamma_to_datum(const GammaVector& g);

/// Inverse of gamma_to_datum via Moebius inversion on orbit multiplicities.
/// Throws NotOverQ / NoUnitDenominator / LengthMismatch.
GammaVector datum_to_gamma(const HypergeometricDatum& hd);

/// Level M(HD): lcm of all denominators of alpha and beta.
Int level(const HypergeometricDatum& hd);

/// Multiplicity of b in beta.
long long beta_multiplicity(const HypergeometricDatum& hd, const Rational& b);

MergedList merged_list(const HypergeometricDatum& hd);
/// Merged list of two arbitrary equal-length multisets (used for reduced data,
/// whose beta side need not contain 1).
MergedList merged_from(const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

/// Derived primitive datum: alpha and beta with their common part (elementwise
/// minimum multiplicity) removed. `offset` is the shift that renormalizes the
/// reduced zig-zag values (run with Phi(0) = r of the original gamma vector)
/// so the minimal Hodge number becomes 0.
struct ReducedDatum {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  long long offset = 0;
};

/// Throws EmptyReduction when alpha = beta as multisets.
ReducedDatum reduce_datum(const HypergeometricDatum& hd);

}  // namespace hgm
