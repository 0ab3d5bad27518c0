#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgm/datum.hpp"

namespace hgm {

/// Zig-zag recursion over a merged list: Phi(0) given, then +1 at each alpha
/// element and -1 at each beta element.
struct ZigzagProfile {
  MergedList merged;
  std::vector<long long> phi;  // size merged.size() + 1
};

ZigzagProfile zigzag_profile(const MergedList& merged, long long phi0);
inline ZigzagProfile zigzag_profile(const HypergeometricDatum& hd, int r) {
  return zigzag_profile(merged_list(hd), r);
}

/// HT(HD) = {Phi(i) : mu_i in beta}, sorted; size L.
std::vector<long long> hodge_tate_multiset(const ZigzagProfile& profile);

/// Multiplicities H(0..n); sum equals L and H(k) = 0 for k > n.
struct HodgeVector {
  std::vector<long long> h;
  bool operator==(const HodgeVector& o) const { return h == o.h; }
  long long sum() const;
  std::string str() const;
};

HodgeVector hodge_vector_zigzag(const GammaVector& g);

/// Lower convex path from (0,0): H(0) segments of slope 0, then H(1) of slope
/// 1, and so on; collinear vertices merged.
struct HodgePolygon {
  std::vector<std::pair<long long, long long>> vertices;
};

HodgePolygon hodge_polygon(const HodgeVector& h);

/// Deterministic text rendering of a zig-zag diagram; format is "ascii" or
/// "svg". Throws UnsupportedFormat otherwise.
std::string render_zigzag(const ZigzagProfile& profile, std::string_view format);

}  // namespace hgm
