#pragma once

#include <cstdint>

#include "hgm/cone.hpp"

namespace hgm::kernel {

/// Conjunction of up to three linear predicates a[m]*x <= b[m]. The slice
/// enumerator reduces per-point cone membership along the innermost
/// coordinate to this form, which is what the SIMD kernels vectorize.
struct Predicates {
  int64_t a[3] = {0, 0, 0};
  int64_t b[3] = {0, 0, 0};
  int n = 0;
};

inline bool test_point(int64_t x, const Predicates& p) {
  for (int m = 0; m < p.n; ++m)
    if (p.a[m] * x > p.b[m]) return false;
  return true;
}

/// Number of x in [x0, x1] satisfying all predicates. Reference kernel.
uint64_t count_range_scalar(int64_t x0, int64_t x1, const Predicates& p);

#if defined(__x86_64__)
/// AVX2 variant, 8 lanes of int32. Caller guarantees all |a*x| and |b| fit in
/// int32 over the range.
uint64_t count_range_avx2(int64_t x0, int64_t x1, const Predicates& p);
bool avx2_supported();
#endif
#if defined(__aarch64__)
uint64_t count_range_neon(int64_t x0, int64_t x1, const Predicates& p);
#endif

bool available(Kind k);
/// Resolves Auto to the preferred available kind; honors the HGM_KERNEL
/// environment variable (scalar, avx2, neon).
Kind resolve(Kind wanted);
const char* name(Kind k);

}  // namespace hgm::kernel

namespace hgm {

/// Count of weight-k lattice points of the cone (one census slice).
unsigned long long census_slice(const ConeBasis& basis, long long k, kernel::Kind kind);

}  // namespace hgm
