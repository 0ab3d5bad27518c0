#include <cstdlib>
#include <cstring>
#include <mutex>

#include "hgm/enumerate.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hgm::kernel {

uint64_t count_range_scalar(int64_t x0, int64_t x1, const Predicates& p) {
  uint64_t count = 0;
  for (int64_t x = x0; x <= x1; ++x)
    if (test_point(x, p)) ++count;
  return count;
}

#if defined(__x86_64__)

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) uint64_t count_range_avx2(int64_t x0, int64_t x1,
                                                          const Predicates& p) {
  uint64_t count = 0;
  int64_t x = x0;
  if (x1 - x0 + 1 >= 8) {
    __m256i a[3], b[3];
    for (int m = 0; m < p.n; ++m) {
      a[m] = _mm256_set1_epi32(static_cast<int32_t>(p.a[m]));
      b[m] = _mm256_set1_epi32(static_cast<int32_t>(p.b[m]));
    }
    const __m256i step = _mm256_set1_epi32(8);
    __m256i xv = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int32_t>(x)),
                                  _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
    for (; x + 7 <= x1; x += 8) {
      __m256i bad = _mm256_setzero_si256();
      for (int m = 0; m < p.n; ++m) {
        __m256i lhs = _mm256_mullo_epi32(a[m], xv);
        bad = _mm256_or_si256(bad, _mm256_cmpgt_epi32(lhs, b[m]));
      }
      unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(bad)));
      count += static_cast<uint64_t>(__builtin_popcount(~mask & 0xffu));
      xv = _mm256_add_epi32(xv, step);
    }
  }
  for (; x <= x1; ++x)
    if (test_point(x, p)) ++count;
  return count;
}

#endif  // __x86_64__

#if defined(__aarch64__)

uint64_t count_range_neon(int64_t x0, int64_t x1, const Predicates& p) {
  uint64_t count = 0;
  int64_t x = x0;
  if (x1 - x0 + 1 >= 4) {
    int32x4_t a[3], b[3];
    for (int m = 0; m < p.n; ++m) {
      a[m] = vdupq_n_s32(static_cast<int32_t>(p.a[m]));
      b[m] = vdupq_n_s32(static_cast<int32_t>(p.b[m]));
    }
    const int32_t lane_off[4] = {0, 1, 2, 3};
    int32x4_t offsets = vld1q_s32(lane_off);
    for (; x + 3 <= x1; x += 4) {
      int32x4_t xv = vaddq_s32(vdupq_n_s32(static_cast<int32_t>(x)), offsets);
      uint32x4_t bad = vdupq_n_u32(0);
      for (int m = 0; m < p.n; ++m) {
        int32x4_t lhs = vmulq_s32(a[m], xv);
        bad = vorrq_u32(bad, vcgtq_s32(lhs, b[m]));
      }
      // Lanes are all-ones when a predicate failed; count the zero lanes.
      uint32x4_t good = vmvnq_u32(bad);
      count += vaddvq_u32(vshrq_n_u32(good, 31));
    }
  }
  for (; x <= x1; ++x)
    if (test_point(x, p)) ++count;
  return count;
}

#endif  // __aarch64__

bool available(Kind k) {
  switch (k) {
    case Kind::Auto:
    case Kind::Scalar:
      return true;
    case Kind::Avx2:
#if defined(__x86_64__)
      return avx2_supported();
#else
      return false;
#endif
    case Kind::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Kind env_kind() {
  const char* env = std::getenv("HGM_KERNEL");
  if (env == nullptr) return Kind::Auto;
  if (std::strcmp(env, "scalar") == 0) return Kind::Scalar;
  if (std::strcmp(env, "avx2") == 0) return Kind::Avx2;
  if (std::strcmp(env, "neon") == 0) return Kind::Neon;
  return Kind::Auto;
}

}  // namespace

Kind resolve(Kind wanted) {
  if (wanted == Kind::Auto) {
    static std::once_flag flag;
    static Kind from_env = Kind::Auto;
    std::call_once(flag, [] { from_env = env_kind(); });
    if (from_env != Kind::Auto && available(from_env)) return from_env;
#if defined(__x86_64__)
    if (avx2_supported()) return Kind::Avx2;
#endif
#if defined(__aarch64__)
    return Kind::Neon;
#endif
    return Kind::Scalar;
  }
  return available(wanted) ? wanted : Kind::Scalar;
}

const char* name(Kind k) {
  switch (k) {
    case Kind::Auto: return "auto";
    case Kind::Scalar: return "scalar";
    case Kind::Avx2: return "avx2";
    case Kind::Neon: return "neon";
  }
  return "unknown";
}

}  // namespace hgm::kernel
