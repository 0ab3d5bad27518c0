#include <doctest.h>

#include <random>

#include "hgm/enumerate.hpp"
#include "hgm/scan.hpp"
#include "oracles.hpp"

using namespace hgm;

TEST_CASE("kernel equivalence on random predicate systems") {
  std::mt19937 rng(123457);
  std::uniform_int_distribution<int> nd(1, 3), coeff(-40, 40), bound(-500, 500), range(-60, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    kernel::Predicates p;
    p.n = nd(rng);
    for (int m = 0; m < p.n; ++m) {
      p.a[m] = coeff(rng);
      p.b[m] = bound(rng);
    }
    int64_t x0 = range(rng), x1 = range(rng);
    if (x0 > x1) std::swap(x0, x1);
    uint64_t scalar = kernel::count_range_scalar(x0, x1, p);
#if defined(__x86_64__)
    if (kernel::avx2_supported()) CHECK(kernel::count_range_avx2(x0, x1, p) == scalar);
#endif
#if defined(__aarch64__)
    CHECK(kernel::count_range_neon(x0, x1, p) == scalar);
#endif
    // Against direct per-point evaluation.
    uint64_t direct = 0;
    for (int64_t x = x0; x <= x1; ++x)
      if (kernel::test_point(x, p)) ++direct;
    CHECK(scalar == direct);
  }
}

TEST_CASE("census slices agree across kernels") {
  for (const auto& g : enumerate_canonical_gammas(5)) {
    ConeBasis basis = cone_basis(g);
    for (long long k = 0; k <= g.n() + 1; ++k) {
      unsigned long long scalar = census_slice(basis, k, kernel::Kind::Scalar);
      CHECK(census_slice(basis, k, kernel::Kind::Auto) == scalar);
#if defined(__x86_64__)
      if (kernel::avx2_supported())
        CHECK(census_slice(basis, k, kernel::Kind::Avx2) == scalar);
#endif
    }
  }
}

TEST_CASE("pruned enumeration equals the naive box filter") {
  for (const auto& g : enumerate_canonical_gammas(4)) {
    ConeBasis basis = cone_basis(g);
    for (long long k = 0; k <= g.n(); ++k)
      CHECK(census_slice(basis, k, kernel::Kind::Scalar) ==
            hgm::testing::naive_census_slice(basis, k));
  }
}

TEST_CASE("census rejects ranges beyond the checked 64-bit envelope") {
  // L and the entries are ~2^26, so the slice bound computation exceeds 2^62.
  GammaVector g = GammaVector::from_entries({67108864, -67108863, -1});
  ConeBasis basis = cone_basis(g);
  CHECK_THROWS_WITH_AS(census_slice(basis, 512, kernel::Kind::Scalar),
                       doctest::Contains("EnumerationRange"), Error);
  // Small weights on the same cone stay inside the envelope.
  CHECK(census_slice(basis, 0, kernel::Kind::Scalar) == 1);
}

TEST_CASE("kernel selection") {
  CHECK(kernel::available(kernel::Kind::Scalar));
  CHECK(kernel::resolve(kernel::Kind::Scalar) == kernel::Kind::Scalar);
  kernel::Kind picked = kernel::resolve(kernel::Kind::Auto);
  CHECK(kernel::available(picked));
  CHECK(std::string(kernel::name(picked)) != "unknown");
#if defined(__x86_64__)
  if (kernel::avx2_supported()) {
    CHECK(kernel::resolve(kernel::Kind::Avx2) == kernel::Kind::Avx2);
  } else {
    CHECK(kernel::resolve(kernel::Kind::Avx2) == kernel::Kind::Scalar);
  }
  CHECK(kernel::resolve(kernel::Kind::Neon) == kernel::Kind::Scalar);
#endif
}
