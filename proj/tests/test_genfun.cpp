#include <doctest.h>

#include <random>

#include "hgm/genfun.hpp"
#include "hgm/scan.hpp"
#include "oracles.hpp"

using namespace hgm;

TEST_CASE("slot table layout") {
  SlotTable st = slot_table(GammaVector::parse("5,2,-6,-1"));
  REQUIRE(st.n == 3);
  CHECK(st.r == 2);
  CHECK(st.s == 2);
  // slot 0 = p_r = 2, slot 1 = p_1 = 5, slots 2..3 = q_1 = 6, q_2 = 1.
  CHECK(st.value == std::vector<long long>{2, 5, 6, 1});
}

TEST_CASE("weight function w(t)") {
  GammaVector g = GammaVector::parse("6,-3,-2,-1");
  CHECK(weight_w(g, Rational(5, 6)) == 2);
  CHECK(weight_w(g, Rational(1, 6)) == 1);
  CHECK(weight_w(g, Rational(1)) == 0);
  CHECK(weight_w(GammaVector::parse("4,4,2,-3,-6,-1"), Rational(1)) == 0);
}

TEST_CASE("counting form of w(t)") {
  GammaVector g = GammaVector::parse("6,-3,-2,-1");
  CHECK(weight_w_alt(g, Rational(5, 6)) == 2);
  CHECK(weight_w_alt(g, Rational(1)) == 0);
  CHECK(weight_w_alt(GammaVector::parse("3,-1,-1,-1"), Rational(1, 3)) == 1);
  CHECK_THROWS_AS(weight_w_alt(g, Rational(0)), Error);
  CHECK_THROWS_AS(weight_w_alt(g, Rational(3, 2)), Error);
}

TEST_CASE("w and its counting form agree on breakpoints and random rationals") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(1, 720);
  for (const auto& g : enumerate_canonical_gammas(10)) {
    SlotTable st = slot_table(g);
    for (int i = 0; i <= st.r - 1; ++i)
      for (long long c = 1; c <= st.value[i]; ++c) {
        Rational t(c, st.value[i]);
        CHECK(weight_w(g, t) == weight_w_alt(g, t));
      }
    for (int trial = 0; trial < 200; ++trial) {
      Rational t(num(rng), 720);
      CHECK(weight_w(g, t) == weight_w_alt(g, t));
    }
  }
}

TEST_CASE("facet denominators d_T") {
  GammaVector g = GammaVector::parse("5,2,-6,-1");
  // Excluding only the q=6 slot (slot 2) leaves gcd = 6.
  CHECK(d_T(g, IndexSet{0, 1, 3}) == 6);
  // Excluding only the q=1 slot gives 1.
  CHECK(d_T(g, IndexSet{0, 1, 2}) == 1);
  GammaVector six = GammaVector::parse("6,-3,-2,-1");
  // T = S_-: the excluded set is the p=6 slot.
  CHECK(d_T(six, IndexSet{1, 2, 3}) == 6);
  CHECK(d_T(six, IndexSet{}) == 1);
  CHECK_THROWS_WITH_AS(d_T(six, IndexSet{0, 1, 2, 3}), doctest::Contains("ImproperSubset"),
                       Error);
  CHECK_THROWS_AS(d_T(six, IndexSet{9}), Error);
}

TEST_CASE("facet polynomials f(x;T)") {
  GammaVector g = GammaVector::parse("5,2,-6,-1");
  CHECK(f_T(g, IndexSet{0, 1, 3}) == IntPolynomial{1, 3, 2});
  CHECK(f_T(g, IndexSet{0, 1, 2}) == IntPolynomial{1});
  // f(x;T) = 1 whenever the q=1 slot lies outside T.
  for (const auto& gv : enumerate_canonical_gammas(6)) {
    SlotTable st = slot_table(gv);
    IndexSet no_unit;
    for (int j = 0; j <= st.n - 1; ++j) no_unit.insert(j);
    no_unit.erase(0);
    CHECK(f_T(gv, no_unit) == IntPolynomial{1});
  }
  // Dwork family: f(x; S_-) = 1 + x + ... + x^{s-1}.
  for (long long s = 2; s <= 6; ++s) {
    std::vector<long long> entries{s};
    for (long long i = 0; i < s; ++i) entries.push_back(-1);
    GammaVector dwork = GammaVector::from_entries(entries);
    IndexSet sminus;
    for (int j = 1; j <= static_cast<int>(s); ++j) sminus.insert(j);
    CHECK(f_T(dwork, sminus) == IntPolynomial(IntPolynomial::geometric(s)));
  }
}

TEST_CASE("inclusion-exclusion Hodge polynomials from the worked examples") {
  CHECK(hodge_polynomial_ie(GammaVector::parse("6,-3,-2,-1"), IeSide::Plus) ==
        IntPolynomial{1, 4, 1});
  CHECK(hodge_polynomial_ie(GammaVector::parse("6,-3,-2,-1"), IeSide::Minus) ==
        IntPolynomial{1, 4, 1});
  CHECK(hodge_polynomial_ie(GammaVector::parse("5,2,-6,-1"), IeSide::Plus) ==
        IntPolynomial{1, 4, 2});
  CHECK(hodge_polynomial_ie(GammaVector::parse("1,-1"), IeSide::Plus) == IntPolynomial{1});
  CHECK(hodge_polynomial_ie(GammaVector::parse("1,-1"), IeSide::Minus) == IntPolynomial{1});
}

TEST_CASE("simplified closed form") {
  CHECK(hodge_polynomial_simplified(GammaVector::parse("3,-1,-1,-1")) == IntPolynomial{1, 1, 1});
  CHECK(hodge_polynomial_simplified(GammaVector::parse("4,4,2,-3,-6,-1")) ==
        IntPolynomial{1, 2, 4, 3});
  CHECK(hodge_polynomial_simplified(GammaVector::parse("2,2,-1,-1,-1,-1")) ==
        IntPolynomial{1, 1, 1, 1});
}

TEST_CASE("all three generating-function forms and the zig-zag agree, L <= 6") {
  for (const auto& g : enumerate_canonical_gammas(6)) {
    IntPolynomial plus = hodge_polynomial_ie(g, IeSide::Plus);
    CHECK(plus == hodge_polynomial_ie(g, IeSide::Minus));
    CHECK(plus == hodge_polynomial_simplified(g));
    CHECK(hodge_vector_from_polynomial(plus, g.n()) == hodge_vector_zigzag(g));
  }
}

TEST_CASE("series of f(x)/(1-x)^n matches the lattice census") {
  for (const auto& g : enumerate_canonical_gammas(5)) {
    IntPolynomial f = hodge_polynomial_ie(g, IeSide::Plus);
    long order = g.n() + 2;
    auto series = f.series_div_one_minus_x_pow(g.n(), order);
    auto census = weight_census(cone_basis(g), order);
    for (long k = 0; k <= order; ++k) CHECK(series[k] == Int(static_cast<unsigned long>(census[k])));
  }
}

TEST_CASE("per-facet series match the facet cone point counts") {
  for (const auto& g : enumerate_canonical_gammas(4)) {
    ConeBasis basis = cone_basis(g);
    SlotTable st = slot_table(g);
    // The full simplicial facets S \ {i} for i in S_+.
    for (int dropped = 0; dropped <= st.r - 1; ++dropped) {
      IndexSet T;
      std::vector<int> Tv;
      for (int j = 0; j <= st.n; ++j)
        if (j != dropped) {
          T.insert(j);
          Tv.push_back(j);
        }
      IntPolynomial f = f_T(g, T);
      auto series = f.series_div_one_minus_x_pow(static_cast<int>(T.size()), g.n());
      for (long long k = 0; k <= g.n(); ++k)
        CHECK(series[k] == Int(static_cast<unsigned long>(hgm::testing::subcone_count_oracle(basis, Tv, k))));
    }
  }
}

TEST_CASE("genfun hodge vector padding") {
  HodgeVector h = hodge_vector_genfun(GammaVector::parse("3,-1,-1,-1"));
  CHECK(h.h == std::vector<long long>{1, 1, 1, 0});
}
