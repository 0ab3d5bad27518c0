#include "hgm/genfun.hpp"

#include <numeric>

#include "hgm/numbers.hpp"

namespace hgm {

SlotTable slot_table(const GammaVector& g) {
  SlotTable t;
  t.r = g.r();
  t.s = g.s();
  t.n = g.n();
  t.value.assign(t.n + 1, 0);
  t.value[0] = g.positives.back();
  for (int i = 1; i <= t.r - 1; ++i) t.value[i] = g.positives[i - 1];
  for (int j = 1; j <= t.s; ++j) t.value[t.r - 1 + j] = g.negatives[j - 1];
  return t;
}

long long weight_w(const GammaVector& g, const Rational& t) {
  SlotTable st = slot_table(g);
  Rational acc(0);
  for (int i = 0; i <= st.r - 1; ++i) acc += frac(Rational(-st.value[i]) * t);
  for (int i = st.r; i <= st.n; ++i) acc += frac(Rational(st.value[i]) * t);
  if (!acc.is_integer()) fail(errc::internal_error, "w(t) not integral");
  return acc.num().get_si();
}

long long weight_w_alt(const GammaVector& g, const Rational& t) {
  if (t.sign() <= 0 || t > Rational(1)) fail(errc::bad_range, "t must lie in (0,1]");
  SlotTable st = slot_table(g);
  Int acc(0);
  for (int i = 0; i <= st.r - 1; ++i) {
    // #{k : 0 < k/p < t} = ceil(p t) - 1
    acc += (Rational(st.value[i]) * t).ceil() - 1;
  }
  for (int i = st.r; i <= st.n; ++i) {
    // #{k : 0 < k/q <= t} = floor(q t)
    acc -= (Rational(st.value[i]) * t).floor();
  }
  acc += st.r;
  return acc.get_si();
}

namespace {
void check_subset(const SlotTable& st, const IndexSet& T) {
  for (int j : T)
    if (j < 0 || j > st.n) fail(errc::bad_range, "slot index " + std::to_string(j) + " outside S");
  if (static_cast<int>(T.size()) == st.n + 1)
    fail(errc::improper_subset, "T must be a proper subset of S");
}
}  // namespace

long long d_T(const GammaVector& g, const IndexSet& T) {
  SlotTable st = slot_table(g);
  check_subset(st, T);
  long long d = 0;
  for (int j = 0; j <= st.n; ++j)
    if (!T.count(j)) d = std::gcd(d, st.value[j]);
  return d;
}

IntPolynomial f_T(const GammaVector& g, const IndexSet& T) {
  long long d = d_T(g, T);
  IntPolynomial f;
  for (long long c = 0; c < d; ++c)
    f += IntPolynomial::monomial(weight_w(g, Rational(c, d)));
  return f;
}

IntPolynomial hodge_polynomial_ie(const GammaVector& g, IeSide side) {
  SlotTable st = slot_table(g);
  int m = (side == IeSide::Plus) ? st.r : st.s;
  if (m > 24) fail(errc::enumeration_range, "too many slots for subset enumeration");
  int base = (side == IeSide::Plus) ? 0 : st.r;

  IntPolynomial total;
  for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) {
    int k = __builtin_popcount(mask);
    IndexSet T;
    // The complementary side enters whole.
    for (int j = 0; j <= st.n; ++j)
      if (j < base || j >= base + m) T.insert(j);
    for (int bit = 0; bit < m; ++bit)
      if (mask & (1u << bit)) T.insert(base + bit);
    IntPolynomial term = f_T(g, T) * IntPolynomial::one_minus_x_pow(m - 1 - k);
    if ((m - 1 - k) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

IntPolynomial hodge_polynomial_simplified(const GammaVector& g) {
  SlotTable st = slot_table(g);
  std::set<Rational> points;
  for (int i = 0; i <= st.r - 1; ++i)
    for (long long c = 1; c <= st.value[i]; ++c) points.insert(Rational(c, st.value[i]));
  IntPolynomial f;
  for (const Rational& t : points) {
    long long mult = 0;
    for (int i = 0; i <= st.r - 1; ++i)
      if ((Rational(st.value[i]) * t).is_integer()) ++mult;
    f += IntPolynomial::geometric(mult).shifted(weight_w(g, t));
  }
  return f;
}

HodgeVector hodge_vector_from_polynomial(const IntPolynomial& f, int n) {
  if (f.degree() > n)
    fail(errc::internal_error, "Hodge polynomial degree exceeds n");
  HodgeVector h;
  h.h.assign(n + 1, 0);
  for (long k = 0; k <= f.degree(); ++k) {
    Int c = f.coeff(k);
    if (!c.fits_slong_p()) fail(errc::internal_error, "coefficient out of range");
    h.h[k] = c.get_si();
  }
  return h;
}

HodgeVector hodge_vector_genfun(const GammaVector& g) {
  return hodge_vector_from_polynomial(hodge_polynomial_ie(g, IeSide::Plus), g.n());
}

}  // namespace hgm
