#include "hgm/padic.hpp"

#include "hgm/numbers.hpp"
#include "hgm/zigzag.hpp"

namespace hgm {

namespace {
constexpr unsigned long long kMaxProfilePrime = 1ULL << 22;
}

PadicContext PadicContext::create(unsigned long long p, HypergeometricDatum hd) {
  if (!is_prime(p)) fail(errc::bad_range, std::to_string(p) + " is not prime");
  Int m = level(hd);
  if ((Int(static_cast<unsigned long>(p)) - 1) % m != 0)
    fail(errc::bad_range,
         "prime " + std::to_string(p) + " is not 1 mod the level " + m.get_str());
  if (p > kMaxProfilePrime) fail(errc::enumeration_range, "prime too large for a full profile");
  PadicContext ctx;
  ctx.p = p;
  ctx.hd = std::move(hd);
  return ctx;
}

unsigned long long level_modulus(const HypergeometricDatum& hd) {
  Int m = level(hd);
  if (!m.fits_ulong_p()) fail(errc::bad_range, "level " + m.get_str() + " too large for prime search");
  return m.get_ui();
}

long long first_digit(const Rational& a, unsigned long long p) {
  Int pz(static_cast<unsigned long>(p));
  if (a.den() % pz == 0) fail(errc::bad_denominator, "denominator of " + a.str() + " divisible by p");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.den().get_mpz_t(), pz.get_mpz_t()) == 0)
    fail(errc::bad_denominator, "denominator not invertible mod p");
  Int digit;
  mpz_fdiv_r(digit.get_mpz_t(), Int(a.num() * inv).get_mpz_t(), pz.get_mpz_t());
  return digit.get_si();
}

int pochhammer_order(const Rational& a, long long k, unsigned long long p) {
  if (a.sign() <= 0 || a > Rational(1)) fail(errc::bad_range, "a must lie in (0,1]");
  if (k < 1 || static_cast<unsigned long long>(k) >= p) fail(errc::bad_range, "need 1 <= k < p");
  if ((Int(static_cast<unsigned long>(p)) - 1) % a.den() != 0)
    fail(errc::bad_denominator, "need p = 1 mod den(a)");
  Rational inner = a - Rational(to_int(k), Int(static_cast<unsigned long>(p) - 1));
  Int v = -inner.floor();
  return static_cast<int>(v.get_si());
}

ValuationProfile valuation_profile(const PadicContext& ctx) {
  ValuationProfile prof;
  prof.orders.assign(ctx.p, 0);
  Int pm1(static_cast<unsigned long>(ctx.p - 1));
  for (unsigned long long k = 1; k < ctx.p; ++k) {
    Rational kappa(Int(static_cast<unsigned long>(k)), pm1);
    Int acc(0);
    for (const auto& a : ctx.hd.alpha) acc -= (a - kappa).floor();
    for (const auto& b : ctx.hd.beta) acc += (b - kappa).floor();
    prof.orders[k] = acc.get_si();
  }
  return prof;
}

bool verify_phi_bridge(const GammaVector& g, unsigned long long p) {
  HypergeometricDatum hd = gamma_to_datum(g);
  PadicContext ctx = PadicContext::create(p, hd);
  ValuationProfile prof = valuation_profile(ctx);
  MergedList ml = merged_list(hd);
  ZigzagProfile zz = zigzag_profile(ml, g.r());
  size_t two_l = ml.size();

  std::vector<long long> digit(two_l + 1, 0);
  for (size_t i = 1; i <= two_l; ++i) digit[i] = first_digit(-ml.entries[i - 1].value, p);

  for (size_t i = 0; i < two_l; ++i) {
    for (long long k = digit[i] + 1; k <= digit[i + 1]; ++k)
      if (zz.phi[i] != prof.orders[k] + g.r()) return false;
  }
  for (size_t i = 0; i < two_l; ++i) {
    Rational prev = (i == 0) ? Rational(0) : ml.entries[i - 1].value;
    const Rational& next = ml.entries[i].value;
    if (prev < next) {
      Rational kq = next * Rational(Int(static_cast<unsigned long>(p - 1)));
      long long k = kq.num().get_si();  // integral since p = 1 mod den
      if (zz.phi[i] != prof.orders[k] + g.r()) return false;
    }
  }
  return true;
}

bool verify_lemma_fractional(const GammaVector& g, unsigned long long p) {
  HypergeometricDatum hd = gamma_to_datum(g);
  PadicContext ctx = PadicContext::create(p, hd);
  ValuationProfile prof = valuation_profile(ctx);

  std::vector<Rational> elements = hd.alpha;
  elements.insert(elements.end(), hd.beta.begin(), hd.beta.end());
  for (const Rational& mu : elements) {
    Rational kq = mu * Rational(Int(static_cast<unsigned long>(p - 1)));
    long long k = kq.num().get_si();
    Rational rhs(to_int(g.s() - g.r()));
    for (long long pi : g.positives) rhs += frac(-mu * Rational(pi));
    for (long long qj : g.negatives) rhs -= frac(-mu * Rational(qj));
    if (Rational(to_int(prof.orders[k])) != rhs) return false;
  }
  return true;
}

}  // namespace hgm
