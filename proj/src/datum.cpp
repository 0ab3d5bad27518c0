#include "hgm/datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hgm/numbers.hpp"

namespace hgm {

namespace {

constexpr long long kMaxEntry = (1LL << 31);
constexpr long long kMaxLength = 1'000'000;

std::vector<long long> divisors_of(long long d) {
  std::vector<long long> divs;
  for (long long a = 1; a * a <= d; ++a) {
    if (d % a == 0) {
      divs.push_back(a);
      if (a != d / a) divs.push_back(d / a);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long long euler_phi(long long d) {
  long long result = d;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

/// Decomposes a multiset of rationals in (0,1] into full primitive-residue
/// orbits; returns denominator -> orbit multiplicity. Throws NotOverQ.
std::map<long long, long long> orbit_multiplicities(const std::vector<Rational>& values,
                                                    const char* side) {
  std::map<long long, std::map<Int, long long>> by_den;
  for (const auto& v : values) {
    if (v.sign() <= 0 || v > Rational(1))
      fail(errc::bad_range, std::string(side) + " value " + v.str() + " outside (0,1]");
    if (!v.den().fits_slong_p() || v.den().get_si() >= kMaxEntry)
      fail(errc::bad_range, "denominator too large: " + v.str());
    by_den[v.den().get_si()][v.num()] += 1;
  }
  std::map<long long, long long> orbit;
  for (const auto& [d, numerators] : by_den) {
    long long count = numerators.begin()->second;
    for (const auto& [num, c] : numerators) {
      (void)num;
      if (c != count)
        fail(errc::not_over_q, std::string(side) + " has unequal multiplicities within the orbit of denominator " +
                                   std::to_string(d));
    }
    long long phi = (d == 1) ? 1 : euler_phi(d);
    if (static_cast<long long>(numerators.size()) != phi)
      fail(errc::not_over_q, std::string(side) + " is missing elements of the orbit of denominator " +
                                 std::to_string(d));
    orbit[d] = count;
  }
  return orbit;
}

}  // namespace

GammaVector GammaVector::from_entries(const std::vector<long long>& entries) {
  std::vector<long long> pos, neg;
  for (long long e : entries) {
    if (e == 0) fail(errc::invalid_gamma, "zero entry");
    if (e >= kMaxEntry || e <= -kMaxEntry) fail(errc::invalid_gamma, "entry magnitude too large");
    (e > 0 ? pos : neg).push_back(e > 0 ? e : -e);
  }
  if (pos.empty() || neg.empty()) fail(errc::invalid_gamma, "need at least one positive and one negative entry");
  if (pos.size() + neg.size() > static_cast<size_t>(kMaxLength))
    fail(errc::invalid_gamma, "too many entries");
  long long sp = std::accumulate(pos.begin(), pos.end(), 0LL);
  long long sq = std::accumulate(neg.begin(), neg.end(), 0LL);
  if (sp != sq)
    fail(errc::invalid_gamma,
         "positive and negative sums differ (" + std::to_string(sp) + " vs " + std::to_string(sq) + ")");
  if (std::find(neg.begin(), neg.end(), 1LL) == neg.end())
    fail(errc::invalid_gamma, "negatives must contain 1");

  std::set<long long> ps(pos.begin(), pos.end()), qs(neg.begin(), neg.end());
  std::vector<long long> common;
  std::set_intersection(ps.begin(), ps.end(), qs.begin(), qs.end(), std::back_inserter(common));
  bool trivial = pos.size() == 1 && neg.size() == 1 && pos[0] == 1 && neg[0] == 1;
  if (!common.empty() && !trivial)
    fail(errc::invalid_gamma, "positive and negative supports overlap at " + std::to_string(common[0]));

  GammaVector g;
  g.positives = pos;
  std::sort(g.positives.begin(), g.positives.end(), std::greater<>());
  // Cone coordinate order: entries > 1 ascending, the 1s last.
  g.negatives = neg;
  std::sort(g.negatives.begin(), g.negatives.end(),
            [](long long a, long long b) {
              long long ka = a == 1 ? kMaxEntry : a, kb = b == 1 ? kMaxEntry : b;
              return ka < kb;
            });
  g.L = sp;
  return g;
}

GammaVector GammaVector::parse(std::string_view text) {
  std::vector<long long> entries;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      entries.push_back(v);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad gamma entry '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  if (entries.empty()) fail(errc::parse_error, "empty gamma vector");
  return from_entries(entries);
}

std::string GammaVector::str() const {
  std::vector<long long> neg = negatives;
  std::sort(neg.begin(), neg.end(), std::greater<>());
  std::ostringstream os;
  for (size_t i = 0; i < positives.size(); ++i) {
    if (i) os << ",";
    os << positives[i];
  }
  for (long long q : neg) os << ",-" << q;
  return os.str();
}

bool GammaVector::operator<(const GammaVector& o) const {
  if (L != o.L) return L < o.L;
  if (positives != o.positives) return positives < o.positives;
  std::vector<long long> a = negatives, b = o.negatives;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return a < b;
}

HypergeometricDatum HypergeometricDatum::from_multisets(std::vector<Rational> a,
                                                        std::vector<Rational> b) {
  if (a.size() != b.size())
    fail(errc::length_mismatch, "alpha has " + std::to_string(a.size()) + " entries, beta has " +
                                    std::to_string(b.size()));
  if (a.empty()) fail(errc::length_mismatch, "empty datum");
  orbit_multiplicities(a, "alpha");
  orbit_multiplicities(b, "beta");
  if (std::find(b.begin(), b.end(), Rational(1)) == b.end())
    fail(errc::no_unit_denominator, "beta must contain 1");
  HypergeometricDatum hd;
  hd.alpha = std::move(a);
  hd.beta = std::move(b);
  std::sort(hd.alpha.begin(), hd.alpha.end());
  std::sort(hd.beta.begin(), hd.beta.end());
  return hd;
}

HypergeometricDatum HypergeometricDatum::parse(std::string_view text) {
  size_t semi = text.find(';');
  if (semi == std::string_view::npos) fail(errc::parse_error, "datum needs ';' between alpha and beta");
  if (text.find(';', semi + 1) != std::string_view::npos)
    fail(errc::parse_error, "datum has more than one ';'");
  auto parse_side = [](std::string_view part) {
    std::vector<Rational> out;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      Rational r = Rational::parse(token);
      // Reduce mod 1 into (0,1]; 1 represents the class of 0.
      Rational f = r.frac();
      out.push_back(f.is_zero() ? Rational(1) : f);
      token.clear();
    };
    for (char c : part) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
        flush();
      else
        token.push_back(c);
    }
    flush();
    return out;
  };
  return from_multisets(parse_side(text.substr(0, semi)), parse_side(text.substr(semi + 1)));
}

namespace {
std::string join(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  return os.str();
}
}  // namespace

std::string HypergeometricDatum::alpha_str() const { return join(alpha); }
std::string HypergeometricDatum::beta_str() const { return join(beta); }

HypergeometricDatum gamma_to_datum(const GammaVector& g) {
  if (g.L > kMaxLength) fail(errc::invalid_gamma, "natural length too large to materialize");
  std::vector<Rational> alpha, beta;
  alpha.reserve(g.L);
  beta.reserve(g.L);
  for (long long p : g.positives)
    for (long long i = 1; i <= p; ++i) alpha.emplace_back(i, p);
  for (long long q : g.negatives)
    for (long long i = 1; i <= q; ++i) beta.emplace_back(i, q);
  HypergeometricDatum hd;
  hd.alpha = std::move(alpha);
  hd.beta = std::move(beta);
  std::sort(hd.alpha.begin(), hd.alpha.end());
  std::sort(hd.beta.begin(), hd.beta.end());
  return hd;
}

GammaVector datum_to_gamma(const HypergeometricDatum& hd) {
  if (hd.alpha == hd.beta && hd.alpha.size() == 1 && hd.alpha[0] == Rational(1))
    return GammaVector::from_entries({1, -1});

  auto na = orbit_multiplicities(hd.alpha, "alpha");
  auto nb = orbit_multiplicities(hd.beta, "beta");
  std::map<long long, long long> m = na;
  for (const auto& [d, c] : nb) m[d] -= c;

  std::map<long long, long long> coeff;
  for (const auto& [d, md] : m) {
    if (md == 0) continue;
    for (long long div : divisors_of(d)) coeff[div] += moebius(d / div) * md;
  }

  auto it1 = coeff.find(1);
  if (it1 == coeff.end() || it1->second >= 0)
    fail(errc::no_unit_denominator, "reconstructed gamma vector has no -1 entry");

  std::vector<long long> entries;
  for (const auto& [d, c] : coeff) {
    for (long long i = 0; i < c; ++i) entries.push_back(d);
    for (long long i = 0; i < -c; ++i) entries.push_back(-d);
  }
  GammaVector g = GammaVector::from_entries(entries);
  if (!(gamma_to_datum(g) == hd))
    fail(errc::length_mismatch, "datum is not the natural-length expansion of gamma vector [" +
                                    g.str() + "]");
  return g;
}

Int level(const HypergeometricDatum& hd) {
  Int m(1);
  for (const auto& v : hd.alpha) m = lcm(m, v.den());
  for (const auto& v : hd.beta) m = lcm(m, v.den());
  return m;
}

long long beta_multiplicity(const HypergeometricDatum& hd, const Rational& b) {
  return std::count(hd.beta.begin(), hd.beta.end(), b);
}

MergedList merged_from(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  MergedList ml;
  ml.entries.reserve(alpha.size() + beta.size());
  for (const auto& b : beta) ml.entries.push_back({b, Side::Beta});
  for (const auto& a : alpha) ml.entries.push_back({a, Side::Alpha});
  std::stable_sort(ml.entries.begin(), ml.entries.end(),
                   [](const MergedEntry& x, const MergedEntry& y) {
                     if (x.value != y.value) return x.value < y.value;
                     return static_cast<int>(x.side) < static_cast<int>(y.side);
                   });
  return ml;
}

MergedList merged_list(const HypergeometricDatum& hd) { return merged_from(hd.alpha, hd.beta); }

ReducedDatum reduce_datum(const HypergeometricDatum& hd) {
  // Multiset difference in both directions; inputs are sorted.
  std::vector<Rational> ra, rb;
  std::set_difference(hd.alpha.begin(), hd.alpha.end(), hd.beta.begin(), hd.beta.end(),
                      std::back_inserter(ra));
  std::set_difference(hd.beta.begin(), hd.beta.end(), hd.alpha.begin(), hd.alpha.end(),
                      std::back_inserter(rb));
  if (ra.empty()) fail(errc::empty_reduction, "alpha and beta coincide; nothing remains");

  GammaVector g = datum_to_gamma(hd);
  MergedList ml = merged_from(ra, rb);
  long long phi = g.r();
  long long min_beta_phi = 0;
  bool seen = false;
  for (const auto& e : ml.entries) {
    phi += (e.side == Side::Alpha) ? 1 : -1;
    if (e.side == Side::Beta && (!seen || phi < min_beta_phi)) {
      min_beta_phi = phi;
      seen = true;
    }
  }
  ReducedDatum out;
  out.alpha = std::move(ra);
  out.beta = std::move(rb);
  out.offset = seen ? -min_beta_phi : 0;
  return out;
}

}  // namespace hgm
