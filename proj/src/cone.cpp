#include "hgm/cone.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "hgm/enumerate.hpp"
#include "hgm/numbers.hpp"

namespace hgm {

long long depth(const LatticeVector& v) {
  long long d = 0;
  for (long long c : v)
    if (c < 0) d += c;
  return d;
}

ConeBasis cone_basis(const GammaVector& g) {
  ConeBasis b;
  b.gamma = g;
  b.n = g.n();
  int n = b.n;
  b.e.assign(n + 1, LatticeVector(n, 0));
  for (int i = 0; i <= n; ++i) b.e[i][0] = 1;
  for (int i = 1; i <= n - 1; ++i) b.e[i][i] = 1;
  int r = g.r(), s = g.s();
  LatticeVector& en = b.e[n];
  for (int i = 1; i <= r - 1; ++i) en[i] = g.positives[i - 1];
  for (int j = 1; j <= s - 1; ++j) en[r - 1 + j] = -g.negatives[j - 1];
  return b;
}

bool cone_membership(const ConeBasis& basis, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != basis.n)
    fail(errc::bad_range, "lattice vector has wrong dimension");
  const GammaVector& g = basis.gamma;
  int r = g.r(), s = g.s();
  if (basis.n == 1) return v[0] >= 0;

  // v = sum c_i e_i with c_i >= 0 iff some t = c_n lies in [lo, hi]:
  //   c_i = v_i - t*p_i        (positive slots)
  //   c_{r-1+j} = v_{r-1+j} + t*q_j
  //   c_0 = v_0 - sum_{i>=1} c_i - t  >= 0  <=>  t <= (v_0 - sum v_i)/p_r
  Rational lo(0), hi;
  bool has_hi = false;
  long long tail = 0;
  for (size_t m = 1; m < v.size(); ++m) tail += v[m];
  Rational budget(to_int(v[0] - tail), to_int(g.positives.back()));
  hi = budget;
  has_hi = true;
  for (int i = 1; i <= r - 1; ++i) {
    Rational cand(to_int(v[i]), to_int(g.positives[i - 1]));
    if (!has_hi || cand < hi) hi = cand;
    has_hi = true;
  }
  for (int j = 1; j <= s - 1; ++j) {
    Rational cand(to_int(-v[r - 1 + j]), to_int(g.negatives[j - 1]));
    if (cand > lo) lo = cand;
  }
  return lo <= hi;
}

std::vector<unsigned long long> weight_census(const ConeBasis& basis, long long k_max,
                                              kernel::Kind kind) {
  if (k_max < 0) fail(errc::bad_range, "k_max must be non-negative");
  std::vector<unsigned long long> out(k_max + 1, 0);
  unsigned workers = std::thread::hardware_concurrency();
  if (k_max == 0 || workers <= 1) {
    for (long long k = 0; k <= k_max; ++k) out[k] = census_slice(basis, k, kind);
    return out;
  }
  std::vector<std::future<unsigned long long>> futs;
  futs.reserve(k_max + 1);
  for (long long k = 0; k <= k_max; ++k)
    futs.push_back(std::async(std::launch::async,
                              [&basis, k, kind] { return census_slice(basis, k, kind); }));
  for (long long k = 0; k <= k_max; ++k) out[k] = futs[k].get();
  return out;
}

HodgeVector hodge_from_census(const std::vector<unsigned long long>& census, int n) {
  if (static_cast<int>(census.size()) < n + 1)
    fail(errc::insufficient_census,
         "census covers " + std::to_string(census.size()) + " weights, need " + std::to_string(n + 1));
  HodgeVector h;
  h.h.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    Int acc(0);
    for (int i = 0; i <= std::min(n, k); ++i) {
      Int term = binomial(n, i) * Int(static_cast<unsigned long>(census[k - i]));
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (!acc.fits_slong_p())
      fail(errc::internal_error, "Hodge multiplicity out of range");
    h.h[k] = acc.get_si();
  }
  return h;
}

namespace {

long long to_integer(const Rational& r, const char* what) {
  if (!r.is_integer()) fail(errc::internal_error, std::string(what) + " is not integral");
  if (!r.num().fits_slong_p()) fail(errc::internal_error, std::string(what) + " out of range");
  return r.num().get_si();
}

LatticeVector primitive_element_unchecked(const GammaVector& g, const Rational& mu) {
  int r = g.r(), s = g.s(), n = g.n();
  long long p_last = g.positives.back();
  LatticeVector u(n, 0);
  Rational w = mu + frac(-mu * Rational(p_last));
  for (int i = 1; i <= r - 1; ++i) {
    Rational pi(g.positives[i - 1]);
    w += frac(-mu * pi);
    u[i] = to_integer(mu * pi + frac(-mu * pi), "primitive element coordinate");
  }
  for (int j = 1; j <= s - 1; ++j) {
    Rational qj(g.negatives[j - 1]);
    w += frac(mu * qj);
    u[r - 1 + j] = to_integer(-mu * qj + frac(mu * qj), "primitive element coordinate");
  }
  u[0] = to_integer(w, "primitive element weight");
  return u;
}

}  // namespace

LatticeVector primitive_element(const GammaVector& g, const Rational& mu) {
  HypergeometricDatum hd = gamma_to_datum(g);
  bool found = std::binary_search(hd.alpha.begin(), hd.alpha.end(), mu) ||
               std::binary_search(hd.beta.begin(), hd.beta.end(), mu);
  if (!found) fail(errc::not_datum_element, mu.str() + " is not in alpha or beta");
  return primitive_element_unchecked(g, mu);
}

bool in_translated_subcone(const ConeBasis& basis, const LatticeVector& apex, int removed,
                           const LatticeVector& v) {
  int n = basis.n;
  LatticeVector u(n);
  for (int m = 0; m < n; ++m) u[m] = v[m] - apex[m];
  if (removed == n) {
    long long csum = 0;
    for (int m = 1; m < n; ++m) {
      if (u[m] < 0) return false;
      csum += u[m];
    }
    return u[0] - csum >= 0;
  }
  long long d = basis.e[n][removed];
  if (u[removed] % d != 0) return false;
  long long cn = u[removed] / d;
  if (cn < 0) return false;
  long long csum = cn;
  for (int m = 1; m < n; ++m) {
    if (m == removed) continue;
    long long cm = u[m] - cn * basis.e[n][m];
    if (cm < 0) return false;
    csum += cm;
  }
  return u[0] - csum >= 0;
}

ApexSequence apex_sequence(const GammaVector& g) {
  ConeBasis basis = cone_basis(g);
  HypergeometricDatum hd = gamma_to_datum(g);
  int n = g.n(), s = g.s();
  long long L = g.L;

  ApexSequence seq;
  seq.apexes.assign(L, LatticeVector());
  seq.removed_index.assign(L, -1);
  seq.apexes[0] = LatticeVector(n, 0);
  seq.removed_index[0] = n;

  // One apex per pair (b, l) with b a distinct beta element and
  // 0 <= l < #{j < s : b*q_j integral}; the index is minus the depth.
  for (size_t t = 0; t < hd.beta.size();) {
    const Rational& b = hd.beta[t];
    size_t t2 = t;
    while (t2 < hd.beta.size() && hd.beta[t2] == b) ++t2;
    t = t2;

    std::vector<int> sb;
    for (int j = 1; j <= s - 1; ++j)
      if ((b * Rational(g.negatives[j - 1])).is_integer()) sb.push_back(j);

    LatticeVector apex = primitive_element_unchecked(g, b);
    for (size_t l = 0; l < sb.size(); ++l) {
      if (l > 0) {
        int j = sb[l - 1];
        apex[0] += 1;
        apex[g.r() - 1 + j] += 1;
      }
      long long idx = -depth(apex);
      if (idx < 1 || idx >= L || !seq.apexes[idx].empty())
        fail(errc::internal_error, "apex index collision at depth " + std::to_string(-idx));
      seq.apexes[idx] = apex;
    }
  }
  for (long long i = 0; i < L; ++i)
    if (seq.apexes[i].empty() && i > 0)
      fail(errc::internal_error, "missing apex at index " + std::to_string(i));

  // removed_index: the unique basis vector whose addition moves apex i into
  // the union of the previous subcones.
  for (long long i = 1; i < L; ++i) {
    int found = -1;
    for (int j = 1; j <= n; ++j) {
      LatticeVector w = seq.apexes[i];
      for (int m = 0; m < n; ++m) w[m] += basis.e[j][m];
      bool covered = false;
      for (long long prev = 0; prev < i && !covered; ++prev)
        covered = in_translated_subcone(basis, seq.apexes[prev], seq.removed_index[prev], w);
      if (covered) {
        if (found != -1)
          fail(errc::internal_error, "ambiguous removed index for apex " + std::to_string(i));
        found = j;
      }
    }
    if (found == -1)
      fail(errc::internal_error, "no removed index for apex " + std::to_string(i));
    seq.removed_index[i] = found;
  }
  return seq;
}

bool verify_partition(const GammaVector& g, long long k_max) {
  ConeBasis basis = cone_basis(g);
  ApexSequence seq = apex_sequence(g);
  bool ok = true;
  for (long long k = 0; k <= k_max && ok; ++k) {
    for_each_point(basis, k, [&](const LatticeVector& v) {
      if (!ok) return;
      long long cover = 0;
      for (long long i = 0; i < g.L; ++i)
        if (in_translated_subcone(basis, seq.apexes[i], seq.removed_index[i], v)) ++cover;
      if (cover != 1) ok = false;
    });
  }
  return ok;
}

namespace {

Int det_bareiss(std::vector<std::vector<Int>> m) {
  int n = static_cast<int>(m.size());
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int normalized_volume(const GammaVector& g) {
  ConeBasis basis = cone_basis(g);
  int n = basis.n;
  Int vol(0);
  for (int dropped = 0; dropped <= g.r() - 1; ++dropped) {
    std::vector<std::vector<Int>> m;
    m.reserve(n);
    for (int j = 0; j <= n; ++j) {
      if (j == dropped) continue;
      std::vector<Int> row;
      row.reserve(n);
      for (long long c : basis.e[j]) row.push_back(to_int(c));
      m.push_back(std::move(row));
    }
    vol += abs(det_bareiss(std::move(m)));
  }
  return vol;
}

}  // namespace hgm
