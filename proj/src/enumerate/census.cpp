#include <algorithm>
#include <vector>

#include "hgm/enumerate.hpp"

namespace hgm {

namespace {

using kernel::Kind;
using kernel::Predicates;
using i128 = __int128;

struct Coord {
  bool positive;    // positive slot (value p_i) or negative slot (value q_j)
  long long value;
  int index;        // coordinate index in the lattice vector, 1..n-1
};

/// Fraction with den > 0; den == 0 encodes +infinity.
struct Frac {
  long long num;
  long long den;
};

bool frac_less(const Frac& a, const Frac& b) {
  if (a.den == 0) return false;
  if (b.den == 0) return true;
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

Frac frac_min(const Frac& a, const Frac& b) { return frac_less(a, b) ? a : b; }

long long ceil_div(long long num, long long den) {  // den > 0
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

struct Slice {
  long long k = 0;
  long long p_last = 1;            // the positive entry left out of e_n
  std::vector<Coord> coords;       // DFS order: negative slots, then positive slots
  std::vector<long long> slope;    // slope[d] over unassigned coords[d..] plus p_last
  Kind kind = Kind::Scalar;
  bool int32_ok = false;
};

Slice make_slice(const ConeBasis& basis, long long k, Kind kind) {
  const GammaVector& g = basis.gamma;
  Slice s;
  s.k = k;
  s.p_last = g.positives.back();
  int r = g.r();
  int sn = g.s();
  for (int j = 1; j <= sn - 1; ++j)
    s.coords.push_back({false, g.negatives[j - 1], r - 1 + j});
  for (int i = 1; i <= r - 1; ++i) s.coords.push_back({true, g.positives[i - 1], i});

  s.slope.assign(s.coords.size() + 1, 0);
  s.slope[s.coords.size()] = s.p_last;
  for (int d = static_cast<int>(s.coords.size()) - 1; d >= 0; --d)
    s.slope[d] = s.slope[d + 1] + (s.coords[d].positive ? s.coords[d].value : -s.coords[d].value);

  long long max_entry = 1;
  for (long long p : g.positives) max_entry = std::max(max_entry, p);
  for (long long q : g.negatives) max_entry = std::max(max_entry, q);
  i128 e = max_entry;
  i128 x_max = static_cast<i128>(k) * e;
  i128 a_max = 2 * e;
  i128 b_max = e * k * (1 + 2 * g.L) + static_cast<i128>(k) * e * e;
  i128 worst = std::max({a_max * x_max, b_max, x_max});
  if (worst >= (static_cast<i128>(1) << 62))
    fail(errc::enumeration_range, "census bounds exceed the exact 64-bit range for gamma " + g.str());
  s.int32_ok = worst < (static_cast<i128>(1) << 30);

  Kind resolved = kernel::resolve(kind);
  if ((resolved == Kind::Avx2 || resolved == Kind::Neon) && !s.int32_ok) resolved = Kind::Scalar;
  s.kind = resolved;
  return s;
}

uint64_t leaf_count(const Slice& s, int64_t x0, int64_t x1, const Predicates& p) {
  if (x0 > x1) return 0;
  switch (s.kind) {
#if defined(__x86_64__)
    case Kind::Avx2:
      return kernel::count_range_avx2(x0, x1, p);
#endif
#if defined(__aarch64__)
    case Kind::Neon:
      return kernel::count_range_neon(x0, x1, p);
#endif
    default:
      return kernel::count_range_scalar(x0, x1, p);
  }
}

struct Dfs {
  const Slice& s;
  const ConeBasis& basis;
  const std::function<void(const LatticeVector&)>* emit = nullptr;
  uint64_t count = 0;
  std::vector<long long> vals;

  Dfs(const Slice& slice, const ConeBasis& b) : s(slice), basis(b) {
    vals.assign(s.coords.size(), 0);
  }

  void run() {
    if (s.coords.empty()) {
      // n == 1: the slice holds the single point [k].
      hit_leaf_point(-1, 0);
      return;
    }
    rec(0, 0, Frac{0, 1}, Frac{0, 0});
  }

  void hit_leaf_point(int leaf_depth, long long x) {
    if (emit == nullptr) {
      ++count;
      return;
    }
    LatticeVector v(basis.n, 0);
    v[0] = s.k;
    for (size_t d = 0; d < s.coords.size(); ++d)
      v[s.coords[d].index] = (static_cast<int>(d) == leaf_depth) ? x : vals[d];
    (*emit)(v);
  }

  // prune: no completion of the current prefix can satisfy the budget.
  bool infeasible(long long sv, const Frac& lo, const Frac& t_hi, long long slope_next) const {
    if (frac_less(t_hi, lo)) return true;
    auto glin_positive = [&](const Frac& t) {
      // sv + t*slope_next - k > 0, exact.
      i128 lhs = static_cast<i128>(sv) * t.den + static_cast<i128>(t.num) * slope_next -
                 static_cast<i128>(s.k) * t.den;
      return lhs > 0;
    };
    return glin_positive(lo) && glin_positive(t_hi);
  }

  void rec(int depth, long long sv, Frac lo, Frac hi) {
    if (depth == static_cast<int>(s.coords.size()) - 1) {
      leaf(depth, sv, lo, hi);
      return;
    }
    const Coord& c = s.coords[depth];
    const Frac k_frac{s.k, 1};
    if (!c.positive) {
      long long q = c.value;
      for (long long x = -s.k * q; x <= s.k; ++x) {
        Frac lo2 = lo;
        Frac cand{-x, q};
        if (frac_less(lo2, cand)) lo2 = cand;
        Frac t_hi = frac_min(hi, k_frac);
        if (infeasible(sv + x, lo2, t_hi, s.slope[depth + 1])) continue;
        vals[depth] = x;
        rec(depth + 1, sv + x, lo2, hi);
      }
    } else {
      long long p = c.value;
      for (long long x = ceil_div(lo.num * p, lo.den); x <= s.k * p; ++x) {
        Frac hi2 = frac_min(hi, Frac{x, p});
        Frac t_hi = frac_min(hi2, k_frac);
        if (infeasible(sv + x, lo, t_hi, s.slope[depth + 1])) continue;
        vals[depth] = x;
        rec(depth + 1, sv + x, lo, hi2);
      }
    }
  }

  void leaf(int depth, long long sv, const Frac& lo, const Frac& hi) {
    const Coord& c = s.coords[depth];
    long long K = s.k - sv;
    Predicates preds;
    int64_t x0, x1;
    if (c.positive) {
      // Remaining membership condition: lo <= x/p and lo <= (K-x)/p_last,
      // gated on lo <= hi (the other positive-slot bounds).
      if (frac_less(hi, lo)) return;
      long long p = c.value;
      preds.n = 2;
      preds.a[0] = -lo.den;
      preds.b[0] = -lo.num * p;
      preds.a[1] = lo.den;
      preds.b[1] = lo.den * K - lo.num * s.p_last;
      x0 = ceil_div(lo.num * p, lo.den);
      x1 = s.k * p;
    } else {
      // r == 1: lo <= (K-x)/p_last and -x/q <= (K-x)/p_last.
      long long q = c.value;
      preds.n = 2;
      preds.a[0] = lo.den;
      preds.b[0] = lo.den * K - lo.num * s.p_last;
      preds.a[1] = q - s.p_last;
      preds.b[1] = q * K;
      x0 = -s.k * q;
      x1 = s.k;
    }
    if (emit == nullptr) {
      count += leaf_count(s, x0, x1, preds);
    } else {
      for (int64_t x = x0; x <= x1; ++x)
        if (kernel::test_point(x, preds)) hit_leaf_point(depth, x);
    }
  }
};

}  // namespace

unsigned long long census_slice(const ConeBasis& basis, long long k, kernel::Kind kind) {
  if (k < 0) fail(errc::bad_range, "negative weight");
  Slice s = make_slice(basis, k, kind);
  Dfs dfs(s, basis);
  dfs.run();
  return dfs.count;
}

void for_each_point(const ConeBasis& basis, long long k,
                    const std::function<void(const LatticeVector&)>& fn) {
  if (k < 0) fail(errc::bad_range, "negative weight");
  Slice s = make_slice(basis, k, kernel::Kind::Scalar);
  Dfs dfs(s, basis);
  dfs.emit = &fn;
  dfs.run();
}

}  // namespace hgm
