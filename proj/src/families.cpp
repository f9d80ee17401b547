#include "tb/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tb {

namespace {

// (x|3): 1 for x ≡ 1, -1 for x ≡ 2, 0 for multiples of 3.
int legendre3(long x) {
  long r = ((x % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void check_quark(const QuarkSpec& s) {
  if (s.a < 1 || s.b < 1) throw std::invalid_argument("quark: a and b must be positive");
}

}  // namespace

long QuarkSpec::gcd() const { return std::gcd(a, b); }

Q QuarkSpec::index() const { return Q(a * a + a * b + b * b); }

ThetaQuotient QuarkSpec::block() const {
  check_quark(*this);
  return ThetaQuotient::pure({a, b, a + b}, -1);
}

bool QuarkSpec::is_cusp() const {
  check_quark(*this);
  long g = gcd();
  long ap = a / g, bp = b / g;
  return (ap * bp * (ap + bp)) % 3 == 0;
}

Series quark_expansion(const QuarkSpec& spec, const Q& prec) {
  check_quark(spec);
  if (prec <= 0) throw std::invalid_argument("quark_expansion: precision must be positive");
  Series out(1, 3, 1, prec);
  // q-exponent r²+rs+s²/3 = (r+s/2)² + s²/12, so |s| is bounded by the
  // precision and for each s the exponent is a parabola in r.
  auto scan_s = [&](long s) {
    if (rat(s * s, 12) >= prec) return false;
    int chi = legendre3(s);
    if (chi == 0) return true;
    auto qexp = [&](long r) -> Q { return Q(r * r + r * s) + rat(s * s, 3); };
    long r0 = -s / 2;
    for (long r = r0; qexp(r) < prec; ++r)
      out.add_term(qexp(r), {Q((spec.a - spec.b) * r + spec.a * s)}, -chi);
    for (long r = r0 - 1; qexp(r) < prec; --r)
      out.add_term(qexp(r), {Q((spec.a - spec.b) * r + spec.a * s)}, -chi);
    return true;
  };
  for (long s = 1; scan_s(s); ++s) {
  }
  for (long s = -1; scan_s(s); --s) {
  }
  return out;
}

Series quark_expansion_symmetric(const QuarkSpec& spec, const Q& prec) {
  check_quark(spec);
  if (prec <= 0) throw std::invalid_argument("quark_expansion: precision must be positive");
  long a = spec.a, b = spec.b, c = -a - b;
  Series out(1, 3, 1, prec);
  // With w = -u-v the congruence constraint reduces to u ≡ v mod 3 and
  // the q-exponent is (u²+uv+v²)/9, again a parabola in v.  Under the
  // substitution (u,v,w) = (-3r-2s, 3r+s, s) the symbol (u|3) equals
  // (s|3), so this sum needs the same leading minus sign as the (r,s)
  // form to produce identical coefficients.
  auto scan_u = [&](long u) {
    if (rat(u * u, 12) >= prec) return false;
    int chi = legendre3(u);
    if (chi == 0) return true;
    auto qexp = [&](long v) { return rat(u * u + u * v + v * v, 9); };
    auto put = [&](long v) {
      if ((u - v) % 3 != 0) return;
      long w = -u - v;
      out.add_term(qexp(v), {rat(-(a * u + b * v + c * w), 3)}, -chi);
    };
    long v0 = -u / 2;
    for (long v = v0; qexp(v) < prec; ++v) put(v);
    for (long v = v0 - 1; qexp(v) < prec; --v) put(v);
    return true;
  };
  for (long u = 1; scan_u(u); ++u) {
  }
  for (long u = -1; scan_u(u); --u) {
  }
  return out;
}

AnSpec::AnSpec(std::vector<long> entries) : a(std::move(entries)) {
  if (a.size() < 3) throw std::invalid_argument("AnSpec: need at least three entries");
  n = (int)a.size() - 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j])
        throw std::invalid_argument("AnSpec: entries must be pairwise distinct (the block vanishes)");
}

Q AnSpec::index() const {
  Z sum = 0, sumsq = 0;
  for (long x : a) {
    sum += x;
    sumsq += Z(x) * x;
  }
  Z num = Z(n + 1) * sumsq - sum * sum;
  return Q(num) / Q(2);
}

ThetaQuotient AnSpec::block() const {
  std::vector<long> diffs;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) diffs.push_back(std::labs(a[i] - a[j]));
  return ThetaQuotient::pure(diffs, rat(-(long)n * (n - 1), 2));
}

int AnSpec::sign() const {
  int s = 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] < a[j]) s = -s;
  return s;
}

bool AnSpec::is_cusp() const { return cusp_supplement(*this); }

bool cusp_supplement(const AnSpec& spec) {
  long g = 0;
  for (size_t i = 0; i < spec.a.size(); ++i)
    for (size_t j = i + 1; j < spec.a.size(); ++j)
      g = std::gcd(g, std::labs(spec.a[i] - spec.a[j]));
  for (size_t i = 0; i < spec.a.size(); ++i)
    for (size_t j = i + 1; j < spec.a.size(); ++j)
      if (((spec.a[i] - spec.a[j]) / g) % (spec.n + 1) == 0) return true;
  return false;
}

Series an_expansion(const AnSpec& spec, const Q& prec) {
  if (prec <= 0) throw std::invalid_argument("an_expansion: precision must be positive");
  int n = spec.n;
  long m = n + 1;
  Series out(1, 8 * m, 2, prec);
  Q budget = 8 * m * prec;  // constraint on Σ t_i² for t = 2x

  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::vector<long> t(m);

  do {
    int sig = permutation_sign(perm);
    // x_i = π(i) - n/2 + m y_i with Σ y_i = 0; scan each y_i outward
    // from the minimizer of |t_i| while the exponent budget allows.
    auto rec = [&](auto&& self, int i, long ysum, const Q& rem) -> void {
      if (i == n) {
        long tn = 2 * perm[i] - n + 2 * m * (-ysum);
        if (Q(tn) * tn >= rem) return;
        t[i] = tn;
        Z tsq = 0;
        Q zexp = 0;
        for (int k = 0; k < m; ++k) {
          tsq += Z(t[k]) * t[k];
          zexp -= rat(spec.a[k] * t[k], 2);
        }
        out.add_term(Q(tsq) / Q(8 * m), {zexp}, sig);
        return;
      }
      long num = n - 2 * perm[i];  // t_i = 2m y - num
      long ylo = num >= 0 ? num / (2 * m) : -((-num + 2 * m - 1) / (2 * m));
      for (long y = ylo;; --y) {
        long ti = 2 * m * y - num;
        if (Q(ti) * ti >= rem) break;
        t[i] = ti;
        self(self, i + 1, ysum + y, rem - Q(ti) * ti);
      }
      for (long y = ylo + 1;; ++y) {
        long ti = 2 * m * y - num;
        if (Q(ti) * ti >= rem) break;
        t[i] = ti;
        self(self, i + 1, ysum + y, rem - Q(ti) * ti);
      }
    };
    rec(rec, 0, 0, budget);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return out;
}

Series an_theta_star(int j, int n, long a_coef, const Q& prec) {
  long m = n + 1;
  if (j < 0 || j > n) throw std::invalid_argument("an_theta_star: row index out of range");
  Series out(2, 8 * m, 2, prec);
  // s runs over j - n/2 + mℤ; track 2s to stay integral.
  auto put = [&](long ts) {
    Q qe = rat(ts * ts, 8 * m);
    if (qe >= prec) return false;
    out.add_term(qe, {rat(a_coef * ts, 2), rat(ts, 2)}, 1);
    return true;
  };
  long base = 2 * j - n;
  for (long k = 0; put(base + 2 * m * k); ++k) {
  }
  for (long k = -1; put(base + 2 * m * k); --k) {
  }
  return out;
}

Series an_determinant(const AnSpec& spec, const Q& prec) {
  if (prec <= 0) throw std::invalid_argument("an_determinant: precision must be positive");
  if (spec.n > 5) throw std::length_error("an_determinant: rank exceeds the (n+1)! budget");
  int n = spec.n;
  long m = n + 1;

  Series out(1, 8 * m, 2, prec);
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    int sig = permutation_sign(perm);
    Series prod(2, 8 * m, 2, prec);
    prod.add_term(0, {0, 0}, 1);
    for (int col = 0; col < m; ++col)
      prod = prod * an_theta_star(perm[col], n, -spec.a[col], prec);
    // integrating over the second variable keeps its zero-exponent stratum
    for (const auto& [qn, zmap] : prod.terms())
      for (const auto& [zrow, c] : zmap)
        if (zrow[1] == 0) out.add_term(rat(qn, 8 * m), {rat(zrow[0], 2)}, c * sig);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return out;
}

}  // namespace tb
