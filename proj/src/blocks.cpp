#include "tb/blocks.hpp"

#include "tb/order.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tb {

ThetaQuotient ThetaQuotient::theta(long a, long c) {
  if (a < 1) throw std::invalid_argument("theta factor index must be positive");
  ThetaQuotient t;
  if (c != 0) t.theta_exps[a] = c;
  return t;
}

ThetaQuotient ThetaQuotient::eta(const Q& e) {
  ThetaQuotient t;
  t.eta_exp = e;
  return t;
}

ThetaQuotient ThetaQuotient::pure(const std::vector<long>& a, const Q& e) {
  ThetaQuotient t;
  t.eta_exp = e;
  for (long x : a) t.mul_theta(x, 1);
  return t;
}

ThetaQuotient& ThetaQuotient::mul_theta(long a, long c) {
  if (a < 1) throw std::invalid_argument("theta factor index must be positive");
  if (c == 0) return *this;
  long& slot = theta_exps[a];
  slot += c;
  if (slot == 0) theta_exps.erase(a);
  return *this;
}

ThetaQuotient operator*(const ThetaQuotient& f, const ThetaQuotient& g) {
  ThetaQuotient r = f;
  r.eta_exp += g.eta_exp;
  for (const auto& [a, c] : g.theta_exps) r.mul_theta(a, c);
  return r;
}

ThetaQuotient operator/(const ThetaQuotient& f, const ThetaQuotient& g) {
  ThetaQuotient r = f;
  r.eta_exp -= g.eta_exp;
  for (const auto& [a, c] : g.theta_exps) r.mul_theta(a, -c);
  return r;
}

long ThetaQuotient::theta_degree() const {
  long n = 0;
  for (const auto& [a, c] : theta_exps) n += c;
  return n;
}

bool ThetaQuotient::is_pure() const {
  for (const auto& [a, c] : theta_exps)
    if (c < 0) return false;
  return true;
}

ThetaQuotient pow(const ThetaQuotient& f, long n) {
  ThetaQuotient r;
  r.eta_exp = f.eta_exp * n;
  if (n != 0)
    for (const auto& [a, c] : f.theta_exps) r.theta_exps[a] = c * n;
  return r;
}

BlockMeta meta(const ThetaQuotient& tq) {
  long deg = tq.theta_degree();
  Q index = 0;
  for (const auto& [a, c] : tq.theta_exps) index += Q(c) * a * a;
  index /= 2;
  BlockMeta m;
  m.weight = (Q(deg) + tq.eta_exp) / 2;
  m.index = index;
  m.character = mod_positive(3 * Q(deg) + tq.eta_exp, 24);
  return m;
}

BlockPolynomial to_polynomial(const ThetaQuotient& tq) {
  if (!is_integer(tq.eta_exp))
    throw std::invalid_argument("polynomial form needs an integral eta power");
  BlockPolynomial p;
  p.coeffs = tq.theta_exps;
  p.c0 = (tq.eta_exp + tq.theta_degree()) / 2;
  return p;
}

ThetaQuotient from_polynomial(const BlockPolynomial& p) {
  ThetaQuotient t;
  long deg = 0;
  for (const auto& [l, c] : p.coeffs) {
    if (l < 1) throw std::invalid_argument("polynomial coefficients start at t^1");
    if (c != 0) t.theta_exps[l] = c;
    deg += c;
  }
  t.eta_exp = 2 * p.c0 - deg;
  return t;
}

DivisorVector divisor(const ThetaQuotient& tq) {
  DivisorVector d;
  for (const auto& [b, c] : tq.theta_exps)
    for (long a = 1; a <= b; ++a)
      if (b % a == 0) d[a] += c;
  for (auto it = d.begin(); it != d.end();)
    it = (it->second == 0) ? d.erase(it) : std::next(it);
  return d;
}

ThetaQuotient s_atom(long a) {
  if (a < 1) throw std::invalid_argument("s_atom: index must be positive");
  ThetaQuotient t;
  for (long d = 1; d <= a; ++d)
    if (a % d == 0) t.mul_theta(d, moebius(a / d));
  return t;
}

ThetaQuotient from_divisor(const DivisorVector& d, const Q& eta_exp) {
  ThetaQuotient t = ThetaQuotient::eta(eta_exp);
  for (const auto& [a, n] : d) t = t * pow(s_atom(a), n);
  return t;
}

bool is_weakly_holomorphic(const ThetaQuotient& tq) {
  for (const auto& [a, n] : divisor(tq))
    if (n < 0) return false;
  return true;
}

long dedekind_psi(long a) {
  if (a < 1) throw std::invalid_argument("dedekind_psi: positive argument required");
  long s = 0;
  for (long d = 1; d <= a; ++d) {
    if (a % d) continue;
    long r = a / d;
    bool squarefree = true;
    for (long p = 2; p * p <= r; ++p)
      if (r % (p * p) == 0) {
        squarefree = false;
        break;
      }
    if (squarefree) s += d;
  }
  return s;
}

long phi_psi(long a) { return euler_phi(a) * dedekind_psi(a); }

namespace {

// all a >= 1 with phi_psi(a) <= budget; phi_psi(a) > a^2/2 bounds the scan
std::vector<long> usable_indices(long budget) {
  std::vector<long> out;
  for (long a = 1; a * a <= 2 * budget + 2; ++a)
    if (phi_psi(a) <= budget) out.push_back(a);
  return out;
}

void enumerate_shapes(const std::vector<long>& usable, long remaining, size_t idx,
                      DivisorVector& current, const std::function<void(const DivisorVector&)>& emit) {
  if (remaining == 0) {
    emit(current);
    return;
  }
  for (size_t i = idx; i < usable.size(); ++i) {
    long w = phi_psi(usable[i]);
    if (w > remaining) continue;
    ++current[usable[i]];
    enumerate_shapes(usable, remaining - w, i, current, emit);
    if (--current[usable[i]] == 0) current.erase(usable[i]);
  }
}

}  // namespace

long long count_gtb(const Q& m) {
  Q t2 = 2 * m;
  if (!is_integer(t2) || t2 <= 0) throw std::invalid_argument("count_gtb: index must be a positive half-integer");
  long t = to_long(t2);
  auto usable = usable_indices(t);
  // generating function: coefficient of q^t in prod 1/(1 - q^{phi_psi(a)})
  std::vector<long long> dp(t + 1, 0);
  dp[0] = 1;
  for (long a : usable) {
    long w = phi_psi(a);
    for (long j = w; j <= t; ++j) dp[j] += dp[j - w];
  }
  // direct enumeration must agree
  long long direct = 0;
  DivisorVector cur;
  enumerate_shapes(usable, t, 0, cur, [&](const DivisorVector&) { ++direct; });
  if (direct != dp[t]) throw std::logic_error("count_gtb: enumeration disagrees with generating function");
  return dp[t];
}

std::vector<ThetaQuotient> enumerate_gtb(const Q& m) {
  Q t2 = 2 * m;
  if (!is_integer(t2) || t2 <= 0) throw std::invalid_argument("enumerate_gtb: index must be a positive half-integer");
  long t = to_long(t2);
  auto usable = usable_indices(t);
  std::vector<ThetaQuotient> out;
  DivisorVector cur;
  enumerate_shapes(usable, t, 0, cur, [&](const DivisorVector& d) {
    ThetaQuotient tq = from_divisor(d, 0);
    MinResult mr = minimize(order_profile(tq));
    tq.eta_exp = -24 * mr.min_value;  // normalize: minimal order exactly zero
    out.push_back(std::move(tq));
  });
  return out;
}

BlockClass classify(const ThetaQuotient& tq) {
  if (!is_weakly_holomorphic(tq)) return BlockClass::not_weakly_holomorphic;
  MinResult mr = minimize(order_profile(tq));
  if (mr.min_value > 0) return BlockClass::cusp;
  if (mr.min_value == 0) return BlockClass::holomorphic;
  return BlockClass::weakly_holomorphic;
}

std::string block_class_name(BlockClass c) {
  switch (c) {
    case BlockClass::cusp: return "cusp";
    case BlockClass::holomorphic: return "holomorphic";
    case BlockClass::weakly_holomorphic: return "weakly holomorphic";
    case BlockClass::not_weakly_holomorphic: return "not weakly holomorphic";
  }
  return "?";
}

namespace {

void multisets_with_square_sum(long target, long parts, long min_a, std::vector<long>& acc,
                               const std::function<void(const std::vector<long>&)>& emit) {
  if (parts == 0) {
    if (target == 0) emit(acc);
    return;
  }
  for (long a = min_a; a * a * parts <= target; ++a) {
    acc.push_back(a);
    multisets_with_square_sum(target - a * a, parts - 1, a, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<ClassifiedBlock> enumerate_theta_blocks(const Q& k, const Q& m, const Q& h, long ncap) {
  Q t2 = 2 * m;
  if (!is_integer(t2) || t2 <= 0)
    throw std::invalid_argument("enumerate_theta_blocks: index must be a positive half-integer");
  long target = to_long(t2);
  if (ncap <= 0) ncap = target;  // sum a_i^2 = 2m forces N <= 2m
  ncap = std::min(ncap, target);

  std::vector<ClassifiedBlock> out;
  // character constraint: 2N + 2k = h mod 24
  for (long n = 1; n <= ncap; ++n) {
    if (mod_positive(2 * Q(n) + 2 * k - h, 24) != 0) continue;
    std::vector<long> acc;
    multisets_with_square_sum(target, n, 1, acc, [&](const std::vector<long>& a) {
      ThetaQuotient tq = ThetaQuotient::pure(a, 2 * k - n);
      out.push_back({tq, classify(tq)});
    });
  }
  return out;
}

Series expand(const ThetaQuotient& tq, const Q& prec) {
  // denominators shift the usable window by 1/8 each
  Q deficit = 0;
  for (const auto& [a, c] : tq.theta_exps)
    if (c < 0) deficit += rat(-c, 8);
  Q w = prec + deficit + 1;

  std::vector<Series> numerator;
  if (tq.eta_exp != 0) numerator.push_back(lift_nvars(Series::eta_power(tq.eta_exp, w), 1));
  for (const auto& [a, c] : tq.theta_exps)
    for (long i = 0; i < c; ++i) numerator.push_back(Series::theta_sum(a, w));

  Series acc = numerator.empty() ? Series::one(1).with_prec(w) : mul_many(numerator, w);
  for (const auto& [a, c] : tq.theta_exps)
    for (long i = 0; i < -c; ++i) acc = divide(acc, Series::theta_sum(a, w));

  if (!acc.qprec() || *acc.qprec() < prec)
    throw std::logic_error("expand: precision bookkeeping fell short");
  return acc.with_prec(prec);
}

}  // namespace tb
