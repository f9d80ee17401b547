#include "tb/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tb {

namespace {

// Integerized view of a one-variable series with integral exponents:
// q-exponent -> (zeta exponent -> coefficient).
using IntTerms = std::map<long, std::map<long, Q>>;

IntTerms integral_terms(const Series& f, const char* who) {
  if (f.nvars() != 1) throw std::invalid_argument(std::string(who) + ": series must be one-variable");
  if (!f.qprec()) throw std::invalid_argument(std::string(who) + ": series needs a truncation bound");
  IntTerms out;
  const long qs = f.qscale(), zs = f.zscale();
  for (const auto& [qn, stratum] : f.terms()) {
    if (qn % qs != 0) throw std::invalid_argument(std::string(who) + ": fractional q-exponent");
    for (const auto& [zrow, c] : stratum) {
      if (zrow[0] % zs != 0) throw std::invalid_argument(std::string(who) + ": fractional zeta exponent");
      out[qn / qs][zrow[0] / zs] = c;
    }
  }
  return out;
}

Z pow_z(long base, long e) {
  Z r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// Generalized binomial coefficient binom(c, j) for integral c of either sign.
Q binom_int(const Z& c, long j) {
  Q b = 1;
  for (long i = 0; i < j; ++i) b *= Q(c - i) / Q(i + 1);
  return b;
}

}  // namespace

Q bernoulli(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative order");
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1, solved for B_m.
  std::vector<Q> b(k + 1);
  b[0] = 1;
  for (long m = 1; m <= k; ++m) {
    Q acc = 0;
    Q binom = 1;  // binom(m+1, j), updated incrementally
    for (long j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom *= Q(m + 1 - j) / Q(j + 1);
    }
    b[m] = -acc / Q(m + 1);
  }
  return b[k];
}

Series eisenstein_g(long k, const Q& prec) {
  if (k < 2) throw std::invalid_argument("eisenstein_g: weight must be at least 2");
  Series g = Series::zero(1, prec);
  if (k % 2 != 0) return g;
  g.add_term(0, {0}, -bernoulli(k) / Q(2 * k));
  for (long n = 1; Q(n) < prec; ++n) {
    Z sigma = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma += pow_z(d, k - 1);
    g.add_term(Q(n), {0}, Q(sigma));
  }
  return g;
}

Series hecke_v(const Series& phi, long k, long m) {
  if (k < 1) throw std::invalid_argument("hecke_v: weight must be positive");
  if (m < 1) throw std::invalid_argument("hecke_v: m must be positive");
  IntTerms terms = integral_terms(phi, "hecke_v");
  Series out(1, phi.qscale(), phi.zscale(), *phi.qprec() / Q(m));
  // Forward image of each stored coefficient: (n1, r1) at divisor d | m lands
  // on (n, r) = (n1 d^2 / m, d r1), which satisfies d | gcd(n, r, m) exactly
  // when m | n1 d; each pair (d, term) reaches one output coefficient.
  for (const auto& [n1, stratum] : terms)
    for (const auto& [r1, c] : stratum)
      for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        if ((n1 * d) % m != 0) continue;
        out.add_term(Q(n1 * d * d / m), {Q(d * r1)}, Q(pow_z(d, k - 1)) * c);
      }
  return out;
}

Series hecke_v2_substitution(const Series& phi, long k) {
  if (k < 1) throw std::invalid_argument("hecke_v2_substitution: weight must be positive");
  IntTerms terms = integral_terms(phi, "hecke_v2_substitution");
  Series out(1, phi.qscale(), phi.zscale(), *phi.qprec() / Q(2));
  const Q lead = Q(pow_z(2, k - 1));
  for (const auto& [n, stratum] : terms)
    for (const auto& [r, c] : stratum) {
      out.add_term(Q(2 * n), {Q(2 * r)}, lead * c);
      // phi(tau/2) + phi((tau+1)/2): the translate carries (-1)^n on the
      // q^(n/2) stratum, so odd n cancels and even n survives with weight 1.
      if (n % 2 == 0) out.add_term(Q(n) / Q(2), {Q(r)}, c);
    }
  return out;
}

Series gpy_psi(const ThetaQuotient& theta, const Q& prec) {
  BlockMeta bm = meta(theta);
  if (!(bm.weight > 0) || bm.weight.get_den() != 1)
    throw std::invalid_argument("gpy_psi: weight must be a positive integer");
  if (bm.index.get_den() != 1) throw std::invalid_argument("gpy_psi: index must be integral");
  if (bm.character != 0) throw std::invalid_argument("gpy_psi: character must be trivial");

  Q v = theta.eta_exp / Q(24);
  for (const auto& [a, c] : theta.theta_exps) {
    (void)a;
    v += rat(c, 8);
  }
  if (v.get_den() != 1 || !(v > 0))
    throw std::invalid_argument("gpy_psi: q-order must be a positive integer");
  long vi = to_long(v);
  if (vi % 2 != 0 && classify(theta) > BlockClass::holomorphic)
    throw std::invalid_argument("gpy_psi: odd q-order requires a holomorphic block");

  long k = to_long(bm.weight);
  // Dividing by a series of order v costs v of precision, and V_2 halves it.
  Q num_prec = prec + v + 1;
  Series big = expand(theta, Q(2) * num_prec);
  Series num = hecke_v(big, k, 2);
  Series psi = divide(num, big.with_prec(num_prec));
  if (vi % 2 != 0) psi = Q(-1) * psi;

  if (!num.q_order() || *num.q_order() != Q((vi + 1) / 2))
    throw std::logic_error("gpy_psi: numerator q-order mismatch");
  if (!psi.q_order() || *psi.q_order() != Q(-(vi / 2)))
    throw std::logic_error("gpy_psi: quotient q-order mismatch");
  return psi.with_prec(prec);
}

LeadingBlock borcherds_theta(const Series& psi) {
  if (psi.nvars() != 1) throw std::invalid_argument("borcherds_theta: series must be one-variable");
  if (!psi.qprec() || !(*psi.qprec() > 0))
    throw std::invalid_argument("borcherds_theta: q^0 stratum not inside the truncation window");

  std::map<long, Z> c0;  // l -> c(0, l)
  for (const auto& [zexp, c] : psi.stratum(0)) {
    if (zexp[0].get_den() != 1 || c.get_den() != 1)
      throw std::invalid_argument("borcherds_theta: q^0 stratum must have integral exponents and coefficients");
    c0[to_long(zexp[0])] = c.get_num();
  }
  Z c00 = 0;
  Z eta = 0, cl2 = 0;
  ThetaQuotient tq = ThetaQuotient::eta(0);
  for (const auto& [l, c] : c0) {
    if (c0.count(-l) == 0 || c0.at(-l) != c)
      throw std::invalid_argument("borcherds_theta: q^0 stratum not symmetric under l -> -l");
    if (l == 0) {
      c00 = c;
    } else if (l > 0) {
      tq.mul_theta(l, to_long(c));
      eta -= c;
      cl2 += c * l * l;
    }
  }
  tq = tq * ThetaQuotient::eta(Q(c00 + eta));
  return LeadingBlock{tq, Q(c00) / Q(2), Q(cl2) / Q(2)};
}

bool val1_check(const Series& psi, long t) {
  if (t < 1) throw std::invalid_argument("val1_check: index must be positive");
  IntTerms terms = integral_terms(psi, "val1_check");
  if (!(*psi.qprec() > rat(t, 4)))
    throw std::invalid_argument("val1_check: precision must exceed t/4 to cover all singular classes");

  // Coefficient lookup through the index-t periodicity: reduce l into (-t, t]
  // and shift n so the discriminant 4nt - l^2 is preserved.  For singular
  // classes the reduced n never exceeds t/4, so the lookup stays inside the
  // truncation window.
  auto class_coeff = [&](long n, long l) -> Q {
    long lr = ((l % (2 * t)) + 2 * t) % (2 * t);
    if (lr > t) lr -= 2 * t;
    long nr = n - (l * l - lr * lr) / (4 * t);
    auto it = terms.find(nr);
    if (it == terms.end()) return 0;
    auto jt = it->second.find(lr);
    return jt == it->second.end() ? Q(0) : jt->second;
  };

  // Support bound: every class attains its discriminant at a reduced
  // representative inside the window, so the minimum over stored terms is the
  // global minimum.
  long dmin = 0;
  for (const auto& [n, stratum] : terms)
    for (const auto& [l, c] : stratum) {
      (void)c;
      dmin = std::min(dmin, 4 * t * n - l * l);
    }
  if (dmin == 0) return true;  // no singular support at all

  // Every singular pair whose d-sum meets the support: divide stored pairs
  // (n1, l1) by d with d^2 | n1, d | l1.
  std::set<std::pair<long, long>> candidates;
  for (const auto& [n1, stratum] : terms)
    for (const auto& [l1, c] : stratum) {
      (void)c;
      if (4 * t * n1 - l1 * l1 >= 0) continue;
      long dcap = n1 != 0 ? 1 : std::labs(l1);
      if (n1 != 0)
        while ((dcap + 1) * (dcap + 1) <= std::labs(n1)) ++dcap;
      for (long d = 1; d <= dcap; ++d)
        if (n1 % (d * d) == 0 && l1 % d == 0) candidates.insert({n1 / (d * d), l1 / d});
    }

  for (const auto& [n0, l0] : candidates) {
    long d0 = 4 * t * n0 - l0 * l0;
    Q sum = 0;
    for (long d = 1; d * d * d0 >= dmin; ++d) sum += class_coeff(d * d * n0, d * l0);
    if (sum < 0) return false;
  }
  return true;
}

bool fj_equal(const FourierJacobiExpansion& a, const FourierJacobiExpansion& b) {
  if (a.weight != b.weight || a.index != b.index || a.pprec != b.pprec) return false;
  if (!series_equal(a.eisenstein, b.eisenstein)) return false;
  for (long i = 0; i < a.pprec; ++i)
    if (!series_equal(a.coeff[i], b.coeff[i])) return false;
  return true;
}

FourierJacobiExpansion gritsenko_lift(const Series& phi, long k, long t, long pprec,
                                      const Q& qprec) {
  if (pprec < 1) throw std::invalid_argument("gritsenko_lift: need at least one coefficient");
  if (!phi.qprec() || *phi.qprec() < Q(pprec) * qprec)
    throw std::invalid_argument("gritsenko_lift: phi precision below pprec * qprec");
  FourierJacobiExpansion fj;
  fj.weight = Q(k);
  fj.index = t;
  fj.pprec = pprec;
  fj.eisenstein = phi.coeff1(0, 0) * eisenstein_g(k, qprec);
  for (long m = 1; m <= pprec; ++m) fj.coeff.push_back(hecke_v(phi, k, m).with_prec(qprec));
  return fj;
}

FourierJacobiExpansion borcherds_product(const Series& psi, long t, long pprec,
                                         const Q& qprec) {
  if (pprec < 1) throw std::invalid_argument("borcherds_product: need at least one coefficient");
  LeadingBlock lead = borcherds_theta(psi);
  if (lead.p_exponent != Q(t))
    throw std::invalid_argument("borcherds_product: leading p-exponent differs from the index grading");
  IntTerms terms = integral_terms(psi, "borcherds_product");
  for (const auto& [n, stratum] : terms)
    for (const auto& [l, c] : stratum) {
      (void)l;
      if (c.get_den() != 1)
        throw std::invalid_argument("borcherds_product: exponents c(n, l) must be integers");
    }

  const long mmax = pprec - 1;
  // Factors with n < 0 push q-exponents down by at most |q_order| per unit of
  // p-depth; widen the internal window by that slack so the final truncation
  // at qprec is exact.
  Q ord = psi.q_order().value_or(Q(0));
  Q slack = ord < 0 ? Q(mmax) * -ord : Q(0);
  Q internal = qprec + slack;
  if (mmax > 0 && *psi.qprec() < internal * Q(mmax))
    throw std::invalid_argument("borcherds_product: psi precision too low for requested p-depth");

  std::vector<Series> fj(pprec, Series::zero(1, internal));
  fj[0] = expand(lead.tq, internal);

  for (long m = 1; m <= mmax; ++m) {
    const long jmax = mmax / m;
    // F[j] = X^j coefficient of prod_{n,l} (1 - q^n zeta^l X)^{c(nm,l)},
    // X = p^{tm}, accumulated one (n, l) factor at a time.
    std::vector<Series> factor(jmax + 1, Series::zero(1, internal));
    factor[0] = Series::one(1).with_prec(internal);
    for (const auto& [nu, stratum] : terms) {
      if (nu % m != 0) continue;
      const long n = nu / m;
      if (Q(n) >= internal) continue;  // every X^(j>=1) term would leave the window
      for (const auto& [l, c] : stratum) {
        const Z e = c.get_num();
        for (long s = jmax; s >= 1; --s)
          for (long j = 1; j <= s; ++j) {
            Q bc = binom_int(e, j);
            if (bc == 0) continue;
            if (j % 2 != 0) bc = -bc;
            factor[s] = factor[s] + factor[s - j] * Series::monomial(1, Q(j * n), {Q(j * l)}, bc);
          }
      }
    }
    for (long M = mmax; M >= 0; --M)
      for (long j = 1; j <= std::min(jmax, M / m); ++j)
        fj[M] = fj[M] + factor[j] * fj[M - m * j];
  }

  FourierJacobiExpansion out;
  out.weight = lead.weight;
  out.index = t;
  out.pprec = pprec;
  out.eisenstein = Series::zero(1, qprec);
  for (auto& f : fj) out.coeff.push_back(f.with_prec(qprec));
  return out;
}

}  // namespace tb
