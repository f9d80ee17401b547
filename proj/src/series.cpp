#include "tb/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tb {

namespace {

// exclusive-bound comparison: is value (num/scale) inside the window?
bool below(const std::optional<Q>& prec, long num, long scale) {
  return !prec || rat(num, scale) < *prec;
}

std::optional<Q> min_prec(const std::optional<Q>& a, const std::optional<Q>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

void Series::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!below(qprec_, it->first, qscale_)) {
      it = terms_.erase(it);
      continue;
    }
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? terms_.erase(it) : std::next(it);
  }
}

Series Series::zero(int nvars, std::optional<Q> qprec) {
  return Series(nvars, 24, 2, std::move(qprec));
}

Series Series::one(int nvars) { return constant(nvars, 1); }

Series Series::monomial(int nvars, const Q& qexp, const std::vector<Q>& zexp, const Q& coeff) {
  if ((int)zexp.size() != nvars) throw std::invalid_argument("monomial: zeta arity mismatch");
  long qs = lcm_long(24, to_long(q_den(qexp)));
  long zs = 2;
  for (const Q& e : zexp) zs = lcm_long(zs, to_long(q_den(e)));
  Series s(nvars, qs, zs, std::nullopt);
  if (coeff != 0) {
    ZKey key(nvars);
    for (int i = 0; i < nvars; ++i) key[i] = to_long(Q(zexp[i] * zs));
    s.terms_[to_long(Q(qexp * qs))][key] = coeff;
  }
  return s;
}

size_t Series::term_count() const {
  size_t n = 0;
  for (const auto& [e, st] : terms_) n += st.size();
  return n;
}

std::optional<Q> Series::q_order() const {
  if (terms_.empty()) return std::nullopt;
  return rat(terms_.begin()->first, qscale_);
}

Q Series::coeff(const Q& qexp, const std::vector<Q>& zexp) const {
  if ((int)zexp.size() != nvars_) throw std::invalid_argument("coeff: zeta arity mismatch");
  if (qprec_ && qexp >= *qprec_) throw std::out_of_range("coeff: exponent beyond truncation");
  Q qn = qexp * qscale_;
  if (!is_integer(qn)) return 0;
  auto it = terms_.find(to_long(qn));
  if (it == terms_.end()) return 0;
  ZKey key(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Q zn = zexp[i] * zscale_;
    if (!is_integer(zn)) return 0;
    key[i] = to_long(zn);
  }
  auto jt = it->second.find(key);
  return jt == it->second.end() ? Q(0) : jt->second;
}

Q Series::coeff1(const Q& qexp, const Q& zexp) const { return coeff(qexp, {zexp}); }

std::vector<std::pair<std::vector<Q>, Q>> Series::stratum(const Q& qexp) const {
  std::vector<std::pair<std::vector<Q>, Q>> out;
  Q qn = qexp * qscale_;
  if (!is_integer(qn)) return out;
  auto it = terms_.find(to_long(qn));
  if (it == terms_.end()) return out;
  for (const auto& [key, c] : it->second) {
    std::vector<Q> z(nvars_);
    for (int i = 0; i < nvars_; ++i) z[i] = rat(key[i], zscale_);
    out.emplace_back(z, c);
  }
  return out;
}

void Series::add_term(const Q& qexp, const std::vector<Q>& zexp, const Q& c) {
  if ((int)zexp.size() != nvars_) throw std::invalid_argument("add_term: zeta arity mismatch");
  if (c == 0) return;
  if (qprec_ && qexp >= *qprec_) return;
  Q qn = qexp * qscale_;
  if (!is_integer(qn)) throw std::invalid_argument("add_term: exponent not on the q-scale lattice");
  ZKey key(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Q zn = zexp[i] * zscale_;
    if (!is_integer(zn)) throw std::invalid_argument("add_term: exponent not on the zeta-scale lattice");
    key[i] = to_long(zn);
  }
  Q& slot = terms_[to_long(qn)][key];
  slot += c;
  if (slot == 0) {
    terms_[to_long(qn)].erase(key);
    if (terms_[to_long(qn)].empty()) terms_.erase(to_long(qn));
  }
}

Series Series::with_prec(const Q& qprec) const {
  Series r = *this;
  r.qprec_ = min_prec(r.qprec_, qprec);
  r.prune();
  return r;
}

Series Series::promoted(long qscale, long zscale) const {
  if (qscale % qscale_ || zscale % zscale_)
    throw std::invalid_argument("promoted: new scale must be a multiple of the old");
  if (qscale == qscale_ && zscale == zscale_) return *this;
  long qf = qscale / qscale_, zf = zscale / zscale_;
  Series r(nvars_, qscale, zscale, qprec_);
  for (const auto& [e, st] : terms_) {
    Stratum ns;
    for (const auto& [key, c] : st) {
      ZKey nk(key);
      for (long& x : nk) x *= zf;
      ns[nk] = c;
    }
    r.terms_[e * qf] = std::move(ns);
  }
  return r;
}

namespace {

// Bring two series to common scales; arity must already match.
void align(Series& a, Series& b) {
  long qs = lcm_long(a.qscale(), b.qscale());
  long zs = lcm_long(a.zscale(), b.zscale());
  a = a.promoted(qs, zs);
  b = b.promoted(qs, zs);
}

}  // namespace

Series operator+(const Series& a0, const Series& b0) {
  if (a0.nvars() != b0.nvars()) throw std::invalid_argument("add: zeta arity mismatch");
  Series a = a0, b = b0;
  align(a, b);
  Series r(a.nvars_, a.qscale_, a.zscale_, min_prec(a.qprec_, b.qprec_));
  r.terms_ = a.terms_;
  for (const auto& [e, st] : b.terms_)
    for (const auto& [key, c] : st) {
      Q& slot = r.terms_[e][key];
      slot += c;
    }
  r.prune();
  return r;
}

Series operator-(const Series& a) {
  Series r = a;
  for (auto& [e, st] : r.terms_)
    for (auto& [key, c] : st) c = -c;
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Q& c, const Series& a) {
  if (c == 0) return Series::zero(a.nvars());
  Series r = a;
  for (auto& [e, st] : r.terms_)
    for (auto& [key, co] : st) co *= c;
  return r;
}

Series mul_impl(const Series& a0, const Series& b0) {
  if (a0.nvars() != b0.nvars()) throw std::invalid_argument("mul: zeta arity mismatch");
  Series a = a0, b = b0;
  align(a, b);

  // Precision of the product: each operand's window shifts by the other's
  // leading order. An exact zero operand annihilates everything.
  std::optional<Q> prec;
  {
    bool exact_zero = (a.terms_.empty() && !a.qprec_) || (b.terms_.empty() && !b.qprec_);
    if (exact_zero) return Series::zero(a.nvars_);
    auto ord_of = [](const Series& s) -> std::optional<Q> {
      if (!s.terms_.empty()) return rat(s.terms_.begin()->first, s.qscale());
      return s.qprec();  // zero up to the window: order at least qprec
    };
    std::optional<Q> oa = ord_of(a), ob = ord_of(b);
    if (a.qprec_ && ob) prec = min_prec(prec, *a.qprec_ + *ob);
    if (b.qprec_ && oa) prec = min_prec(prec, *b.qprec_ + *oa);
  }

  Series r(a.nvars_, a.qscale_, a.zscale_, prec);
  for (const auto& [ea, sa] : a.terms_) {
    for (const auto& [eb, sb] : b.terms_) {
      long e = ea + eb;
      if (!below(prec, e, a.qscale_)) break;  // eb ascending
      auto& target = r.terms_[e];
      for (const auto& [ka, ca] : sa)
        for (const auto& [kb, cb] : sb) {
          Series::ZKey k(ka);
          for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
          Q& slot = target[k];
          slot += ca * cb;
        }
    }
  }
  r.prune();
  return r;
}

Series operator*(const Series& a, const Series& b) { return mul_impl(a, b); }

Series pow(const Series& f, unsigned long n) {
  if (n == 0) return Series::one(f.nvars());
  Series base = f, acc = Series::one(f.nvars());
  bool have = false;
  unsigned long k = n;
  while (k) {
    if (k & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

Series pow_rational(const Series& f, const Q& e) {
  if (is_integer(e)) {
    long n = to_long(e);
    if (n >= 0) return pow(f, (unsigned long)n);
    return pow(invert(f), (unsigned long)(-n));
  }
  if (f.terms().empty()) throw std::invalid_argument("pow_rational: zero series");
  const auto& [e0, s0] = *f.terms().begin();
  if (s0.size() != 1)
    throw std::invalid_argument("pow_rational: leading stratum is not a single monomial");
  const auto& [v0, c0] = *s0.begin();
  if (c0 != 1)
    throw std::invalid_argument("pow_rational: fractional power needs leading coefficient 1");

  std::vector<Q> zlead(f.nvars()), zneg(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    zlead[i] = rat(v0[i], f.zscale()) * e;
    zneg[i] = rat(-v0[i], f.zscale());
  }
  Series lead = Series::monomial(f.nvars(), rat(e0, f.qscale()) * e, zlead, 1);
  Series m0inv = Series::monomial(f.nvars(), rat(-e0, f.qscale()), zneg, 1);
  Series u = f * m0inv - Series::one(f.nvars());
  if (u.is_zero()) {
    if (u.qprec()) return lead * Series::one(f.nvars()).with_prec(*u.qprec());
    return lead;
  }
  if (!u.qprec())
    throw std::invalid_argument("pow_rational: exact non-monomial series needs a truncation");
  Q ord_u = *u.q_order();
  if (ord_u <= 0) throw std::logic_error("pow_rational: leading term was not dominant");
  Series s = Series::one(f.nvars()).with_prec(*u.qprec());
  Series uk = Series::one(f.nvars());
  unsigned long kmax = (unsigned long)to_long(q_ceil(*u.qprec() / ord_u)) + 1;
  for (unsigned long k = 1; k <= kmax; ++k) {
    uk = (uk * u).with_prec(*u.qprec());
    if (uk.is_zero()) break;
    s = s + binomial(e, k) * uk;
  }
  return lead * s;
}

Series invert(const Series& f) {
  if (f.terms().empty()) throw std::invalid_argument("invert: zero series");
  const auto& [e0, s0] = *f.terms().begin();
  if (s0.size() != 1)
    throw std::invalid_argument("invert: leading stratum is not a single monomial");
  const auto& [v0, c0] = *s0.begin();

  std::vector<Q> zneg(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) zneg[i] = rat(-v0[i], f.zscale());
  Series g0 = Series::monomial(f.nvars(), rat(-e0, f.qscale()), zneg, 1 / Q(c0));

  Series u = f * g0 - Series::one(f.nvars());
  if (u.is_zero()) {
    // f is the bare monomial inside its window; the inverse inherits it.
    if (u.qprec()) return g0 * Series::one(f.nvars()).with_prec(*u.qprec());
    return g0;
  }
  Q ord_u = *u.q_order();
  if (ord_u <= 0) throw std::logic_error("invert: leading term was not dominant");
  if (!u.qprec()) throw std::invalid_argument("invert: exact non-monomial series needs a truncation");
  // geometric series: 1/(1+u) = 1 - u + u^2 - ... ; Horner form.
  unsigned long steps = (unsigned long)to_long(q_ceil(*u.qprec() / ord_u)) + 1;
  Series s = Series::one(f.nvars()).with_prec(*u.qprec());
  for (unsigned long i = 0; i < steps; ++i) s = (Series::one(f.nvars()) - u * s).with_prec(*u.qprec());
  return g0 * s;
}

namespace {

// Exact division of one-variable zeta-Laurent polynomials (A/B), top down.
// Returns nullopt if the division leaves a remainder.
std::optional<Series::Stratum> divide_laurent(Series::Stratum A, const Series::Stratum& B) {
  if (B.empty()) return std::nullopt;
  const auto& [ebTop, cbTop] = *B.rbegin();
  long ebLow = B.begin()->first[0];
  // If A = Q*B exactly then min(Q) = min(A) - min(B); a candidate quotient
  // term below that proves inexactness.
  long eqLow = A.empty() ? 0 : A.begin()->first[0] - ebLow;
  Series::Stratum Qout;
  while (!A.empty()) {
    const auto& [eaTop, caTop] = *A.rbegin();
    long eq = eaTop[0] - ebTop[0];
    if (eq < eqLow) return std::nullopt;
    Q cq = caTop / cbTop;
    Qout[{eq}] += cq;
    if (Qout[{eq}] == 0) Qout.erase({eq});
    for (const auto& [eb, cb] : B) {
      Series::ZKey k{eb[0] + eq};
      Q& slot = A[k];
      slot -= cq * cb;
      if (slot == 0) A.erase(k);
    }
  }
  return Qout;
}

}  // namespace

Series divide(const Series& a0, const Series& b0) {
  if (a0.nvars() != 1 || b0.nvars() != 1)
    throw std::invalid_argument("divide: implemented for one zeta variable");
  Series a = a0, b = b0;
  align(a, b);
  if (b.terms().empty()) throw std::invalid_argument("divide: zero divisor");
  long beta = b.terms().begin()->first;
  const Series::Stratum& B0 = b.terms().begin()->second;
  if (a.terms().empty()) {
    std::optional<Q> p;
    if (a.qprec()) p = *a.qprec() - rat(beta, a.qscale());
    return Series::zero(1, p);
  }
  long alpha = a.terms().begin()->first - beta;

  // window of the quotient
  std::optional<Q> prec;
  if (a.qprec()) prec = *a.qprec() - rat(beta, a.qscale());
  if (b.qprec()) prec = min_prec(prec, *b.qprec() - rat(beta, a.qscale()) + rat(alpha, a.qscale()));
  if (!prec) throw std::invalid_argument("divide: exact inputs need a truncation bound");

  long hi = to_long(q_ceil(*prec * a.qscale()));
  Series q(1, a.qscale(), a.zscale(), prec);
  std::map<long, Series::Stratum> qterms;
  for (long n = alpha; rat(n, a.qscale()) < *prec && n < hi + 1; ++n) {
    // residual stratum R = a_{n+beta} - sum_{j < n} q_j * b_{n+beta-j}
    Series::Stratum R;
    auto ita = a.terms().find(n + beta);
    if (ita != a.terms().end()) R = ita->second;
    for (const auto& [j, qs] : qterms) {
      auto itb = b.terms().find(n + beta - j);
      if (itb == b.terms().end()) continue;
      for (const auto& [kq, cq] : qs)
        for (const auto& [kb, cb] : itb->second) {
          Series::ZKey k{kq[0] + kb[0]};
          Q& slot = R[k];
          slot -= cq * cb;
          if (slot == 0) R.erase(k);
        }
    }
    if (R.empty()) continue;
    auto qn = divide_laurent(R, B0);
    if (!qn) throw std::domain_error("divide: stratum does not divide exactly (no Laurent expansion)");
    if (!qn->empty()) qterms[n] = std::move(*qn);
  }
  for (auto& [n, st] : qterms)
    for (auto& [k, c] : st) {
      std::vector<Q> z{rat(k[0], q.zscale())};
      q.add_term(rat(n, q.qscale()), z, c);
    }
  return q;
}

Series mul_many(std::vector<Series> factors, const Q& final_prec) {
  if (factors.empty()) return Series::one(1).with_prec(final_prec);
  // leading orders of the factors still to be multiplied
  std::vector<Q> suffix(factors.size() + 1, 0);
  for (size_t i = factors.size(); i-- > 0;) {
    auto o = factors[i].q_order();
    if (!o) throw std::invalid_argument("mul_many: zero factor");
    suffix[i] = suffix[i + 1] + *o;
  }
  Series acc = Series::one(factors[0].nvars());
  for (size_t i = 0; i < factors.size(); ++i)
    acc = (acc * factors[i]).with_prec(final_prec - suffix[i + 1]);
  if (!acc.qprec() || *acc.qprec() < final_prec)
    throw std::logic_error("mul_many: factor precision too small for requested bound");
  return acc.with_prec(final_prec);
}

Series specialize(const Series& f, const std::vector<long>& a) {
  if ((int)a.size() != f.nvars()) throw std::invalid_argument("specialize: direction length mismatch");
  Series r(1, f.qscale(), f.zscale(), f.qprec());
  for (const auto& [e, st] : f.terms())
    for (const auto& [key, c] : st) {
      long z = 0;
      for (size_t i = 0; i < a.size(); ++i) z += a[i] * key[i];
      r.add_term(rat(e, f.qscale()), {rat(z, f.zscale())}, c);
    }
  return r;
}

Series u_scale(const Series& f, long l) {
  if (f.nvars() != 1) throw std::invalid_argument("u_scale: one zeta variable expected");
  Series r(1, f.qscale(), f.zscale(), f.qprec());
  for (const auto& [e, st] : f.terms())
    for (const auto& [key, c] : st) r.add_term(rat(e, f.qscale()), {rat(key[0] * l, f.zscale())}, c);
  return r;
}

Series lift_nvars(const Series& f, int n) {
  if (n < f.nvars()) throw std::invalid_argument("lift_nvars: cannot drop variables");
  if (n == f.nvars()) return f;
  Series r(n, f.qscale(), f.zscale(), f.qprec());
  for (const auto& [e, st] : f.terms())
    for (const auto& [key, c] : st) {
      Series::ZKey k(key);
      k.resize(n, 0);
      std::vector<Q> z(n);
      for (int i = 0; i < n; ++i) z[i] = rat(k[i], f.zscale());
      r.add_term(rat(e, f.qscale()), z, c);
    }
  return r;
}

bool check_periodicity(const Series& f, const Q& m) {
  if (f.nvars() != 1) throw std::invalid_argument("check_periodicity: one zeta variable expected");
  Q two_m = 2 * m;
  if (!is_integer(two_m) || m < 0)
    throw std::invalid_argument("check_periodicity: index must be a non-negative half-integer");
  if (!f.qprec()) throw std::invalid_argument("check_periodicity: needs a truncated series");
  const Q& P = *f.qprec();
  std::optional<Q> o = f.q_order();
  if (!o) return true;
  long lmax = 3;
  if (m > 0) lmax = std::max<long>(1, to_long(isqrt_floor(Q((P - *o) / m))) + 1);
  long twom = to_long(two_m);
  for (const auto& [e, st] : f.terms())
    for (const auto& [key, c] : st) {
      Q n = rat(e, f.qscale());
      Q r = rat(key[0], f.zscale());
      for (long lam = -lmax; lam <= lmax; ++lam) {
        if (lam == 0) continue;
        Q n2 = n + lam * r + lam * lam * m;
        Q r2 = r + lam * two_m;
        if (n2 >= P) continue;
        int sign = ((twom * lam) % 2 == 0) ? 1 : -1;
        // compare c(n,r) with e(m lam) c(n2, r2)
        Q qn2 = n2 * f.qscale();
        Q target = 0;
        if (is_integer(qn2)) {
          auto it = f.terms().find(to_long(qn2));
          if (it != f.terms().end()) {
            Q rz = r2 * f.zscale();
            if (is_integer(rz)) {
              auto jt = it->second.find({to_long(rz)});
              if (jt != it->second.end()) target = jt->second;
            }
          }
        }
        if (target * sign != c) return false;
      }
    }
  return true;
}

bool series_equal(const Series& a, const Series& b) { return series_diff(a, b).is_zero(); }

Series series_diff(const Series& a0, const Series& b0) {
  Series d = a0 - b0;
  return d;
}

// ---------------------------------------------------------------------------
// named series

Series Series::eta_sum(const Q& prec) {
  Series s(0, 24, 2, prec);
  for (long r = 1; rat(r * r, 24) < prec; ++r)
    if (int ch = chi12(r)) s.add_term(rat(r * r, 24), {}, ch);
  return s;
}

Series Series::eta_product(const Q& prec) {
  // q^{1/24} prod (1-q^n); the tail n > N only touches exponents >= N+1.
  Series acc = Series::monomial(0, Q(1, 24), {}, 1).with_prec(prec);
  for (long n = 1; Q(1, 24) + n < prec; ++n) {
    Series f = Series::constant(0, 1);
    f.add_term(Q(n), {}, -1);
    acc = (acc * f).with_prec(prec);
  }
  return acc;
}

Series Series::eta(const Q& prec) {
  Series a = eta_sum(prec), b = eta_product(prec);
  if (!series_equal(a, b)) throw std::logic_error("eta: sum and product forms disagree");
  return a;
}

Series Series::theta_sum(long a, const Q& prec) {
  if (a == 0) throw std::invalid_argument("theta: a = 0");
  Series s(1, 24, 2, prec);
  for (long r = 1; rat(r * r, 8) < prec; r += 2)
    for (long sr : {r, -r})
      if (int ch = chi4(sr)) s.add_term(rat(sr * sr, 8), {rat(a * sr, 2)}, ch);
  return s;
}

Series Series::theta_product(long a, const Q& prec) {
  if (a == 0) throw std::invalid_argument("theta: a = 0");
  std::vector<Series> fs;
  Series lead = Series::monomial(1, Q(1, 8), {rat(a, 2)}, 1);
  Series first = Series::constant(1, 1);
  first.add_term(Q(0), {Q(-a)}, -1);  // (1 - zeta^{-a})
  fs.push_back(lead);
  fs.push_back(first);
  for (long n = 1; Q(1, 8) + n < prec; ++n) {
    Series f1 = Series::constant(1, 1);
    f1.add_term(Q(n), {Q(0)}, -1);
    Series f2 = Series::constant(1, 1);
    f2.add_term(Q(n), {Q(a)}, -1);
    Series f3 = Series::constant(1, 1);
    f3.add_term(Q(n), {Q(-a)}, -1);
    fs.push_back(f1);
    fs.push_back(f2);
    fs.push_back(f3);
  }
  Series acc = Series::one(1);
  for (auto& f : fs) acc = (acc * f).with_prec(prec);
  return acc;
}

Series Series::theta(long a, const Q& prec) {
  Series s = theta_sum(a, prec), p = theta_product(a, prec);
  if (!series_equal(s, p)) throw std::logic_error("theta: sum and product forms disagree");
  return s;
}

Series Series::quintuple_sum(long a, const Q& prec) {
  if (a == 0) throw std::invalid_argument("quintuple: a = 0");
  Series s(1, 24, 2, prec);
  for (long r = 1; rat(r * r, 24) < prec; ++r)
    for (long sr : {r, -r})
      if (int ch = chi12(sr)) s.add_term(rat(sr * sr, 24), {rat(a * sr, 2)}, ch);
  return s;
}

Series Series::quintuple_product(long a, const Q& prec) {
  if (a == 0) throw std::invalid_argument("quintuple: a = 0");
  Series acc = Series::monomial(1, Q(1, 24), {rat(a, 2)}, 1).with_prec(prec);
  {
    Series first = Series::constant(1, 1);
    first.add_term(Q(0), {Q(-a)}, 1);  // (1 + zeta^{-a}), the n = 1 term of (1+q^{n-1}z^{-1})
    acc = (acc * first).with_prec(prec);
  }
  for (long n = 1; Q(1, 24) + n < prec; ++n) {
    for (auto [qe, ze, sg] : std::initializer_list<std::tuple<long, long, int>>{
             {n, 0, -1}, {n, a, +1}, {n, -a, +1}}) {
      Series f = Series::constant(1, 1);
      f.add_term(Q(qe), {Q(ze)}, sg);
      acc = (acc * f).with_prec(prec);
    }
    if (Q(1, 24) + (2 * n - 1) < prec) {
      for (long ze : {2 * a, -2 * a}) {
        Series f = Series::constant(1, 1);
        f.add_term(Q(2 * n - 1), {Q(ze)}, -1);
        acc = (acc * f).with_prec(prec);
      }
    }
  }
  return acc;
}

Series Series::quintuple(long a, const Q& prec) {
  Series s = quintuple_sum(a, prec), p = quintuple_product(a, prec);
  if (!series_equal(s, p)) throw std::logic_error("quintuple: sum and product forms disagree");
  // third route: eta * theta(2a) / theta(a)
  Series via = divide(lift_nvars(eta(prec + 1), 1) * theta_sum(2 * a, prec + 1), theta_sum(a, prec + 1));
  if (!series_equal(s, via)) throw std::logic_error("quintuple: eta*theta_2a/theta_a disagrees");
  return s;
}

Series Series::theta_vec(const std::vector<Q>& av, int nvars, const Q& prec) {
  if ((int)av.size() != nvars) throw std::invalid_argument("theta_vec: arity mismatch");
  bool zerovec = true;
  for (const Q& x : av)
    if (x != 0) zerovec = false;
  if (zerovec) throw std::invalid_argument("theta_vec: zero direction (theta_0 = 0)");
  long zs = 2;
  for (const Q& x : av) zs = lcm_long(zs, to_long(q_den(x)) * 2);
  Series s(nvars, 24, zs, prec);
  for (long r = 1; rat(r * r, 8) < prec; r += 2)
    for (long sr : {r, -r})
      if (int ch = chi4(sr)) {
        std::vector<Q> z(nvars);
        for (int i = 0; i < nvars; ++i) z[i] = av[i] * rat(sr, 2);
        s.add_term(rat(sr * sr, 8), z, ch);
      }
  return s;
}

Series Series::eta_power(const Q& e, const Q& prec) {
  if (e == 0) return Series::one(0).with_prec(prec);
  Q lead = e / 24;
  Series acc = Series::monomial(0, lead, {}, 1).with_prec(prec);
  for (long n = 1; lead + n < prec; ++n) {
    // (1 - q^n)^e truncated: sum_k C(e,k) (-1)^k q^{nk}
    Series f = Series::constant(0, 0).with_prec(prec - lead);
    for (long k = 0; Q(n) * k < prec - lead; ++k)
      f.add_term(Q(n * k), {}, binomial(e, k) * ((k % 2) ? -1 : 1));
    acc = (acc * f).with_prec(prec);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// serialization

std::string to_json(const Series& f) {
  nlohmann::ordered_json j;
  j["q_scale"] = f.qscale();
  j["zeta_scale"] = f.zscale();
  j["zeta_vars"] = f.nvars();
  j["q_prec"] = f.qprec() ? nlohmann::ordered_json(rational_str(*f.qprec())) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, st] : f.terms()) {
    nlohmann::ordered_json stratum = nlohmann::ordered_json::array();
    for (const auto& [key, c] : st) stratum.push_back({key, rational_str(c)});
    terms.push_back({e, stratum});
  }
  j["terms"] = terms;
  return j.dump();
}

Series series_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::optional<Q> prec;
  if (!j.at("q_prec").is_null()) prec = parse_rational(j.at("q_prec").get<std::string>());
  Series r(j.at("zeta_vars").get<int>(), j.at("q_scale").get<long>(), j.value("zeta_scale", 2L), prec);
  for (const auto& t : j.at("terms")) {
    long e = t.at(0).get<long>();
    for (const auto& mono : t.at(1)) {
      auto key = mono.at(0).get<std::vector<long>>();
      std::vector<Q> z(key.size());
      for (size_t i = 0; i < key.size(); ++i) z[i] = rat(key[i], r.zscale());
      r.add_term(rat(e, r.qscale()), z, parse_rational(mono.at(1).get<std::string>()));
    }
  }
  return r;
}

std::string to_text(const Series& f, size_t max_terms) {
  std::ostringstream os;
  size_t count = 0;
  bool first = true;
  for (const auto& [e, st] : f.terms()) {
    for (const auto& [key, c] : st) {
      if (max_terms && count >= max_terms) {
        os << " + ...";
        return os.str();
      }
      Q coeff = c;
      if (first) {
        if (coeff < 0) {
          os << "-";
          coeff = -coeff;
        }
      } else {
        os << (coeff < 0 ? " - " : " + ");
        if (coeff < 0) coeff = -coeff;
      }
      first = false;
      bool wrote = false;
      if (coeff != 1) {
        os << rational_str(coeff);
        wrote = true;
      }
      if (e != 0) {
        if (wrote) os << "*";
        os << "q^(" << rational_str(rat(e, f.qscale())) << ")";
        wrote = true;
      }
      for (size_t i = 0; i < key.size(); ++i)
        if (key[i] != 0) {
          if (wrote) os << "*";
          os << "z" << (f.nvars() > 1 ? std::to_string(i + 1) : "") << "^("
             << rational_str(rat(key[i], f.zscale())) << ")";
          wrote = true;
        }
      if (!wrote) os << rational_str(coeff);
      ++count;
    }
  }
  if (first) os << "0";
  if (f.qprec()) os << " + O(q^(" << rational_str(*f.qprec()) << "))";
  return os.str();
}

}  // namespace tb
