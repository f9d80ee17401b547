#pragma once
// Truncated Fourier expansions: exact Laurent series in q with coefficients
// that are Laurent polynomials in one or several zeta variables.
//
// Exponent model.  q-exponents are rationals stored as integer numerators
// over a per-series scale (default 24, the denominator of every eta-power
// exponent); zeta exponents are vectors of numerators over a second scale
// (default 2, the denominator of the theta series' half-integral powers).
// Scales are promoted to an LCM whenever two series meet, so represented
// values never change.  Comparisons are integer comparisons at a common
// scale, never floating point.
//
// Truncation model.  `qprec` is an exclusive upper bound on the q-exponent
// of any stored term; `nullopt` means the series is exact (a finite sum
// known completely, e.g. a monomial).  Arithmetic contracts the bound
// pessimistically: add takes the min, mul shifts each operand's bound by
// the other's leading order.  No operation fabricates terms at or beyond
// the bound.

#include "tb/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tb {

class Series {
 public:
  using ZKey = std::vector<long>;         // zeta exponent numerators, scale zscale_
  using Stratum = std::map<ZKey, Q>;      // one q-stratum: zeta monomial -> coefficient
  using Terms = std::map<long, Stratum>;  // q exponent numerator -> stratum

  Series() : nvars_(1), qscale_(24), zscale_(2) {}
  Series(int nvars, long qscale, long zscale, std::optional<Q> qprec)
      : nvars_(nvars), qscale_(qscale), zscale_(zscale), qprec_(std::move(qprec)) {}

  static Series zero(int nvars, std::optional<Q> qprec = std::nullopt);
  static Series one(int nvars);
  // coeff * q^qexp * zeta^zexp (exact, no truncation)
  static Series monomial(int nvars, const Q& qexp, const std::vector<Q>& zexp, const Q& coeff);
  static Series constant(int nvars, const Q& c) { return monomial(nvars, 0, std::vector<Q>(nvars, 0), c); }

  int nvars() const { return nvars_; }
  long qscale() const { return qscale_; }
  long zscale() const { return zscale_; }
  const std::optional<Q>& qprec() const { return qprec_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const;

  // Smallest stored q-exponent; nullopt when no terms are stored.
  std::optional<Q> q_order() const;
  Q q_exp_value(long num) const { return rat(num, qscale_); }

  Q coeff(const Q& qexp, const std::vector<Q>& zexp) const;
  // Convenience for one-variable series.
  Q coeff1(const Q& qexp, const Q& zexp) const;
  // The full stratum at a q-exponent, as value pairs (zeta exponents, coefficient).
  std::vector<std::pair<std::vector<Q>, Q>> stratum(const Q& qexp) const;

  // Insert c at (qexp, zexp) given in values; respects the precision bound.
  void add_term(const Q& qexp, const std::vector<Q>& zexp, const Q& c);

  Series with_prec(const Q& qprec) const;  // trim + tighten bound
  Series promoted(long qscale, long zscale) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Q& c, const Series& a);

  // Named constructors for the three kernel series. Each comes in a sum
  // (character-twisted theta series) and a product (infinite product,
  // truncated) flavour; the undecorated name computes both and insists
  // they agree, returning the common value.
  static Series eta_sum(const Q& prec);
  static Series eta_product(const Q& prec);
  static Series eta(const Q& prec);

  static Series theta_sum(long a, const Q& prec);
  static Series theta_product(long a, const Q& prec);
  static Series theta(long a, const Q& prec);

  static Series quintuple_sum(long a, const Q& prec);
  static Series quintuple_product(long a, const Q& prec);
  static Series quintuple(long a, const Q& prec);

  // theta(tau, a.z) as a series in nvars zeta variables; av may be rational
  // (half-integral coordinates appear for some root systems).
  static Series theta_vec(const std::vector<Q>& av, int nvars, const Q& prec);

  // eta^e for any rational e, via the binomial expansion of the product form.
  static Series eta_power(const Q& e, const Q& prec);

 private:
  int nvars_;
  long qscale_;
  long zscale_;
  std::optional<Q> qprec_;
  Terms terms_;

  void prune();
  friend Series mul_impl(const Series& a, const Series& b);
  friend struct SeriesAccess;
};

// f^n for integer n >= 0 (binary exponentiation, exact truncation tracking).
Series pow(const Series& f, unsigned long n);

// f^e for rational e; requires a unique minimal term with coefficient c and
// needs c = 1 unless e is an integer (fractional powers of other constants
// would leave the rationals).
Series pow_rational(const Series& f, const Q& e);

// Multiplicative inverse; requires a unique minimal term (one q-exponent
// carrying a single zeta monomial).
Series invert(const Series& f);

// Exact quotient a/b for one-variable series: stratum-by-stratum Laurent
// polynomial division. Throws if some stratum fails to divide exactly (the
// quotient then has no Fourier-Laurent expansion).
Series divide(const Series& a, const Series& b);

// Product of many factors truncated to a common final precision; cheaper
// than folding operator* because intermediate products are clipped using
// the leading orders of the factors still to come.
Series mul_many(std::vector<Series> factors, const Q& final_prec);

// Collapse k zeta variables to one along direction a: zeta^v -> zeta^(a.v).
Series specialize(const Series& f, const std::vector<long>& a);

// View an n-variable series as one in more variables (independent of the new
// ones); existing variables keep their positions.
Series lift_nvars(const Series& f, int n);

// zeta -> zeta^l on a one-variable series (the U_l substitution z -> lz).
Series u_scale(const Series& f, long l);

// Check c(n,r) = e(m*lambda) c(n + lambda r + lambda^2 m, r + 2 lambda m)
// inside the truncation window; the sign e(m*lambda) = (-1)^(2m*lambda) is
// the half-integral-index correction and is 1 for integral m.
bool check_periodicity(const Series& f, const Q& m);

// Structural equality after promotion to common scales and truncation to the
// common precision window.
bool series_equal(const Series& a, const Series& b);

// a - b restricted to the common window; empty means they agree.
Series series_diff(const Series& a, const Series& b);

std::string to_json(const Series& f);
Series series_from_json(const std::string& text);
std::string to_text(const Series& f, size_t max_terms = 0);

}  // namespace tb
