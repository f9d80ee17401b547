#pragma once
// Exact scalar arithmetic helpers on top of GMP's mpq_class / mpz_class.
// Everything in the library that is not an explicit float (search bounds)
// goes through these types; no double ever enters a verified identity.

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tb {

using Q = mpq_class;
using Z = mpz_class;

inline Q rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Z q_num(const Q& x) { return x.get_num(); }
inline Z q_den(const Q& x) { return x.get_den(); }

// floor(x) as an exact integer.
inline Z q_floor(const Q& x) {
  Z q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Z q_ceil(const Q& x) {
  Z q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// x reduced into [0,1).
inline Q mod1(const Q& x) { return x - Q(q_floor(x)); }

// x reduced into [0,m) for m > 0.
inline Q mod_positive(const Q& x, const Q& m) {
  Q r = x / m;
  return (r - Q(q_floor(r))) * m;
}

inline bool is_integer(const Q& x) { return x.get_den() == 1; }

inline long to_long(const Z& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return z.get_si();
}

inline long to_long(const Q& x) {
  if (!is_integer(x)) throw std::invalid_argument("to_long: not an integer");
  return to_long(x.get_num());
}

// floor(sqrt(z)) for z >= 0.
inline Z isqrt_floor(const Z& z) {
  if (z < 0) throw std::domain_error("isqrt_floor: negative");
  Z r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// Largest integer n with n <= sqrt(x); x >= 0 rational.
inline Z isqrt_floor(const Q& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative");
  // floor(sqrt(a/b)) = floor(sqrt(a*b))/b when scaled; compute via floor(sqrt(a*b)/b).
  Z ab = x.get_num() * x.get_den();
  Z r = isqrt_floor(ab) / x.get_den();
  // Correct boundary: want max n with n^2 <= x.
  while (Q(r + 1) * Q(r + 1) <= x) r += 1;
  while (Q(r) * Q(r) > x) r -= 1;
  return r;
}

// Kronecker symbol (a|n), wrapping mpz_kronecker_si.
inline int kronecker(long a, long n) {
  Z za(a);
  return mpz_kronecker_si(za.get_mpz_t(), n);
}

// The two characters used by the theta series:
//   chi12(r) = (12|r): +1 for r = +-1 mod 12, -1 for r = +-5 mod 12, else 0.
//   chi4(r)  = (-4|r): +1 for r = 1 mod 4, -1 for r = 3 mod 4, else 0.
inline int chi12(long r) {
  long m = ((r % 12) + 12) % 12;
  if (m == 1 || m == 11) return 1;
  if (m == 5 || m == 7) return -1;
  return 0;
}

inline int chi4(long r) {
  long m = ((r % 4) + 4) % 4;
  if (m == 1) return 1;
  if (m == 3) return -1;
  return 0;
}

// Generalized binomial coefficient C(alpha, k) for rational alpha.
inline Q binomial(const Q& alpha, unsigned long k) {
  Q r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= (alpha - Q((long)i)) / Q((long)(i + 1));
  return r;
}

// Bernoulli number B_n (B_1 = -1/2 convention), exact.
Q bernoulli(unsigned n);

// sigma_k(n) = sum of k-th powers of positive divisors.
inline Z sigma_k(long n, unsigned k) {
  if (n <= 0) throw std::domain_error("sigma_k: n must be positive");
  Z s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    Z dk, ek;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    s += dk;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(ek.get_mpz_t(), e, k);
      s += ek;
    }
  }
  return s;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long lcm_long(long a, long b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  return std::lcm(a, b);
}

inline long vec_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Moebius function.
inline int moebius(long n) {
  if (n <= 0) throw std::domain_error("moebius: n must be positive");
  int parity = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++parity;
    }
  }
  if (n > 1) ++parity;
  return (parity % 2 == 0) ? 1 : -1;
}

// Euler phi.
inline long euler_phi(long n) {
  if (n <= 0) throw std::domain_error("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// "num/den" or "num"; used by series JSON and the CLI block parser.
Q parse_rational(const std::string& s);
std::string rational_str(const Q& x);

}  // namespace tb
