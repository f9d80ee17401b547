#pragma once
// Hecke operators V_m acting on Jacobi forms of integral index, and the two
// maps they feed: the additive (Maass) lift phi -> sum_m phi|V_m p^{tm} and
// the multiplicative Borcherds product attached to a weight-zero weakly
// holomorphic form.  Both lifts are represented by their truncated
// Fourier-Jacobi expansions, i.e. finitely many index-raised Jacobi forms,
// which is enough to compare them coefficient by coefficient.

#include "tb/blocks.hpp"
#include "tb/rational.hpp"
#include "tb/series.hpp"

#include <vector>

namespace tb {

// Exact Bernoulli number B_k, with B_1 = -1/2.
Q bernoulli(long k);

// G_k = -B_k/(2k) + sum_{n>=1} sigma_{k-1}(n) q^n for even k >= 2, the
// weight-k Eisenstein series normalized so that the q^1 coefficient is 1;
// identically zero for odd k (where no level-one Eisenstein series exists).
Series eisenstein_g(long k, const Q& prec);

// phi|V_m for a one-variable series with integral q and zeta exponents,
// interpreted as a Jacobi form of weight k:
//
//   c_{phi|V_m}(n, r) = sum_{d >= 1, d | gcd(n, r, m)} d^{k-1} c_phi(n m / d^2, r / d)
//
// with the convention that every d divides 0.  The index multiplies by m.
// The result carries precision qprec(phi)/m, since the d = 1 term alone
// consumes coefficients of phi up to q-exponent n*m.  Throws when phi has
// fractional exponents or no precision bound.
Series hecke_v(const Series& phi, long k, long m);

// The m = 2 operator evaluated from its coset decomposition instead of the
// coefficient formula:
//
//   phi|V_2 = 2^{k-1} phi(2 tau, 2z) + (1/2) phi(tau/2, z) + (1/2) phi((tau+1)/2, z).
//
// The half-period translate contributes (-1)^n on the q^(n/2) stratum, so
// odd strata of phi cancel between the last two terms and the sum lands back
// on integral exponents.  Exists purely as an independent cross-check of
// hecke_v: the two must agree wherever both are defined.
Series hecke_v2_substitution(const Series& phi, long k);

// psi = (-1)^v (Theta|V_2) / Theta for a theta block Theta of weight k > 0,
// integral index t, trivial character, and integral q-order v > 0 (odd v
// additionally requires Theta holomorphic, else the quotient picks up poles).
// The result is a weakly holomorphic Jacobi form of weight 0 and index t:
// Theta|V_2 has q-order ceil(v/2), so psi has q-order -floor(v/2).  The
// returned series holds at least the requested precision.
Series gpy_psi(const ThetaQuotient& theta, const Q& prec);

// The theta block read off from the q^0 stratum of a weight-zero form psi:
//
//   Th(psi) = eta^{c(0,0)} prod_{l>0} (theta_l / eta)^{c(0,l)}
//
// together with its weight c(0,0)/2 and the p-exponent
// C = (1/2) sum_{l>0} c(0,l) l^2 that places the leading Fourier-Jacobi
// coefficient of the Borcherds product at p^C.  Requires the stratum to be
// symmetric under l -> -l with integral entries.
struct LeadingBlock {
  ThetaQuotient tq;
  Q weight;
  Q p_exponent;
};
LeadingBlock borcherds_theta(const Series& psi);

// Checks sum_{d>=1} c_psi(d^2 n, d l) >= 0 for every singular pair
// (4nt - l^2 < 0), the criterion for the Borcherds lift of psi to be
// holomorphic.  Coefficients are looked up through the index-t periodicity
// c(n, l) = c(n', l') for equal discriminants and l = +-l' mod 2t, which
// pins every singular class to a representative with |l| <= t and
// n <= t/4; psi must therefore carry q-precision above t/4 (throws
// otherwise) and should satisfy check_periodicity(psi, t) for the
// reduction to be meaningful.
bool val1_check(const Series& psi, long t);

// A truncated Fourier-Jacobi expansion
//   f_0(tau) + sum_{m=1}^{pprec} f_m(tau, z) p^{t m},
// the common output format of the additive and multiplicative lifts.
// coeff[i] is f_{i+1}, a series of index t(i+1) in the Jacobi direction.
struct FourierJacobiExpansion {
  Q weight = 0;
  long index = 0;  // t, the p-grading step
  long pprec = 0;  // number of positive-index coefficients stored
  Series eisenstein;
  std::vector<Series> coeff;
};

// Structural equality: same grading, f_0 and every f_m equal as series.
bool fj_equal(const FourierJacobiExpansion& a, const FourierJacobiExpansion& b);

// Additive lift of a weight-k index-t Jacobi form with integral exponents:
// f_0 = c_phi(0,0) G_k and f_m = phi|V_m.  Computing pprec coefficients at
// q-precision qprec consumes phi up to q-exponent pprec*qprec, so phi must
// carry at least that much precision (throws otherwise).
FourierJacobiExpansion gritsenko_lift(const Series& phi, long k, long t, long pprec,
                                      const Q& qprec);

// Borcherds product of a weight-zero index-t weakly holomorphic psi:
//
//   B(psi) = Th(psi) p^C prod_{n, l in Z, m >= 1} (1 - q^n zeta^l p^{tm})^{c_psi(n m, l)}
//
// expanded as a Fourier-Jacobi series.  Negative exponents c(nm, l) expand
// through the binomial series of (1-x)^c, exactly, per p-power.  Requires
// C = t (the leading coefficient then sits at p^t, aligning the result with
// the grading of gritsenko_lift); psi needs q-precision qprec plus slack
// (pprec-1)*|q_order| when its q-order is negative, and enough p-depth reads
// coefficients c(nm, l) up to nm < qprec * pprec.
FourierJacobiExpansion borcherds_product(const Series& psi, long t, long pprec,
                                         const Q& qprec);

}  // namespace tb
