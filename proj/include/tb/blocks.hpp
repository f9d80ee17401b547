#pragma once
// Symbolic theta quotients eta^e * prod_a theta_a^{c_a}: an abelian group
// under multiplication, with derived weight/index/character, the divisor
// map onto formal sums of division points, an equivalent polynomial
// representation, and enumeration of blocks by index.

#include "tb/rational.hpp"
#include "tb/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace tb {

struct ThetaQuotient {
  // a >= 1 -> exponent of theta_a; entries with exponent 0 are absent
  std::map<long, long> theta_exps;
  Q eta_exp = 0;

  static ThetaQuotient theta(long a, long c = 1);
  static ThetaQuotient eta(const Q& e);
  // eta^e * theta_{a_1} ... theta_{a_N} with multiplicities from the list
  static ThetaQuotient pure(const std::vector<long>& a, const Q& e);

  ThetaQuotient& mul_theta(long a, long c);
  friend ThetaQuotient operator*(const ThetaQuotient& f, const ThetaQuotient& g);
  friend ThetaQuotient operator/(const ThetaQuotient& f, const ThetaQuotient& g);
  bool operator==(const ThetaQuotient&) const = default;

  // total theta count with multiplicity (length when all exponents >= 0)
  long theta_degree() const;
  bool is_pure() const;  // all theta exponents nonnegative
};

ThetaQuotient pow(const ThetaQuotient& f, long n);

struct BlockMeta {
  Q weight;
  Q index;
  Q character;  // exponent of the eta multiplier, reduced into [0,24)
};

// weight (sum c_a + e)/2, index (sum c_a a^2)/2, character 3*sum c_a + e mod 24
BlockMeta meta(const ThetaQuotient& tq);

// p(t) = c0 + sum_{l>=1} c_l t^l corresponding to eta^{2 c0} prod (theta_l/eta)^{c_l}
struct BlockPolynomial {
  Q c0 = 0;                    // in (1/2)Z
  std::map<long, long> coeffs;  // l >= 1 -> c_l
};

BlockPolynomial to_polynomial(const ThetaQuotient& tq);   // throws for fractional eta power
ThetaQuotient from_polynomial(const BlockPolynomial& p);

// n_a = sum_{b : a | b} c_b, the multiplicity of the primitive a-division points
using DivisorVector = std::map<long, long>;
DivisorVector divisor(const ThetaQuotient& tq);

// S_a = prod_{d | a} theta_d^{mu(a/d)}, the atom with divisor {a: 1}
ThetaQuotient s_atom(long a);

// eta^e * prod S_a^{n_a}; inverse of (divisor, eta_exp) up to the exact sequence
ThetaQuotient from_divisor(const DivisorVector& d, const Q& eta_exp);

// holomorphic on the upper half space (zeros only, at division points)
bool is_weakly_holomorphic(const ThetaQuotient& tq);

// psi(a) = sum of divisors d of a with a/d squarefree; w(a) = phi(a) psi(a)
long dedekind_psi(long a);
long phi_psi(long a);

// number of divisor vectors {n_a >= 0} with sum n_a phi_psi(a) = 2m, counted
// both by generating function and by direct enumeration (must agree)
long long count_gtb(const Q& m);

// the generalized theta blocks of index m, normalized by the fractional eta
// power that makes the minimal order exactly zero
std::vector<ThetaQuotient> enumerate_gtb(const Q& m);

enum class BlockClass {
  cusp,                    // holomorphic with strictly positive order minimum
  holomorphic,             // order minimum exactly zero
  weakly_holomorphic,      // holomorphic on the upper half space, min < 0
  not_weakly_holomorphic,  // poles at division points
};

BlockClass classify(const ThetaQuotient& tq);
std::string block_class_name(BlockClass c);

struct ClassifiedBlock {
  ThetaQuotient tq;
  BlockClass cls;
};

// All pure blocks eta^{2k-N} theta_{a_1}...theta_{a_N} of weight k, index m
// and character h, for N up to ncap (nondecreasing a_i, sum a_i^2 = 2m).
std::vector<ClassifiedBlock> enumerate_theta_blocks(const Q& k, const Q& m, const Q& h,
                                                    long ncap = 0);

// Exact expansion through the series engine; throws when the quotient has no
// Fourier-Laurent expansion (poles at division points of a bad shape).
Series expand(const ThetaQuotient& tq, const Q& prec);

}  // namespace tb
