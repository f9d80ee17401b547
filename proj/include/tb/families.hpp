// Closed-form Fourier expansions for two infinite families of theta
// blocks: the quarks  ϑ_a ϑ_b ϑ_{a+b} / η  and their higher analogues
//
//    Θ_a = η^{-n(n-1)/2} ∏_{0≤i<j≤n} ϑ_{a_i - a_j}
//
// attached to an integer vector a = (a_0, …, a_n) with pairwise
// distinct entries.  Both admit explicit expansions as signed theta
// series which this module evaluates term by term; cross-checking them
// against the direct product expansion is the point of the exercise,
// since the closed forms make holomorphy at infinity visible (every
// q-exponent is nonnegative) while the product form makes the block
// structure visible.
//
// Θ_a only depends on a modulo adding a constant vector, changes by at
// most a sign under permuting or negating entries, and lies in weight
// n/2, index Q(a) = ½ Σ_{i<j} (a_i-a_j)², character ε^{n(n+2)}.
#pragma once

#include "tb/blocks.hpp"
#include "tb/series.hpp"

namespace tb {

// Q_{a,b} = ϑ_a ϑ_b ϑ_{a+b} / η, weight 1, index a²+ab+b², character ε³.
struct QuarkSpec {
  long a = 1, b = 1;

  long gcd() const;
  Q index() const;  // a² + ab + b²
  ThetaQuotient block() const;
  // Cusp form iff 3 | a'b'(a'+b') where (a',b') = (a,b)/gcd(a,b),
  // equivalently iff a' and b' are not congruent mod 3.
  bool is_cusp() const;
};

// Fourier expansion -Σ_{r,s} (s|3) q^{r²+rs+s²/3} ζ^{(a-b)r+as},
// summed over all integers r, s with q-exponent below prec.
Series quark_expansion(const QuarkSpec& spec, const Q& prec);

// The same series organized symmetrically in (a, b, c) with c = -a-b:
// the sum runs over integer triples u+v+w = 0, u ≡ v ≡ w mod 3, with
// coefficient -(u|3) and exponents q^{(u²+v²+w²)/18} ζ^{-(au+bv+cw)/3}.
Series quark_expansion_symmetric(const QuarkSpec& spec, const Q& prec);

// Θ_a for a = (a_0, …, a_n), n ≥ 2, entries pairwise distinct.
struct AnSpec {
  int n = 2;
  std::vector<long> a;  // n+1 entries

  explicit AnSpec(std::vector<long> entries);

  Q index() const;  // ½ Σ_{i<j} (a_i-a_j)² = ((n+1)Σa_i² - (Σa_i)²)/2
  // Block on the absolute differences; sign() tracks the ϑ_{-d} = -ϑ_d
  // flips, so the series of Θ_a equals sign() times the block expansion.
  ThetaQuotient block() const;
  int sign() const;
  // Cusp form iff some difference (a_i-a_j)/g is divisible by n+1,
  // where g is the gcd of all the differences.
  bool is_cusp() const;
};

// Fourier expansion Σ σ(x) q^{x²/2(n+1)} ζ^{a·x} over x ∈ (n/2+ℤ)^{n+1}
// with x·1 = 0, where σ(x) is the sign of the unique permutation π with
// x ≡ (n/2)·1 - (π(0),…,π(n)) mod (n+1), and 0 if no π matches.  The
// opposite congruence -(n/2)·1 + π differs by the global factor
// (-1)^{n(n+1)/2}; the convention here is the one that matches the sign
// of the theta product for every n, which the n = 2 case pins down
// through the quark family.  The enumeration runs over pairs (π, y)
// with x = (n/2)·1 - π - (n+1)y, Σy_i = 0, bounded by the q-precision.
Series an_expansion(const AnSpec& spec, const Q& prec);

// One column factor of the determinant form below: the plain theta
// series Σ q^{s²/2(n+1)} ζ₁^{a·s} ζ₂^{s} over s ∈ j - n/2 + (n+1)ℤ,
// in two elliptic variables (the second is the integration variable).
Series an_theta_star(int j, int n, long a_coef, const Q& prec);

// Θ_a as the constant term in w of det[ϑ*_j(τ, w - a_i z)]: the
// determinant is expanded over permutations into products of the
// two-variable factors above and the w-integral keeps the stratum of
// w-exponent zero.  The sign of z matches the σ convention of
// an_expansion.  Cost grows like (n+1)!, so the rank is capped.
Series an_determinant(const AnSpec& spec, const Q& prec);

// The cusp criterion evaluated from the difference pattern alone.
bool cusp_supplement(const AnSpec& spec);

}  // namespace tb
