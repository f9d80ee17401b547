#pragma once
// The order of vanishing of a theta quotient along the boundary torus,
// ord(f, x), as an exact piecewise-quadratic function of x: assembly from
// the single-theta bent function B, exact global minimization, and the
// equivalent hyperbolic-lattice criteria through the quadratic form S_a.

#include "tb/blocks.hpp"
#include "tb/matrix.hpp"
#include "tb/rational.hpp"

#include <vector>

namespace tb {

// B(x) = min_k (x - 1/2 + k)^2 / 2: half the squared distance from x to
// the half-integer lattice. Even, 1-periodic, vanishing exactly on 1/2 + Z.
Q bent(const Q& x);

struct OrderPiece {
  Q lo, hi;     // piece domain [lo, hi] inside [0,1]
  Q A, B, C;    // value A x^2 + B x + C on the piece
  Q value(const Q& x) const { return A * x * x + B * x + C; }
};

struct OrderProfile {
  std::vector<OrderPiece> pieces;  // consecutive, covering [0,1]
  Q value(const Q& x) const;       // any rational x; reduced mod 1 first
  // exact structural sum (domains refined to the common breakpoints)
  friend OrderProfile operator+(const OrderProfile& a, const OrderProfile& b);
  bool continuous() const;         // adjacent pieces agree at the seams
};

// ord(tq, x) on [0,1]: sum of c_a B(a x) plus eta_exp/24, assembled with
// breakpoints {j/a}. Every piece has leading coefficient A = index(tq).
OrderProfile order_profile(const ThetaQuotient& tq);

struct MinResult {
  Q min_value;
  Q argmin;                    // smallest minimizer in [0,1)
  std::vector<Q> all_argmins;  // every minimizer in [0,1), ascending
  std::vector<long> witness_n; // odd vector with 24 min = 3 S_a(n)/a^2 (pure blocks)
};

// Exact global minimum over [0,1): every piece is convex (A = m >= 0), so
// candidates are the piece endpoints and interior vertices.
MinResult minimize(const OrderProfile& p);

// minimize(order_profile(tq)); for pure blocks the candidate points
// (s + 2k)/2M of the minimum-location proposition are checked to reproduce
// the same minimum, and an odd witness vector is recovered from the argmin.
MinResult minimize_block(const ThetaQuotient& tq);

// s_a = 24 min_x sum B(a_i x) and the best possible weight k_a = (N - s_a)/2
// for the pure block theta_{a_1}...theta_{a_N} / eta^{s_a}.
std::pair<Q, Q> s_and_k(const std::vector<long>& a);

// S_a(n) = n^2 a^2 - (n.a)^2 = sum_{i<j} (a_i n_j - a_j n_i)^2; both forms
// are computed and must agree.
Z pair_form_S(const std::vector<long>& a, const std::vector<long>& n);

enum class BoundaryClass { cusp, holomorphic, neither };

// theta_a / eta^d: holomorphic at infinity iff S_a(n) >= (d/3) a^2 for all
// odd n, cusp iff strict; evaluated through the exact order minimum and
// cross-checked against the S-form on the recovered witness.
BoundaryClass hyperbolic_classify(const std::vector<long>& a, const Q& d);

// Certified min over odd integer vectors x of x G^{-1} x^t, where G is the
// Gram matrix of the rows of U (independent, orthogonal to a, odd norms);
// a lower bound for S_a(n)/a^2 by the dual criterion.
Q dual_lower_bound(const std::vector<long>& a, const std::vector<std::vector<long>>& U);

}  // namespace tb
