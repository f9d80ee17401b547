#include "tb/order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tb {

Q bent(const Q& x) {
  Q d = mod1(x) - Q(1, 2);
  return d * d / 2;
}

Q OrderProfile::value(const Q& x) const {
  if (pieces.empty()) throw std::logic_error("empty order profile");
  Q xr = mod1(x);
  // last piece whose lower end is <= xr (pieces cover [0,1] consecutively)
  size_t lo = 0, hi = pieces.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (pieces[mid].lo <= xr)
      lo = mid;
    else
      hi = mid;
  }
  return pieces[lo].value(xr);
}

bool OrderProfile::continuous() const {
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].hi != pieces[i + 1].lo) return false;
    if (pieces[i].value(pieces[i].hi) != pieces[i + 1].value(pieces[i + 1].lo)) return false;
  }
  if (pieces.empty()) return false;
  if (pieces.front().lo != 0 || pieces.back().hi != 1) return false;
  // periodicity across the seam at 0 ~ 1
  return pieces.front().value(0) == pieces.back().value(1);
}

OrderProfile operator+(const OrderProfile& a, const OrderProfile& b) {
  std::set<Q> cuts;
  for (const auto& p : a.pieces) {
    cuts.insert(p.lo);
    cuts.insert(p.hi);
  }
  for (const auto& p : b.pieces) {
    cuts.insert(p.lo);
    cuts.insert(p.hi);
  }
  auto piece_at = [](const OrderProfile& f, const Q& xm) -> const OrderPiece& {
    for (const auto& p : f.pieces)
      if (p.lo <= xm && xm <= p.hi) return p;
    throw std::logic_error("profile does not cover [0,1]");
  };
  OrderProfile r;
  auto it = cuts.begin();
  Q prev = *it;
  for (++it; it != cuts.end(); ++it) {
    Q lo = prev, hi = *it;
    prev = hi;
    Q xm = (lo + hi) / 2;
    const OrderPiece& pa = piece_at(a, xm);
    const OrderPiece& pb = piece_at(b, xm);
    r.pieces.push_back({lo, hi, pa.A + pb.A, pa.B + pb.B, pa.C + pb.C});
  }
  return r;
}

OrderProfile order_profile(const ThetaQuotient& tq) {
  std::set<Q> cuts{Q(0), Q(1)};
  for (const auto& [a, c] : tq.theta_exps)
    if (c != 0)
      for (long j = 1; j < a; ++j) cuts.insert(rat(j, a));
  OrderProfile r;
  auto it = cuts.begin();
  Q prev = *it;
  for (++it; it != cuts.end(); ++it) {
    Q lo = prev, hi = *it;
    prev = hi;
    Q xm = (lo + hi) / 2;
    OrderPiece p{lo, hi, 0, 0, tq.eta_exp / 24};
    for (const auto& [a, c] : tq.theta_exps) {
      if (c == 0) continue;
      // on this piece B(a x) = (a x - t)^2 / 2 with t the half-integer
      // branch point nearest a*xm
      Q t = Q(q_floor(a * xm)) + Q(1, 2);
      p.A += Q(c) * a * a / 2;
      p.B += -Q(c) * a * t;
      p.C += Q(c) * t * t / 2;
    }
    r.pieces.push_back(std::move(p));
  }
  return r;
}

MinResult minimize(const OrderProfile& p) {
  if (p.pieces.empty()) throw std::logic_error("empty order profile");
  std::set<Q> minimizers;
  Q best;
  bool have = false;
  auto consider = [&](const Q& x, const Q& v) {
    if (!have || v < best) {
      best = v;
      minimizers.clear();
      have = true;
    }
    if (v == best) minimizers.insert(mod1(x));
  };
  for (const auto& piece : p.pieces) {
    consider(piece.lo, piece.value(piece.lo));
    consider(piece.hi, piece.value(piece.hi));
    if (piece.A > 0) {
      Q v = -piece.B / (2 * piece.A);
      if (piece.lo < v && v < piece.hi) consider(v, piece.value(v));
    }
  }
  MinResult r;
  r.min_value = best;
  r.all_argmins.assign(minimizers.begin(), minimizers.end());
  r.argmin = r.all_argmins.front();
  return r;
}

namespace {

// nearest odd integer to a rational (either one on a tie)
long nearest_odd(const Q& t) {
  Z k0 = q_floor((t - 1) / 2);  // 2 k0 + 1 <= t < 2 k0 + 3
  long lo = 2 * to_long(k0) + 1;
  Q dlo = t - lo, dhi = Q(lo + 2) - t;
  return dlo <= dhi ? lo : lo + 2;
}

}  // namespace

MinResult minimize_block(const ThetaQuotient& tq) {
  OrderProfile p = order_profile(tq);
  MinResult r = minimize(p);

  if (!tq.is_pure() || tq.theta_exps.empty()) return r;

  // candidate-point proposition: for pure blocks the minimum is attained on
  // the grid x = (s + 2k) / 2M, M = sum a^2, s = sum a
  std::vector<long> av;
  for (const auto& [a, c] : tq.theta_exps)
    for (long i = 0; i < c; ++i) av.push_back(a);
  long M = 0, s = 0;
  for (long a : av) {
    M += a * a;
    s += a;
  }
  Q grid_best;
  bool grid_have = false;
  for (long k = 0; k < M; ++k) {
    Q x = rat(s + 2 * k, 2 * M);
    Q v = p.value(x);
    if (!grid_have || v < grid_best) {
      grid_best = v;
      grid_have = true;
    }
  }
  if (grid_best != r.min_value)
    throw std::logic_error("candidate-point minimum disagrees with the profile minimum");

  // witness: per-coordinate nearest odd integer to 2 a_i x* (the bent
  // summands minimize independently)
  r.witness_n.clear();
  for (long a : av) r.witness_n.push_back(nearest_odd(2 * a * r.argmin));
  Z S = pair_form_S(av, r.witness_n);
  Q theta_min = r.min_value - tq.eta_exp / 24;
  if (24 * theta_min * M != 3 * Q(S))
    throw std::logic_error("witness does not certify the minimum (24 min != 3 S/a^2)");
  return r;
}

std::pair<Q, Q> s_and_k(const std::vector<long>& a) {
  if (a.empty()) throw std::invalid_argument("s_and_k: empty vector");
  std::vector<long> v;
  for (long x : a) {
    if (x == 0) throw std::invalid_argument("s_and_k: zero entry");
    v.push_back(x < 0 ? -x : x);
  }
  long g = vec_gcd(v);
  for (long& x : v) x /= g;
  MinResult mr = minimize_block(ThetaQuotient::pure(v, 0));
  Q s = 24 * mr.min_value;
  Q k = (Q((long)a.size()) - s) / 2;
  return {s, k};
}

Z pair_form_S(const std::vector<long>& a, const std::vector<long>& n) {
  if (a.size() != n.size()) throw std::invalid_argument("pair_form_S: length mismatch");
  Z a2 = 0, n2 = 0, na = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    a2 += Z(a[i]) * a[i];
    n2 += Z(n[i]) * n[i];
    na += Z(n[i]) * a[i];
  }
  Z form1 = n2 * a2 - na * na;
  Z form2 = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      Z d = Z(a[i]) * n[j] - Z(a[j]) * n[i];
      form2 += d * d;
    }
  if (form1 != form2) throw std::logic_error("pair_form_S: the two forms disagree");
  return form1;
}

BoundaryClass hyperbolic_classify(const std::vector<long>& a, const Q& d) {
  for (long x : a)
    if (x <= 0) throw std::invalid_argument("hyperbolic_classify: entries must be positive");
  MinResult mr = minimize_block(ThetaQuotient::pure(a, -d));
  // cross-check through the quadratic form: s_a = 3 S(n)/a^2 vs the deficit
  long M = 0;
  for (long x : a) M += x * x;
  Q s_a = 24 * mr.min_value + d;  // strip the eta part back off
  if (!mr.witness_n.empty()) {
    Z S = pair_form_S(a, mr.witness_n);
    if (s_a * M != 3 * Q(S))
      throw std::logic_error("hyperbolic_classify: witness inconsistency");
  }
  if (mr.min_value > 0) return BoundaryClass::cusp;
  if (mr.min_value == 0) return BoundaryClass::holomorphic;
  return BoundaryClass::neither;
}

namespace {

void enumerate_coset(const QMat& ginv, const std::vector<int>& parity, size_t idx,
                     std::vector<long>& x, long box, Q& best) {
  if (idx == parity.size()) {
    QVec qx(x.size());
    for (size_t i = 0; i < x.size(); ++i) qx[i] = x[i];
    Q v = dot(qx, q_mat_vec(ginv, qx));
    if (v < best) best = v;
    return;
  }
  long start = -box;
  if (((start % 2) + 2) % 2 != parity[idx]) ++start;
  for (long t = start; t <= box; t += 2) {
    x[idx] = t;
    enumerate_coset(ginv, parity, idx + 1, x, box, best);
  }
}

}  // namespace

Q dual_lower_bound(const std::vector<long>& a, const std::vector<std::vector<long>>& U) {
  size_t r = U.size();
  if (r == 0) throw std::invalid_argument("dual_lower_bound: empty U");
  for (const auto& u : U) {
    if (u.size() != a.size()) throw std::invalid_argument("dual_lower_bound: length mismatch");
    long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += u[i] * a[i];
    if (d != 0) throw std::invalid_argument("dual_lower_bound: U not orthogonal to a");
  }
  QMat G(r, QVec(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      long s = 0;
      for (size_t t = 0; t < a.size(); ++t) s += U[i][t] * U[j][t];
      G[i][j] = s;
    }
  auto ginv = q_inverse(G);
  if (!ginv) throw std::invalid_argument("dual_lower_bound: U not linearly independent");

  // x_j = n . u_j has fixed parity u_j^2 mod 2 for odd n
  std::vector<int> parity(r);
  bool any_odd = false;
  for (size_t i = 0; i < r; ++i) {
    parity[i] = (int)(to_long(q_num(G[i][i])) & 1);
    if (parity[i]) any_odd = true;
  }
  if (!any_odd) return 0;  // x = 0 is admissible, the bound degenerates

  QVec qseed(r);
  for (size_t i = 0; i < r; ++i) qseed[i] = parity[i];
  Q best = dot(qseed, q_mat_vec(*ginv, qseed));

  // certify: x G^{-1} x^t >= |x|^2 / tr(G), so only |x|^2 <= best * tr(G)
  // can improve on the seed
  Q tr = 0;
  for (size_t i = 0; i < r; ++i) tr += G[i][i];
  long box = to_long(isqrt_floor(Q(best * tr))) + 1;
  std::vector<long> x(r);
  enumerate_coset(*ginv, parity, 0, x, box, best);
  return best;
}

}  // namespace tb
