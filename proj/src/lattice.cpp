#include "tb/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tb {

namespace {

QMat to_q(const ZMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = QVec(m[i].begin(), m[i].end());
  return r;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
  ZMat r(a.size(), ZVec(b.empty() ? 0 : b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

ZMat z_transpose(const ZMat& a) {
  if (a.empty()) return {};
  ZMat r(a[0].size(), ZVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

QVec act(const QVec& v, const ZMat& g) {
  QVec r(g.empty() ? 0 : g[0].size(), 0);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * g[i][j];
  return r;
}

bool is_isometry(const IntegralLattice& L, const ZMat& g) {
  size_t n = L.rank();
  if (g.size() != n) return false;
  for (const ZVec& row : g)
    if (row.size() != n) return false;
  return z_mul(z_mul(g, L.gram), z_transpose(g)) == L.gram;
}

ZMat z_identity(size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

IntegralLattice::IntegralLattice(ZMat g) : gram(std::move(g)) {
  size_t n = gram.size();
  for (const ZVec& row : gram)
    if (row.size() != n) throw std::invalid_argument("lattice: gram matrix not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("lattice: gram matrix not symmetric");
  if (n == 0 || det() == 0) throw std::invalid_argument("lattice: degenerate gram matrix");
}

Z IntegralLattice::det() const {
  Q d = q_det(to_q(gram));
  return q_num(d);  // integer matrix, so the rational determinant is integral
}

bool IntegralLattice::is_even() const {
  for (size_t i = 0; i < rank(); ++i)
    if (gram[i][i] % 2 != 0) return false;
  return true;
}

Q IntegralLattice::form(const QVec& x, const QVec& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("lattice form: arity mismatch");
  Q s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) s += x[i] * Q(gram[i][j]) * y[j];
  }
  return s;
}

Q IntegralLattice::norm(const QVec& x) const { return form(x, x) / 2; }

ZMat even_sublattice_basis(const IntegralLattice& L) {
  size_t n = L.rank();
  std::vector<size_t> odd;
  for (size_t i = 0; i < n; ++i)
    if (L.gram[i][i] % 2 != 0) odd.push_back(i);
  if (odd.empty()) return z_identity(n);
  // kernel of x ↦ Σ_{i odd-diagonal} x_i mod 2: pair every odd-diagonal
  // basis vector with the first one, which survives only doubled
  size_t i0 = odd[0];
  ZMat basis;
  for (size_t i = 0; i < n; ++i) {
    if (i == i0) continue;
    ZVec row(n, 0);
    row[i] = 1;
    if (L.gram[i][i] % 2 != 0) row[i0] = -1;
    basis.push_back(std::move(row));
  }
  ZVec last(n, 0);
  last[i0] = 2;
  basis.push_back(std::move(last));
  return basis;
}

bool is_shadow_vector(const IntegralLattice& L, const QVec& r) {
  // β(e_i) ≡ β(r,e_i) mod ℤ on the basis suffices: both sides are quadratic
  // with the same bilinear part, so the difference is linear mod ℤ.
  QVec rg = q_vec_mat(r, to_q(L.gram));
  for (size_t i = 0; i < L.rank(); ++i)
    if (!is_integer(rg[i] - rat(1, 2) * Q(L.gram[i][i]))) return false;
  return true;
}

ShadowData shadow(const IntegralLattice& L) {
  size_t n = L.rank();
  ShadowData sd;
  sd.even = L.is_even();
  sd.even_basis = even_sublattice_basis(L);
  QMat gq = to_q(L.gram);
  auto ginv = q_inverse(gq);
  if (!ginv) throw std::invalid_argument("shadow: degenerate gram");
  sd.dual_basis = *ginv;

  ZMat gram_ev = z_mul(z_mul(sd.even_basis, L.gram), z_transpose(sd.even_basis));
  auto gev_inv = q_inverse(to_q(gram_ev));
  sd.even_dual_basis = q_mat_mul(*gev_inv, to_q(sd.even_basis));
  sd.even_dual_inverse = *q_inverse(sd.even_dual_basis);

  QVec half_diag(n);
  for (size_t i = 0; i < n; ++i) half_diag[i] = Q(L.gram[i][i]) / 2;
  sd.shadow_rep = q_vec_mat(half_diag, sd.dual_basis);

  // dual(L_ev)/L_ev: L_ev sits inside its dual with coefficient matrix
  // gram_ev, so the classes are enumerated by the Hermite-form boxes.
  sd.hnf = hermite_normal_form(gram_ev);
  for (const Z& d : smith_diagonal(gram_ev))
    if (d > 1) sd.cyclic_factors.push_back(d);

  ZVec c(n, 0);
  for (;;) {
    QVec v(n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v[j] += Q(c[i]) * sd.even_dual_basis[i][j];
    sd.class_index[c] = sd.classes.size();
    sd.classes.push_back(v);
    sd.in_shadow.push_back(is_shadow_vector(L, v));
    size_t i = 0;
    while (i < n && c[i] + 1 == sd.hnf[i][i]) c[i++] = 0;
    if (i == n) break;
    c[i] += 1;
  }
  return sd;
}

size_t shadow_class_of(const ShadowData& sd, const QVec& r) {
  QVec coords = q_vec_mat(r, sd.even_dual_inverse);
  ZVec c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!is_integer(coords[i]))
      throw std::invalid_argument("shadow_class_of: vector not in dual of even sublattice");
    c[i] = q_num(coords[i]);
  }
  auto it = sd.class_index.find(hnf_reduce(sd.hnf, std::move(c)));
  if (it == sd.class_index.end()) throw std::logic_error("shadow_class_of: class table incomplete");
  return it->second;
}

bool is_eutactic(const IntegralLattice& L, const EutacticStar& star) {
  size_t n = L.rank();
  QMat gq = to_q(L.gram);
  // rows[j] = (β(s_j,e_1),…,β(s_j,e_n))
  QMat rows;
  for (const QVec& s : star.vectors) {
    if (s.size() != n) throw std::invalid_argument("eutactic star: arity mismatch");
    rows.push_back(q_vec_mat(s, gq));
  }
  for (size_t i = 0; i < n; ++i) {
    QVec sum(n, 0);
    for (size_t j = 0; j < star.size(); ++j)
      for (size_t k = 0; k < n; ++k) sum[k] += rows[j][i] * star.vectors[j][k];
    for (size_t k = 0; k < n; ++k)
      if (sum[k] != (k == i ? Q(1) : Q(0))) return false;
  }
  return true;
}

StarSymmetry star_symmetry(const IntegralLattice& L, const EutacticStar& star, const ZMat& g) {
  if (!is_isometry(L, g)) throw std::invalid_argument("star_symmetry: not an isometry of the lattice");
  size_t N = star.size();
  for (const QVec& s : star.vectors)
    if (std::all_of(s.begin(), s.end(), [](const Q& x) { return x == 0; }))
      throw std::invalid_argument("star_symmetry: star vectors must be nonzero");
  StarSymmetry sym;
  sym.g = g;
  sym.perm.assign(N, 0);
  sym.eps.assign(N, 0);
  sym.sn = 1;
  std::vector<bool> used(N, false);
  for (size_t j = 0; j < N; ++j) {
    QVec img = act(star.vectors[j], g);
    QVec neg(img.size());
    for (size_t i = 0; i < img.size(); ++i) neg[i] = -img[i];
    size_t k = N;
    int e = 0;
    for (size_t cand = 0; cand < N && k == N; ++cand) {
      if (used[cand]) continue;
      if (star.vectors[cand] == img) {
        k = cand;
        e = 1;
      } else if (star.vectors[cand] == neg) {
        k = cand;
        e = -1;
      }
    }
    if (k == N)
      throw std::invalid_argument("star_symmetry: group element does not permute the star up to signs");
    used[k] = true;
    sym.perm[j] = k;
    sym.eps[j] = e;
    sym.sn *= e;
  }
  return sym;
}

// ---------------------------------------------------------------------------
// short vectors

namespace {

// q(v) = Σ_i d[i]·(v_i + Σ_{j>i} r[i][j]·v_j)², the recursive completion of
// squares of a positive definite A; throws otherwise.
struct LdlForm {
  QVec d;
  QMat r;
};

LdlForm ldl(QMat a) {
  size_t n = a.size();
  LdlForm f;
  f.d.assign(n, 0);
  f.r = q_identity(n);
  for (size_t i = 0; i < n; ++i) {
    f.d[i] = a[i][i];
    if (f.d[i] <= 0) throw std::domain_error("short vectors: form not positive definite");
    for (size_t j = i + 1; j < n; ++j) f.r[i][j] = a[i][j] / f.d[i];
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j; k < n; ++k) a[j][k] -= f.r[i][j] * f.d[i] * f.r[i][k];
  }
  return f;
}

void descend(const LdlForm& f, const QVec& u, const Q& two_bound, size_t level, std::vector<Z>& t,
             const Q& partial, const std::function<void(const std::vector<Z>&)>& emit) {
  if (level == (size_t)-1) {
    emit(t);
    return;
  }
  // center the walk at the real minimum of d·(t+mu)²
  Q mu = u[level];
  for (size_t j = level + 1; j < u.size(); ++j) mu += f.r[level][j] * (u[j] + Q(t[j]));
  Z c0 = q_floor(-mu);
  for (Z v = c0;; v -= 1) {
    Q term = f.d[level] * (Q(v) + mu) * (Q(v) + mu);
    if (partial + term >= two_bound) break;
    t[level] = v;
    descend(f, u, two_bound, level - 1, t, partial + term, emit);
  }
  for (Z v = c0 + 1;; v += 1) {
    Q term = f.d[level] * (Q(v) + mu) * (Q(v) + mu);
    if (partial + term >= two_bound) break;
    t[level] = v;
    descend(f, u, two_bound, level - 1, t, partial + term, emit);
  }
}

}  // namespace

std::vector<QVec> coset_short_vectors(const IntegralLattice& L, const QVec& w, const QMat& basis,
                                      const Q& bound) {
  size_t n = L.rank();
  if (basis.size() != n) throw std::invalid_argument("short vectors: basis must have full rank");
  QMat a(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = L.form(basis[i], basis[j]);
  LdlForm f = ldl(a);
  auto binv = q_inverse(basis);
  if (!binv) throw std::invalid_argument("short vectors: basis is singular");
  QVec u = q_vec_mat(w, *binv);

  std::vector<QVec> out;
  std::vector<Z> t(n, 0);
  descend(f, u, 2 * bound, n - 1, t, 0, [&](const std::vector<Z>& tt) {
    QVec x = w;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) x[j] += Q(tt[i]) * basis[i][j];
    out.push_back(std::move(x));
  });
  return out;
}

// ---------------------------------------------------------------------------
// coset theta series and the product identity

Series coset_theta(const IntegralLattice& L, const QVec& w, const std::vector<SignedMap>& G,
                   const Q& prec) {
  size_t n = L.rank();
  std::vector<SignedMap> maps = G;
  if (maps.empty()) maps.push_back({z_identity(n), 1});
  for (const SignedMap& m : maps)
    if (!is_isometry(L, m.g)) throw std::invalid_argument("coset_theta: map is not an isometry");

  QMat gq = to_q(L.gram);
  std::vector<QVec> points = coset_short_vectors(L, w, to_q(even_sublattice_basis(L)), prec);

  // collect exact terms first so the series scales can be fixed up front
  std::map<Q, std::map<QVec, Q>> acc;
  for (const QVec& x : points) {
    Q qe = L.norm(x);
    for (const SignedMap& m : maps) {
      QVec row = q_vec_mat(act(x, m.g), gq);
      acc[qe][std::move(row)] += m.sn;
    }
  }
  Z qden = 24, zden = 2;
  for (const auto& [qe, st] : acc) {
    mpz_lcm(qden.get_mpz_t(), qden.get_mpz_t(), q_den(qe).get_mpz_t());
    for (const auto& [row, c] : st)
      for (const Q& e : row) mpz_lcm(zden.get_mpz_t(), zden.get_mpz_t(), q_den(e).get_mpz_t());
  }
  Series res((int)n, to_long(qden), to_long(zden), prec);
  for (const auto& [qe, st] : acc)
    for (const auto& [row, c] : st) res.add_term(qe, row, c);
  return res;
}

PictureResult verify_picture(const IntegralLattice& L, const EutacticStar& star,
                             const std::vector<ZMat>& G, const Q& prec) {
  return verify_picture(L, star, G, prec, ExtremalityOptions{});
}

PictureResult verify_picture(const IntegralLattice& L, const EutacticStar& star,
                             const std::vector<ZMat>& G, const Q& prec,
                             const ExtremalityOptions& opts) {
  size_t n = L.rank(), N = star.size();
  if (!is_eutactic(L, star)) throw std::domain_error("verify_picture: star is not eutactic");
  ExtremalityReport rep = extremality(L, star, G, opts);
  if (!rep.extremal) throw std::domain_error("verify_picture: star is not G-extremal");

  // signs from a direction x meeting no wall β(s_j,·) = 0; powers of t work
  // because each wall equation is a nonzero polynomial in t
  QVec x(n);
  std::vector<int> eps;
  for (long t = 1; eps.empty(); ++t) {
    if (t > (long)(n * N + 1)) throw std::logic_error("verify_picture: no generic direction found");
    Q p = 1;
    for (size_t i = 0; i < n; ++i) x[i] = (p *= t);
    std::vector<int> trial;
    for (const QVec& s : star.vectors) {
      Q b = L.form(s, x);
      if (b == 0) break;
      trial.push_back(b > 0 ? 1 : -1);
    }
    if (trial.size() == N) eps = std::move(trial);
  }
  PictureResult res;
  res.w0.assign(n, 0);
  for (size_t j = 0; j < N; ++j)
    for (size_t i = 0; i < n; ++i) res.w0[i] += rat(eps[j], 2) * star.vectors[j][i];
  if (!is_shadow_vector(L, res.w0))
    throw std::logic_error("verify_picture: half star sum is not a shadow vector");
  bool beta_ok = L.norm(res.w0) == rat((long)n + 2 * (long)N, 24);

  QMat gq = to_q(L.gram);
  std::vector<Series> factors;
  factors.push_back(lift_nvars(Series::eta_power(Q((long)n - (long)N), prec), (int)n));
  for (const QVec& s : star.vectors) factors.push_back(Series::theta_vec(q_vec_mat(s, gq), (int)n, prec));
  res.lhs = mul_many(std::move(factors), prec);

  std::vector<SignedMap> maps;
  for (const StarSymmetry& sym : rep.symmetries) maps.push_back({sym.g, sym.sn});
  res.rhs = coset_theta(L, res.w0, maps, prec);

  res.gamma = 0;
  bool match = false;
  if (!res.rhs.is_zero()) {
    Q q0 = *res.rhs.q_order();
    auto lead = res.rhs.stratum(q0).front();
    res.gamma = res.lhs.coeff(q0, lead.first) / lead.second;
    match = series_equal(res.lhs, res.gamma * res.rhs);
  }
  res.ok = beta_ok && match && res.gamma != 0;
  return res;
}

ExtremalityReport extremality(const IntegralLattice& L, const EutacticStar& star,
                              const std::vector<ZMat>& G) {
  return extremality(L, star, G, ExtremalityOptions{});
}

ExtremalityReport extremality(const IntegralLattice& L, const EutacticStar& star,
                              const std::vector<ZMat>& G, const ExtremalityOptions& opts) {
  ExtremalityReport rep;
  rep.sd = shadow(L);
  QMat gq = to_q(L.gram);
  for (const QVec& s : star.vectors)
    for (const Q& e : q_vec_mat(s, gq))
      if (!is_integer(e)) throw std::invalid_argument("extremality: star vector outside the dual lattice");
  for (const ZMat& g : G) rep.symmetries.push_back(star_symmetry(L, star, g));

  size_t nc = rep.sd.classes.size();
  auto class_map = [&](size_t c, const ZMat& g) {
    return shadow_class_of(rep.sd, act(rep.sd.classes[c], g));
  };
  // walkers: a generating subset is enough for the orbit decomposition
  std::vector<ZMat> walkers = opts.generators;
  if (walkers.empty())
    for (const StarSymmetry& sym : rep.symmetries) walkers.push_back(sym.g);
  else
    for (const ZMat& g : walkers) star_symmetry(L, star, g);  // must preserve the star

  std::vector<bool> seen(nc, false);
  std::optional<LdlForm> ev_form;
  QMat ev_basis = to_q(rep.sd.even_basis);
  try {
    QMat a(L.rank(), QVec(L.rank()));
    for (size_t i = 0; i < L.rank(); ++i)
      for (size_t j = 0; j < L.rank(); ++j) a[i][j] = L.form(ev_basis[i], ev_basis[j]);
    ev_form = ldl(std::move(a));
  } catch (const std::domain_error&) {
    ev_form.reset();  // indefinite: orbits still make sense, minima do not
  }

  size_t shadow_qualifying = 0;
  for (size_t start = 0; start < nc; ++start) {
    if (seen[start]) continue;
    OrbitReport orbit;
    std::vector<size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      size_t c = queue.back();
      queue.pop_back();
      orbit.classes.push_back(c);
      for (const ZMat& g : walkers) {
        size_t d = class_map(c, g);
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
      }
    }
    std::sort(orbit.classes.begin(), orbit.classes.end());
    orbit.in_shadow = rep.sd.in_shadow[start];
    for (size_t c : orbit.classes)
      if (rep.sd.in_shadow[c] != orbit.in_shadow)
        throw std::logic_error("extremality: orbit mixes shadow and non-shadow classes");

    // Stabilizers along an orbit are conjugate and sn is a character, so one
    // representative decides; the orbit-stabilizer count doubles as a check
    // that the walkers really generate the group spanned by G.
    orbit.qualifies = true;
    size_t stab = 0;
    for (const StarSymmetry& sym : rep.symmetries)
      if (class_map(start, sym.g) == start) {
        ++stab;
        if (sym.sn == -1) orbit.qualifies = false;
      }
    if (!rep.symmetries.empty() && orbit.classes.size() * stab != rep.symmetries.size())
      throw std::logic_error("extremality: generators do not generate the symmetry group");

    if (ev_form && opts.with_minima) {
      // shortest vectors over all cosets of the orbit
      for (size_t c : orbit.classes) {
        Q bound = 1;
        std::vector<QVec> found;
        while (found.empty()) {
          found = coset_short_vectors(L, rep.sd.classes[c], ev_basis, bound);
          bound *= 2;
        }
        for (const QVec& v : found) {
          Q nv = L.norm(v);
          if (!orbit.min_norm || nv < *orbit.min_norm) {
            orbit.min_norm = nv;
            orbit.minimal_reps.clear();
          }
          if (nv == *orbit.min_norm) orbit.minimal_reps.push_back(v);
        }
      }
      std::sort(orbit.minimal_reps.begin(), orbit.minimal_reps.end());
      orbit.minimal_reps.erase(std::unique(orbit.minimal_reps.begin(), orbit.minimal_reps.end()),
                               orbit.minimal_reps.end());
    }
    if (orbit.in_shadow && orbit.qualifies) ++shadow_qualifying;
    rep.orbits.push_back(std::move(orbit));
  }
  rep.extremal = shadow_qualifying == 1;
  if (rep.extremal)
    for (size_t i = 0; i < rep.orbits.size(); ++i)
      if (rep.orbits[i].in_shadow && rep.orbits[i].qualifies) rep.qualifying_orbit = i;
  return rep;
}

}  // namespace tb
