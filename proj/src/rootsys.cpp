#include "tb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace tb {

namespace {

QVec unit(size_t dim, size_t i, const Q& c = 1) {
  QVec v(dim, 0);
  v[i] = c;
  return v;
}

// x - 2(x,f)/(f,f) f; the ratio is scale independent
QVec reflect(const QVec& x, const QVec& f) {
  Q c = 2 * dot(x, f) / dot(f, f);
  QVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= c * f[i];
  return r;
}

std::vector<QVec> simple_roots(char family, int rank) {
  std::vector<QVec> f;
  switch (family) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("root system: A needs rank >= 1");
      for (int i = 0; i + 1 <= rank; ++i) {
        QVec v(rank + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        f.push_back(v);
      }
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("root system: B needs rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, 0);
        v[i] = 1;
        v[i + 1] = -1;
        f.push_back(v);
      }
      f.push_back(unit(rank, rank - 1));
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("root system: C needs rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, 0);
        v[i] = 1;
        v[i + 1] = -1;
        f.push_back(v);
      }
      f.push_back(unit(rank, rank - 1, 2));
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("root system: D needs rank >= 3");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, 0);
        v[i] = 1;
        v[i + 1] = -1;
        f.push_back(v);
      }
      {
        QVec v(rank, 0);
        v[rank - 2] = 1;
        v[rank - 1] = 1;
        f.push_back(v);
      }
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("root system: E needs rank 6, 7 or 8");
      QVec v1(8, rat(-1, 2));
      v1[0] = rat(1, 2);
      v1[7] = rat(1, 2);
      f.push_back(v1);
      QVec v2(8, 0);
      v2[0] = 1;
      v2[1] = 1;
      f.push_back(v2);
      for (int i = 0; i + 3 <= rank; ++i) {
        QVec v(8, 0);
        v[i] = -1;
        v[i + 1] = 1;
        f.push_back(v);
      }
      break;
    }
    case 'F': {
      if (rank != 4) throw std::invalid_argument("root system: F needs rank 4");
      QVec v1(4, 0), v2(4, 0);
      v1[1] = 1;
      v1[2] = -1;
      v2[2] = 1;
      v2[3] = -1;
      f.push_back(v1);
      f.push_back(v2);
      f.push_back(unit(4, 3));
      f.push_back({rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)});
      break;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("root system: G needs rank 2");
      f.push_back({1, -1, 0});
      f.push_back({-2, 1, 1});
      break;
    }
    default:
      throw std::invalid_argument("root system: unknown family letter");
  }
  return f;
}

RootComponent build_component(char family, int rank) {
  RootComponent c;
  c.family = family;
  c.rank = rank;
  c.simple = simple_roots(family, rank);

  // all roots: the simple ones are closed up under the simple reflections
  std::set<QVec> roots(c.simple.begin(), c.simple.end());
  std::vector<QVec> queue(c.simple.begin(), c.simple.end());
  while (!queue.empty()) {
    QVec r = queue.back();
    queue.pop_back();
    for (const QVec& f : c.simple) {
      QVec img = reflect(r, f);
      if (roots.insert(img).second) queue.push_back(img);
    }
  }

  // normalize the ambient form so that short roots have square length two
  Q min_len = 0;
  for (const QVec& r : roots)
    if (min_len == 0 || dot(r, r) < min_len) min_len = dot(r, r);
  c.form_scale = 2 / min_len;

  size_t n = c.simple.size();
  QMat m(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = c.form_scale * dot(c.simple[i], c.simple[j]);
  auto minv_opt = q_inverse(m);
  if (!minv_opt) throw std::logic_error("root system: dependent simple roots");
  const QMat& minv = *minv_opt;

  // expansion over the simple basis; integral with one sign throughout
  std::vector<std::pair<ZVec, QVec>> pos;
  for (const QVec& r : roots) {
    QVec rhs(n);
    for (size_t j = 0; j < n; ++j) rhs[j] = c.form_scale * dot(r, c.simple[j]);
    QVec coef = q_vec_mat(rhs, minv);
    bool negative = false;
    ZVec row(n);
    for (size_t j = 0; j < n; ++j) {
      if (!is_integer(coef[j])) throw std::logic_error("root system: non-integral root expansion");
      if (coef[j] < 0) negative = true;
      row[j] = q_num(coef[j]);
    }
    if (negative) {
      for (size_t j = 0; j < n; ++j)
        if (row[j] > 0) throw std::logic_error("root system: mixed-sign root expansion");
      continue;
    }
    pos.push_back({std::move(row), r});
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    Z ha = 0, hb = 0;
    for (const Z& x : a.first) ha += x;
    for (const Z& x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  for (auto& [row, r] : pos) {
    c.gamma.push_back(row);
    c.positive.push_back(r);
  }

  c.h = 0;
  for (const QVec& r : c.positive) c.h += c.form_scale * dot(r, r);
  c.h /= (long)n;

  c.weyl_ambient.assign(c.simple[0].size(), 0);
  for (const QVec& r : c.positive)
    for (size_t i = 0; i < r.size(); ++i) c.weyl_ambient[i] += r[i] / 2;

  c.gram.assign(n, ZVec(n, 0));
  for (const ZVec& row : c.gamma)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) c.gram[i][j] += row[i] * row[j];

  // simple reflection k on row vectors of Z^F: row k of the identity becomes
  // delta_{kj} - C_{jk} with the Cartan integers C_{jk} = 2(f_j,f_k)/(f_k,f_k)
  for (size_t k = 0; k < n; ++k) {
    ZMat g(n, ZVec(n, 0));
    for (size_t i = 0; i < n; ++i) g[i][i] = 1;
    for (size_t j = 0; j < n; ++j) {
      Q cartan = 2 * dot(c.simple[j], c.simple[k]) / dot(c.simple[k], c.simple[k]);
      if (!is_integer(cartan)) throw std::logic_error("root system: non-integral Cartan number");
      g[k][j] = (j == k ? 1 : 0) - q_num(cartan);
    }
    c.reflections.push_back(std::move(g));
  }

  c.weyl_coords.resize(n);
  for (size_t j = 0; j < n; ++j)
    c.weyl_coords[j] = c.form_scale * dot(c.simple[j], c.weyl_ambient) / c.h;
  return c;
}

}  // namespace

std::string RootComponent::name() const { return family + std::to_string(rank); }

Q ambient_form(const RootComponent& c, const QVec& x, const QVec& y) {
  return c.form_scale * dot(x, y);
}

int RootSystemData::rank() const {
  int n = 0;
  for (const RootComponent& c : components) n += c.rank;
  return n;
}

long RootSystemData::positive_count() const {
  long n = 0;
  for (const RootComponent& c : components) n += (long)c.positive.size();
  return n;
}

std::string RootSystemData::name() const {
  std::string s;
  for (const RootComponent& c : components) {
    if (!s.empty()) s += '+';
    s += c.name();
  }
  return s;
}

ZMat RootSystemData::gamma() const {
  long n = rank(), rows = positive_count();
  ZMat g((size_t)rows, ZVec((size_t)n, 0));
  size_t r0 = 0, c0 = 0;
  for (const RootComponent& c : components) {
    for (size_t i = 0; i < c.gamma.size(); ++i)
      for (size_t j = 0; j < c.gamma[i].size(); ++j) g[r0 + i][c0 + j] = c.gamma[i][j];
    r0 += c.gamma.size();
    c0 += (size_t)c.rank;
  }
  return g;
}

ZMat RootSystemData::gram() const {
  size_t n = (size_t)rank();
  ZMat g(n, ZVec(n, 0));
  size_t c0 = 0;
  for (const RootComponent& c : components) {
    for (size_t i = 0; i < (size_t)c.rank; ++i)
      for (size_t j = 0; j < (size_t)c.rank; ++j) g[c0 + i][c0 + j] = c.gram[i][j];
    c0 += (size_t)c.rank;
  }
  return g;
}

IntegralLattice RootSystemData::lattice() const { return IntegralLattice(gram()); }

std::vector<QVec> RootSystemData::star() const {
  size_t n = (size_t)rank();
  std::vector<QVec> s;
  size_t c0 = 0;
  for (const RootComponent& c : components) {
    QMat gq(c.gram.size(), QVec(c.gram.size()));
    for (size_t i = 0; i < c.gram.size(); ++i)
      for (size_t j = 0; j < c.gram.size(); ++j) gq[i][j] = Q(c.gram[i][j]);
    auto inv = q_inverse(gq);
    if (!inv) throw std::logic_error("root system: degenerate lattice Gram matrix");
    const QMat& ginv = *inv;
    for (const ZVec& grow : c.gamma) {
      QVec qrow(grow.begin(), grow.end());
      QVec local = q_vec_mat(qrow, ginv);
      QVec v(n, 0);
      for (size_t j = 0; j < local.size(); ++j) v[c0 + j] = local[j];
      s.push_back(std::move(v));
    }
    c0 += (size_t)c.rank;
  }
  return s;
}

std::vector<ZMat> RootSystemData::reflections() const {
  size_t n = (size_t)rank();
  std::vector<ZMat> out;
  size_t c0 = 0;
  for (const RootComponent& c : components) {
    for (const ZMat& r : c.reflections) {
      ZMat g(n, ZVec(n, 0));
      for (size_t i = 0; i < n; ++i) g[i][i] = 1;
      for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) g[c0 + i][c0 + j] = r[i][j];
      out.push_back(std::move(g));
    }
    c0 += (size_t)c.rank;
  }
  return out;
}

QVec RootSystemData::weyl_coords() const {
  QVec w;
  for (const RootComponent& c : components) w.insert(w.end(), c.weyl_coords.begin(), c.weyl_coords.end());
  return w;
}

Q RootSystemData::weight() const { return rat(rank(), 2); }

long RootSystemData::character() const {
  long l = (rank() + 2 * positive_count()) % 24;
  return l < 0 ? l + 24 : l;
}

RootSystemData build_root_system(const std::string& label) {
  RootSystemData R;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t end = label.find('+', pos);
    if (end == std::string::npos) end = label.size();
    std::string token = label.substr(pos, end - pos);
    if (token.size() < 2) throw std::invalid_argument("root system: bad label '" + token + "'");
    char family = (char)std::toupper((unsigned char)token[0]);
    int rank = 0;
    for (size_t i = 1; i < token.size(); ++i) {
      if (!std::isdigit((unsigned char)token[i]))
        throw std::invalid_argument("root system: bad label '" + token + "'");
      rank = rank * 10 + (token[i] - '0');
      if (rank > 64) throw std::invalid_argument("root system: rank too large");
    }
    R.components.push_back(build_component(family, rank));
    pos = end + 1;
  }
  if (R.components.empty()) throw std::invalid_argument("root system: empty label");
  return R;
}

Q h_from_highest_root(const RootComponent& c) {
  const QVec& alpha = c.positive.back();  // sorted by height; the top is unique
  QVec aw = alpha;
  for (size_t i = 0; i < aw.size(); ++i) aw[i] += c.weyl_ambient[i];
  return (ambient_form(c, aw, aw) - ambient_form(c, c.weyl_ambient, c.weyl_ambient)) / 2;
}

WeylGroup weyl_group(const RootSystemData& R, size_t cap) {
  std::vector<ZMat> gens = R.reflections();
  size_t n = (size_t)R.rank();
  ZMat id(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;

  std::set<ZMat> seen{id};
  std::vector<ZMat> queue{id};
  while (!queue.empty()) {
    ZMat g = queue.back();
    queue.pop_back();
    for (const ZMat& r : gens) {
      ZMat gr(n, ZVec(n, 0));
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
          for (size_t j = 0; j < n; ++j) gr[i][j] += g[i][k] * r[k][j];
      if (seen.size() >= cap && !seen.count(gr))
        throw std::length_error("weyl_group: closure exceeds the cap");
      if (seen.insert(gr).second) queue.push_back(gr);
    }
  }
  WeylGroup W;
  W.elements.assign(seen.begin(), seen.end());
  for (const ZMat& g : W.elements) {
    QMat qg(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) qg[i][j] = Q(g[i][j]);
    Q d = q_det(qg);
    if (d != 1 && d != -1) throw std::logic_error("weyl_group: element with determinant != ±1");
    W.sn.push_back(d == 1 ? 1 : -1);
  }
  return W;
}

ThetaQuotient theta_block(const RootSystemData& R, const std::vector<long>& a) {
  if ((long)a.size() != R.rank())
    throw std::invalid_argument("theta_block: spot vector length != rank");
  for (long x : a)
    if (x < 1) throw std::invalid_argument("theta_block: spot entries must be positive");
  std::vector<long> indices;
  size_t c0 = 0;
  for (const RootComponent& c : R.components) {
    for (const ZVec& row : c.gamma) {
      Z idx = 0;
      for (size_t j = 0; j < row.size(); ++j) idx += row[j] * a[c0 + j];
      indices.push_back(to_long(Q(idx)));
    }
    c0 += (size_t)c.rank;
  }
  return ThetaQuotient::pure(indices, Q(R.rank() - R.positive_count()));
}

RootFamilyRow family_row(const RootSystemData& R) {
  RootFamilyRow row;
  row.name = R.name();
  row.positive = R.positive_count();
  row.eta_nu = row.positive - R.rank();
  row.weight = R.weight();
  row.character = R.character();
  if (R.rank() <= 8) {
    for (const ZVec& g : R.gamma()) {
      std::string form;
      for (size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        if (!form.empty()) form += '+';
        if (g[j] != 1) form += g[j].get_str();
        form += (char)('a' + j);
      }
      row.index_forms.push_back(std::move(form));
    }
  }
  return row;
}

namespace {

QMat to_qmat(const ZMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = QVec(m[i].begin(), m[i].end());
  return r;
}

// x in L_ev: integral coordinates of integral norm
bool in_even_sublattice(const IntegralLattice& L, const QVec& x) {
  for (const Q& e : x)
    if (!is_integer(e)) return false;
  return is_integer(L.norm(x));
}

QVec mat_act(const QVec& v, const ZMat& g) {
  QVec r(g[0].size(), 0);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * g[i][j];
  return r;
}

}  // namespace

MacdonaldResult macdonald_verify(const RootSystemData& R, const Q& prec, bool full_weyl,
                                 size_t cap, size_t trials, unsigned long seed) {
  MacdonaldResult res;
  res.ok = true;
  res.gamma = 1;
  res.group_size = 1;
  res.mode = full_weyl ? "full_weyl" : "specialized";
  res.trials = full_weyl ? 0 : trials;
  std::mt19937_64 rng(seed);

  for (const RootComponent& comp : R.components) {
    RootSystemData one;
    one.components.push_back(comp);
    IntegralLattice L(one.gram());
    EutacticStar star{one.star()};
    WeylGroup W = weyl_group(one, cap);
    res.group_size *= W.size();

    long n = comp.rank, N = (long)comp.positive.size();
    Q absprec = rat(n + 2 * N, 24) + prec;

    if (full_weyl) {
      ExtremalityOptions opts;
      opts.generators = one.reflections();
      opts.with_minima = false;
      PictureResult pr = verify_picture(L, star, W.elements, absprec, opts);
      res.ok = res.ok && pr.ok;
      res.gamma *= pr.gamma;
    } else {
      QVec w0 = comp.weyl_coords;
      if (!is_shadow_vector(L, w0))
        throw std::logic_error("macdonald_verify: Weyl vector outside the shadow");
      size_t stab = 0;
      for (const ZMat& g : W.elements) {
        QVec d = mat_act(w0, g);
        for (size_t i = 0; i < d.size(); ++i) d[i] -= w0[i];
        if (in_even_sublattice(L, d)) ++stab;
      }
      Q gamma_c = rat(1, (long)stab);
      res.gamma *= gamma_c;

      // signed exponent rows shared by every pullback: for each coset point x
      // and group element g the term sn(g) q^{β(x)} ζ^{β(gx,a)}
      QMat gq(L.rank(), QVec(L.rank()));
      for (size_t i = 0; i < L.rank(); ++i)
        for (size_t j = 0; j < L.rank(); ++j) gq[i][j] = Q(L.gram[i][j]);
      std::vector<QVec> points =
          coset_short_vectors(L, w0, to_qmat(even_sublattice_basis(L)), absprec);
      struct Row {
        Q qexp;
        int sn;
        QVec zrow;
      };
      std::vector<Row> rows;
      rows.reserve(points.size() * W.size());
      for (const QVec& x : points) {
        Q qe = L.norm(x);
        for (size_t gi = 0; gi < W.size(); ++gi)
          rows.push_back({qe, W.sn[gi], q_vec_mat(mat_act(x, W.elements[gi]), gq)});
      }

      for (size_t t = 0; t < trials; ++t) {
        std::vector<long> a((size_t)n);
        for (long& x : a) x = 1 + (long)(rng() % 8);
        Series lhs = expand(theta_block(one, a), absprec);

        std::map<Q, std::map<Q, Q>> acc;
        for (const Row& r : rows) {
          Q ze = 0;
          for (size_t j = 0; j < r.zrow.size(); ++j) ze += r.zrow[j] * a[j];
          acc[r.qexp][ze] += r.sn;
        }
        Z qden = 24, zden = 2;
        for (const auto& [qe, st] : acc) {
          mpz_lcm(qden.get_mpz_t(), qden.get_mpz_t(), q_den(qe).get_mpz_t());
          for (const auto& [ze, cc] : st)
            mpz_lcm(zden.get_mpz_t(), zden.get_mpz_t(), q_den(ze).get_mpz_t());
        }
        Series rhs(1, to_long(Q(qden)), to_long(Q(zden)), absprec);
        for (const auto& [qe, st] : acc)
          for (const auto& [ze, cc] : st)
            if (cc != 0) rhs.add_term(qe, {ze}, cc);
        res.ok = res.ok && series_equal(lhs, gamma_c * rhs);
      }
    }
  }
  return res;
}

}  // namespace tb
