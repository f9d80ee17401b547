#include <doctest.h>

#include "tb/blocks.hpp"
#include "tb/lattice.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace tb;

namespace {

ZMat zm(std::vector<std::vector<long>> rows) {
  ZMat m;
  for (auto& r : rows) m.push_back(ZVec(r.begin(), r.end()));
  return m;
}

QMat to_q(const ZMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = QVec(m[i].begin(), m[i].end());
  return r;
}

QVec act(const QVec& v, const ZMat& g) {
  QVec r(g[0].size(), 0);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * g[i][j];
  return r;
}

ZMat zmul(const ZMat& a, const ZMat& b) {
  ZMat r(a.size(), ZVec(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// the group generated by gens under multiplication (finite by assumption)
std::vector<ZMat> closure(std::vector<ZMat> gens) {
  std::set<ZMat> seen(gens.begin(), gens.end());
  std::vector<ZMat> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    ZMat g = queue.back();
    queue.pop_back();
    for (const ZMat& h : gens) {
      ZMat gh = zmul(g, h);
      if (seen.insert(gh).second) queue.push_back(gh);
    }
  }
  return {seen.begin(), seen.end()};
}

// exhaustive coset points over a coordinate box, for completeness checks
std::vector<QVec> brute_coset(const IntegralLattice& L, const QVec& w, const QMat& basis, long box,
                              const Q& bound) {
  size_t n = L.rank();
  std::vector<QVec> out;
  std::vector<long> t(n, -box);
  for (;;) {
    QVec x = w;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) x[j] += Q(t[i]) * basis[i][j];
    if (L.norm(x) < bound) out.push_back(x);
    size_t i = 0;
    while (i < n && t[i] == box) t[i++] = -box;
    if (i == n) break;
    ++t[i];
  }
  return out;
}

// rank one: the unimodular odd line
IntegralLattice line() { return IntegralLattice(zm({{1}})); }

// rank two: the odd square lattice and the even hexagonal one
IntegralLattice square() { return IntegralLattice(zm({{1, 0}, {0, 1}})); }
IntegralLattice hexagonal() { return IntegralLattice(zm({{2, 1}, {1, 2}})); }

// positive roots of the hexagonal lattice's root system in its coordinates:
// the rows of star·gram are (1,0), (0,1), (1,1)
EutacticStar hex_star() {
  return EutacticStar{{{rat(2, 3), rat(-1, 3)}, {rat(-1, 3), rat(2, 3)}, {rat(1, 3), rat(1, 3)}}};
}

// simple reflections of the hexagonal lattice; they generate a group of six
std::vector<ZMat> hex_weyl() { return closure({zm({{-1, 1}, {0, 1}}), zm({{1, 0}, {1, -1}})}); }

// signed coordinate permutations of the square lattice (order eight)
std::vector<ZMat> square_signed() { return closure({zm({{0, 1}, {1, 0}}), zm({{-1, 0}, {0, 1}})}); }

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("gram validation and basic invariants") {
    CHECK_THROWS_AS(IntegralLattice(zm({{1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(IntegralLattice(zm({{1, 2}, {3, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(IntegralLattice(zm({{1, 1}, {1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(IntegralLattice(ZMat{}), std::invalid_argument);

    CHECK(line().det() == 1);
    CHECK_FALSE(line().is_even());
    CHECK(hexagonal().det() == 3);
    CHECK(hexagonal().is_even());
    CHECK(square().norm({rat(1, 2), rat(1, 2)}) == rat(1, 4));
    CHECK(hexagonal().form({1, 0}, {0, 1}) == 1);
  }

  TEST_CASE("even sublattice of the line and its discriminant classes") {
    ShadowData sd = shadow(line());
    CHECK_FALSE(sd.even);
    CHECK(sd.even_basis == zm({{2}}));
    CHECK(sd.shadow_rep == QVec{rat(1, 2)});
    REQUIRE(sd.classes.size() == 4);
    // mixed-radix order on the dual basis (1/2): 0, 1/2, 1, 3/2
    CHECK(sd.classes[0] == QVec{0});
    CHECK(sd.classes[1] == QVec{rat(1, 2)});
    CHECK(sd.classes[2] == QVec{1});
    CHECK(sd.classes[3] == QVec{rat(3, 2)});
    CHECK(sd.in_shadow == std::vector<bool>{false, true, false, true});
    CHECK(sd.cyclic_factors == ZVec{4});

    CHECK(is_shadow_vector(line(), {rat(5, 2)}));
    CHECK_FALSE(is_shadow_vector(line(), {1}));
    CHECK(shadow_class_of(sd, {rat(5, 2)}) == 1);
    CHECK(shadow_class_of(sd, {rat(-1, 2)}) == 3);
    CHECK_THROWS_AS(shadow_class_of(sd, {rat(1, 4)}), std::invalid_argument);
  }

  TEST_CASE("shadow of the square lattice is (1/2,1/2) + Z^2") {
    IntegralLattice L = square();
    ShadowData sd = shadow(L);
    CHECK_FALSE(sd.even);
    CHECK(sd.shadow_rep == QVec{rat(1, 2), rat(1, 2)});
    REQUIRE(sd.classes.size() == 4);
    CHECK(sd.cyclic_factors == ZVec{2, 2});

    size_t shadows = 0;
    for (size_t i = 0; i < sd.classes.size(); ++i) {
      if (!sd.in_shadow[i]) continue;
      ++shadows;
      // every shadow class sits in (1/2,1/2) + Z^2
      CHECK(is_integer(sd.classes[i][0] - rat(1, 2)));
      CHECK(is_integer(sd.classes[i][1] - rat(1, 2)));
    }
    CHECK(shadows == 2);

    // the even sublattice really is even, and of index two
    for (const ZVec& row : sd.even_basis) CHECK(is_integer(L.norm(QVec(row.begin(), row.end()))));
    Q d = q_det(to_q(sd.even_basis));
    CHECK((d == 2 || d == -2));
  }

  TEST_CASE("even lattice: shadow equals the dual") {
    IntegralLattice L = hexagonal();
    ShadowData sd = shadow(L);
    CHECK(sd.even);
    CHECK(sd.even_basis == zm({{1, 0}, {0, 1}}));
    CHECK(sd.even_dual_basis == sd.dual_basis);
    REQUIRE(sd.classes.size() == 3);
    for (bool b : sd.in_shadow) CHECK(b);
    CHECK(sd.cyclic_factors == ZVec{3});
    CHECK(sd.shadow_rep == QVec{rat(1, 3), rat(1, 3)});

    // the Weyl vector lands in the same class as its translates
    CHECK(shadow_class_of(sd, {rat(1, 3), rat(1, 3)}) ==
          shadow_class_of(sd, {rat(-2, 3), rat(4, 3)}));
  }

  TEST_CASE("discriminant sizes: |dual/L| = |det| and class counts") {
    for (const ZMat& g : {zm({{1}}), zm({{1, 0}, {0, 1}}), zm({{2, 1}, {1, 2}}), zm({{2, 1}, {1, 4}}),
                          zm({{2, 0, 1}, {0, 3, 1}, {1, 1, 5}})}) {
      IntegralLattice L(g);
      Z dn = L.det();
      Z smith_prod = 1;
      for (const Z& d : smith_diagonal(g)) smith_prod *= d;
      CHECK(smith_prod == abs(dn));

      ShadowData sd = shadow(L);
      Z factor_prod = 1;
      for (const Z& d : sd.cyclic_factors) factor_prod *= d;
      CHECK(factor_prod == Z(sd.classes.size()));
      Z want_classes = sd.even ? Z(abs(dn)) : Z(4 * abs(dn));
      CHECK(Z(sd.classes.size()) == want_classes);
      // shadow classes: det for even lattices, twice that for odd ones
      size_t shadows = 0;
      for (bool b : sd.in_shadow) shadows += b;
      Z want_shadows = sd.even ? Z(abs(dn)) : Z(2 * abs(dn));
      CHECK(Z(shadows) == want_shadows);
      // representatives have denominators dividing twice the determinant
      Z twice_det = 2 * abs(dn);
      for (const QVec& v : sd.classes)
        for (const Q& x : v) CHECK(twice_det % q_den(x) == 0);
      CHECK(is_shadow_vector(L, sd.shadow_rep));
    }
  }

  TEST_CASE("eutactic stars") {
    CHECK(is_eutactic(line(), EutacticStar{{{1}}}));
    CHECK_FALSE(is_eutactic(line(), EutacticStar{{{2}}}));
    CHECK_FALSE(is_eutactic(line(), EutacticStar{{{1}, {1}}}));
    CHECK(is_eutactic(square(), EutacticStar{{{1, 0}, {0, 1}}}));
    CHECK_FALSE(is_eutactic(square(), EutacticStar{{{1, 0}}}));
    CHECK(is_eutactic(hexagonal(), hex_star()));

    // beta(x,x) = sum_j beta(s_j,x)^2 follows; spot-check one vector
    IntegralLattice L = hexagonal();
    QVec x{rat(5, 7), rat(-2, 3)};
    Q sum = 0;
    for (const QVec& s : hex_star().vectors) sum += L.form(s, x) * L.form(s, x);
    CHECK(sum == L.form(x, x));
  }

  TEST_CASE("star symmetries and the sn character") {
    StarSymmetry neg = star_symmetry(line(), EutacticStar{{{1}}}, zm({{-1}}));
    CHECK(neg.sn == -1);
    CHECK(star_symmetry(line(), EutacticStar{{{1}}}, zm({{1}})).sn == 1);
    CHECK_THROWS_AS(star_symmetry(line(), EutacticStar{{{1}}}, zm({{2}})), std::invalid_argument);

    // a sign flip of the square lattice does not preserve a one-vector star
    CHECK_THROWS_AS(star_symmetry(square(), EutacticStar{{{1, 0}}}, zm({{0, 1}, {1, 0}})),
                    std::invalid_argument);

    IntegralLattice L = hexagonal();
    EutacticStar s = hex_star();
    StarSymmetry refl = star_symmetry(L, s, zm({{-1, 1}, {0, 1}}));
    CHECK(refl.sn == -1);
    CHECK(refl.perm == std::vector<size_t>{0, 2, 1});
    CHECK(refl.eps == std::vector<int>{-1, 1, 1});

    // on a root star, sn agrees with the determinant, and it is a character
    std::vector<ZMat> weyl = hex_weyl();
    CHECK(weyl.size() == 6);
    std::vector<int> sn;
    for (const ZMat& g : weyl) {
      StarSymmetry sym = star_symmetry(L, s, g);
      CHECK(Q(sym.sn) == q_det(to_q(g)));
      sn.push_back(sym.sn);
    }
    for (size_t i = 0; i < weyl.size(); ++i)
      for (size_t j = 0; j < weyl.size(); ++j) {
        StarSymmetry prod = star_symmetry(L, s, zmul(weyl[i], weyl[j]));
        CHECK(prod.sn == sn[i] * sn[j]);
      }
  }

  TEST_CASE("extremality on the line: the sign group works, the trivial group fails") {
    IntegralLattice L = line();
    EutacticStar s{{{1}}};

    ExtremalityReport rep = extremality(L, s, {zm({{1}}), zm({{-1}})});
    CHECK(rep.extremal);
    REQUIRE(rep.orbits.size() == 3);
    REQUIRE(rep.qualifying_orbit.has_value());
    const OrbitReport& win = rep.orbits[*rep.qualifying_orbit];
    CHECK(win.classes == std::vector<size_t>{1, 3});  // {1/2, 3/2}
    CHECK(win.in_shadow);
    CHECK(win.qualifies);
    CHECK(win.min_norm == rat(1, 8));
    CHECK(win.minimal_reps == std::vector<QVec>{{rat(-1, 2)}, {rat(1, 2)}});
    for (size_t i = 0; i < rep.orbits.size(); ++i) {
      if (i == *rep.qualifying_orbit) continue;
      CHECK_FALSE(rep.orbits[i].in_shadow);
      CHECK_FALSE(rep.orbits[i].qualifies);
    }

    // without the sign the two shadow classes qualify separately
    CHECK_FALSE(extremality(L, s, {}).extremal);
    CHECK_FALSE(extremality(L, s, {zm({{1}})}).extremal);
  }

  TEST_CASE("extremality of the root star under the hexagonal Weyl group") {
    ExtremalityReport rep = extremality(hexagonal(), hex_star(), hex_weyl());
    CHECK(rep.extremal);
    REQUIRE(rep.orbits.size() == 2);
    REQUIRE(rep.qualifying_orbit.has_value());
    const OrbitReport& win = rep.orbits[*rep.qualifying_orbit];
    CHECK(win.classes.size() == 2);
    CHECK(win.min_norm == rat(1, 3));
    CHECK(win.minimal_reps.size() == 6);
    QVec rho{rat(1, 3), rat(1, 3)};
    CHECK(std::count(win.minimal_reps.begin(), win.minimal_reps.end(), rho) == 1);

    // the zero class is stabilized by reflections, so it cannot qualify
    for (const OrbitReport& orb : rep.orbits)
      if (orb.classes == std::vector<size_t>{0}) CHECK_FALSE(orb.qualifies);

    // a star vector outside the dual is rejected
    CHECK_THROWS_AS(extremality(hexagonal(), EutacticStar{{{rat(1, 2), 0}}}, hex_weyl()),
                    std::invalid_argument);
  }

  TEST_CASE("short vector enumeration matches box search") {
    IntegralLattice Z3(zm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    QMat id3 = to_q(zm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    QVec w{rat(1, 2), 0, rat(1, 3)};
    // |x_i| <= sqrt(2*3) + 1/2 < 3, so a box of 4 is exhaustive for bound 3
    auto fast = coset_short_vectors(Z3, w, id3, 3);
    auto slow = brute_coset(Z3, w, id3, 4, 3);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
    CHECK(!fast.empty());
    for (const QVec& x : fast) {
      CHECK(Z3.norm(x) < 3);
      for (size_t i = 0; i < 3; ++i) CHECK(is_integer(x[i] - w[i]));
    }

    IntegralLattice H = hexagonal();
    QMat id2 = to_q(zm({{1, 0}, {0, 1}}));
    QVec rho{rat(1, 3), rat(1, 3)};
    // x G x^t >= |x|^2, so |x_i| <= sqrt(10) + 1/3 < 4 for bound 5
    auto hf = coset_short_vectors(H, rho, id2, 5);
    auto hs = brute_coset(H, rho, id2, 5, 5);
    std::sort(hf.begin(), hf.end());
    std::sort(hs.begin(), hs.end());
    CHECK(hf == hs);

    CHECK(coset_short_vectors(Z3, w, id3, 0).empty());
    CHECK_THROWS_AS(coset_short_vectors(IntegralLattice(zm({{0, 1}, {1, 0}})), {0, 0}, id2, 2),
                    std::domain_error);
    CHECK_THROWS_AS(coset_short_vectors(Z3, w, id2, 1), std::invalid_argument);
  }

  TEST_CASE("coset theta of the line reproduces the odd theta series") {
    std::vector<SignedMap> pm{{zm({{1}}), 1}, {zm({{-1}}), -1}};
    Series f = coset_theta(line(), {rat(1, 2)}, pm, 10);
    CHECK(series_equal(f, Series::theta(1, 10)));
    CHECK_THROWS_AS(coset_theta(line(), {rat(1, 2)}, {{zm({{2}}), 1}}, 4), std::invalid_argument);
  }

  TEST_CASE("plain coset theta counts vectors with nonnegative weights") {
    Series f = coset_theta(square(), {rat(1, 2), rat(1, 2)}, {}, 6);
    for (const auto& [e, st] : f.terms())
      for (const auto& [key, c] : st) CHECK(c > 0);
    // beta = 1/4 stratum: only +-(1/2,1/2) lie in the even-sublattice coset
    CHECK(f.coeff(rat(1, 4), {rat(1, 2), rat(1, 2)}) == 1);
    CHECK(f.coeff(rat(1, 4), {rat(1, 2), rat(-1, 2)}) == 0);
    CHECK(f.stratum(rat(1, 4)).size() == 2);
  }

  TEST_CASE("hexagonal coset theta lives on exponents 1/3 + Z") {
    std::vector<SignedMap> maps;
    IntegralLattice L = hexagonal();
    for (const ZMat& g : hex_weyl()) maps.push_back({g, star_symmetry(L, hex_star(), g).sn});
    Series f = coset_theta(L, {rat(1, 3), rat(1, 3)}, maps, 5);
    CHECK(!f.is_zero());
    for (const auto& [e, st] : f.terms()) CHECK(is_integer(rat(e, f.qscale()) - rat(1, 3)));
  }

  TEST_CASE("product identity on the line is the triple product") {
    PictureResult pr = verify_picture(line(), EutacticStar{{{1}}}, {zm({{1}}), zm({{-1}})}, 10);
    CHECK(pr.ok);
    CHECK(pr.gamma == 1);
    CHECK(pr.w0 == QVec{rat(1, 2)});
    CHECK(series_equal(pr.lhs, Series::theta(1, 10)));
  }

  TEST_CASE("product identity for the hexagonal root star") {
    IntegralLattice L = hexagonal();
    PictureResult pr = verify_picture(L, hex_star(), hex_weyl(), 4);
    CHECK(pr.ok);
    CHECK(pr.w0 == QVec{rat(1, 3), rat(1, 3)});
    CHECK(L.norm(pr.w0) == rat(1, 3));  // (n + 2N)/24 = (2 + 6)/24

    // gamma is the reciprocal of the stabilizer of the class of w0
    CHECK(pr.gamma == rat(1, 3));
    ShadowData sd = shadow(L);
    size_t cls = shadow_class_of(sd, pr.w0), stab = 0;
    for (const ZMat& g : hex_weyl()) stab += shadow_class_of(sd, act(pr.w0, g)) == cls;
    CHECK(Q(1) == pr.gamma * (long)stab);

    // pulling both sides to one variable along (1,1) yields the first quark
    Series diag = specialize(pr.lhs, {1, 1});
    CHECK(series_equal(diag, expand(ThetaQuotient::pure({1, 1, 2}, -1), 4)));
    CHECK(series_equal(diag, specialize(pr.gamma * pr.rhs, {1, 1})));
  }

  TEST_CASE("product identity for the square lattice under signed permutations") {
    PictureResult pr = verify_picture(square(), EutacticStar{{{1, 0}, {0, 1}}}, square_signed(), 6);
    CHECK(pr.ok);
    CHECK(pr.w0 == QVec{rat(1, 2), rat(1, 2)});
    CHECK(square().norm(pr.w0) == rat(1, 4));  // (2 + 4)/24
    CHECK(pr.gamma == rat(1, 4));
    // the left side is theta(z1) theta(z2)
    Series tt = Series::theta_vec({1, 0}, 2, 6) * Series::theta_vec({0, 1}, 2, 6);
    CHECK(series_equal(pr.lhs, tt));
  }

  TEST_CASE("the picture needs eutacticity and extremality") {
    CHECK_THROWS_AS(verify_picture(line(), EutacticStar{{{2}}}, {zm({{1}}), zm({{-1}})}, 4),
                    std::domain_error);
    CHECK_THROWS_AS(verify_picture(line(), EutacticStar{{{1}}}, {zm({{1}})}, 4), std::domain_error);
  }
}
