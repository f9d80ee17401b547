#include <doctest.h>

#include "tb/series.hpp"

#include "frozen_series.h"

using namespace tb;

namespace {

// Rebuild a series from a frozen coefficient table (independent reference
// expansion) for comparison against the library's constructors.
Series from_frozen(const FrozenTerm* t, int len, int nvars, long qscale, long zscale,
                   const Q& prec) {
  Series s(nvars, qscale, zscale, prec);
  for (int i = 0; i < len; ++i) {
    std::vector<Q> z;
    if (nvars == 1) z.push_back(Q(t[i].znum, zscale));
    s.add_term(Q(t[i].qnum, qscale), z, parse_rational(t[i].coeff));
  }
  return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("eta matches the reference expansion") {
  Series ref = from_frozen(kEtaRef, kEtaRef_len, 0, 24, 2, 12);
  CHECK(series_equal(Series::eta(12), ref));
}

TEST_CASE("theta matches the reference expansion") {
  Series ref1 = from_frozen(kTheta1Ref, kTheta1Ref_len, 1, 24, 2, 8);
  CHECK(series_equal(Series::theta(1, 8), ref1));
  Series ref3 = from_frozen(kTheta3Ref, kTheta3Ref_len, 1, 24, 2, 8);
  CHECK(series_equal(Series::theta(3, 8), ref3));
}

TEST_CASE("quintuple series matches the reference expansion") {
  Series ref = from_frozen(kQuintuple2Ref, kQuintuple2Ref_len, 1, 24, 2, 8);
  CHECK(series_equal(Series::quintuple(2, 8), ref));
}

TEST_CASE("negative theta index flips the sign") {
  // theta is odd in z: theta_{-a} = -theta_a
  Series a = Series::theta_sum(3, 6);
  Series b = Series::theta_sum(-3, 6);
  CHECK(series_equal(b, -a));
  CHECK(series_equal(Series::theta_product(-3, 6), -Series::theta_product(3, 6)));
}

TEST_CASE("block product matches the reference expansion") {
  Q prec = 6;
  Series ref = from_frozen(kBlock12345Ref, kBlock12345Ref_len, 1, 24, 2, prec);

  // route 1: explicit inverse of eta^6
  Series eta6 = pow(lift_nvars(Series::eta_sum(prec + 1), 1), 6);
  Series blk = invert(eta6);
  for (long a = 1; a <= 5; ++a) blk = blk * Series::theta_sum(a, prec + 2);
  CHECK(series_equal(blk, ref));

  // route 2: fractional/negative eta power by binomial expansion
  Series blk2 = lift_nvars(Series::eta_power(-6, prec), 1);
  for (long a = 1; a <= 5; ++a) blk2 = blk2 * Series::theta_sum(a, prec + 2);
  CHECK(series_equal(blk2, ref));
}

TEST_CASE("eta_power with fractional exponent matches the reference") {
  Series ref(0, kEtaPow52Scale, 2, Q(4));
  for (int i = 0; i < kEtaPow52Ref_len; ++i)
    ref.add_term(Q(kEtaPow52Ref[i].qnum, kEtaPow52Scale), {}, parse_rational(kEtaPow52Ref[i].coeff));
  CHECK(series_equal(Series::eta_power(Q(5, 2), 4), ref));
  // independent route: (1+u)^e expansion on the finished eta series
  CHECK(series_equal(pow_rational(Series::eta_sum(4), Q(5, 2)), ref));
}

TEST_CASE("invert requires a monomial leading stratum") {
  Series t = Series::theta_sum(1, 4);
  CHECK_THROWS_AS(invert(t), std::invalid_argument);  // lead is zeta^(1/2)-zeta^(-1/2)
  Series eta2 = pow(Series::eta_sum(6), 2);
  Series inv = invert(eta2);
  CHECK(series_equal(eta2 * inv, Series::one(0)));
}

TEST_CASE("divide performs exact stratum division and rejects non-Laurent quotients") {
  Q prec = 5;
  Series t1 = Series::theta_sum(1, prec + 1);
  Series t2 = Series::theta_sum(2, prec + 1);
  CHECK(series_equal(divide(t1 * t2, t1), t2));
  // 1/theta has no Fourier-Laurent expansion: the leading stratum does not divide 1
  CHECK_THROWS_AS(divide(Series::one(1).with_prec(4), t1), std::domain_error);
}

TEST_CASE("specialize and u_scale reproduce rescaled thetas") {
  Q prec = 6;
  CHECK(series_equal(u_scale(Series::theta_sum(1, prec), 3), Series::theta_sum(3, prec)));
  Series tv = Series::theta_vec({Q(1), Q(2)}, 2, prec);
  CHECK(series_equal(specialize(tv, {1, 1}), Series::theta_sum(3, prec)));
  CHECK(series_equal(specialize(tv, {1, 0}), Series::theta_sum(1, prec)));
}

TEST_CASE("theta_vec handles half-integral directions") {
  Q prec = 4;
  Series tv = Series::theta_vec({Q(1, 2)}, 1, prec);
  CHECK(tv.zscale() % 4 == 0);
  // specializing z -> 2z recovers theta_1
  CHECK(series_equal(u_scale(tv, 2), Series::theta_sum(1, prec)));
}

TEST_CASE("periodicity of Fourier coefficients, including the half-integral sign") {
  CHECK(check_periodicity(Series::theta_sum(1, 10), Q(1, 2)));
  CHECK(check_periodicity(Series::quintuple_sum(1, 10), Q(3, 2)));
  CHECK(check_periodicity(Series::quintuple_sum(2, 10), Q(6)));
  // wrong index: the translates do not line up
  CHECK_FALSE(check_periodicity(Series::theta_sum(1, 10), Q(2)));
  // corrupt one coefficient and the relation must break
  Series bad = Series::theta_sum(1, 10);
  bad.add_term(Q(9, 8), {Q(3, 2)}, 1);
  CHECK_FALSE(check_periodicity(bad, Q(1, 2)));
}

TEST_CASE("multiplication contracts the window by the leading orders") {
  Series a = Series::eta_sum(5);              // ord 1/24, prec 5
  Series b = Series::eta_sum(7);              // ord 1/24, prec 7
  Series p = a * b;
  REQUIRE(p.qprec().has_value());
  CHECK(*p.qprec() == Q(5) + Q(1, 24));
  CHECK(*p.q_order() == Q(1, 12));
}

TEST_CASE("mul_many reaches the requested precision") {
  Q prec = 3;
  std::vector<Series> fs;
  for (long a = 1; a <= 4; ++a) fs.push_back(Series::theta_sum(a, prec));
  Series p = mul_many(fs, prec);
  REQUIRE(p.qprec().has_value());
  CHECK(*p.qprec() == prec);
  Series q = ((fs[0] * fs[1]) * fs[2]) * fs[3];
  CHECK(series_equal(p, q));
}

TEST_CASE("pow_rational agrees with repeated multiplication") {
  Series e = Series::eta_sum(6);
  CHECK(series_equal(pow_rational(e, 3), e * e * e));
  CHECK(series_equal(pow_rational(e, -2) * e * e, Series::one(0)));
}

TEST_CASE("json round trip preserves everything") {
  Series t = Series::quintuple_sum(2, Q(11, 2));
  Series back = series_from_json(to_json(t));
  CHECK(back.nvars() == t.nvars());
  CHECK(back.qscale() == t.qscale());
  CHECK(back.zscale() == t.zscale());
  REQUIRE(back.qprec().has_value());
  CHECK(*back.qprec() == Q(11, 2));
  CHECK(series_equal(back, t));
  CHECK(back.term_count() == t.term_count());
}

TEST_CASE("arity mismatches are rejected, lifts are explicit") {
  Series e = Series::eta_sum(4);
  Series t = Series::theta_sum(1, 4);
  CHECK_THROWS_AS(e * t, std::invalid_argument);
  CHECK_NOTHROW(lift_nvars(e, 1) * t);
}

TEST_CASE("coefficient access beyond the window throws") {
  Series e = Series::eta_sum(4);
  CHECK(e.coeff(Q(1, 24), {}) == 1);
  CHECK(e.coeff(Q(25, 24), {}) == -1);
  CHECK(e.coeff(Q(2, 24), {}) == 0);
  CHECK_THROWS_AS(e.coeff(Q(4), {}), std::out_of_range);
}

}  // TEST_SUITE
