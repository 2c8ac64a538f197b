#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reflekt/cartan.hpp"

using namespace reflekt;

TEST_CASE("finite a1 datum") {
  auto b = build_datum(DatumKind::A1, {0});
  CHECK(b.datum.gcm == std::vector<std::vector<int>>{{2}});
  CHECK_FALSE(b.datum.affine);
  CHECK_FALSE(b.shift.has_value());
}

TEST_CASE("affine datum with tau = (01)") {
  auto b = build_datum(DatumKind::A1Affine, {1, 0});
  CHECK(b.datum.affine);
  CHECK(b.datum.delta_coeffs == std::vector<int>{1, 1});
  REQUIRE(b.shift.has_value());
  // tau-minimal: s = 1 on 0 and tau(0)
  CHECK(b.shift->s == std::vector<int>{1, 1});
  CHECK(b.shift->f == 2);
  CHECK(b.shift->hvee == 2);
  CHECK(b.shift->hvee_phi == 1);
  CHECK(b.shift->p == Scalar::qpow(-1));
}

TEST_CASE("affine datum with tau = id") {
  auto b = build_datum(DatumKind::A1Affine, {0, 1});
  REQUIRE(b.shift.has_value());
  CHECK(b.shift->s == std::vector<int>{1, 0});
  CHECK(b.shift->f == 1);
  CHECK(b.shift->hvee_phi == 2);
  CHECK(b.shift->p == Scalar::qpow(-2));
}

TEST_CASE("invalid tau rejected") {
  CHECK_THROWS_AS(build_datum(DatumKind::A1, {1}), Error);
  CHECK_THROWS_AS(build_datum(DatumKind::A1Affine, {0}), Error);
  CHECK_THROWS_AS(build_datum(DatumKind::A1Affine, {1, 1}), Error);
}

TEST_CASE("weight pairing") {
  // weights are integer multiples of omega; alpha = 2 omega
  CHECK(pairing(2, 2) == Rat(2));
  CHECK(pairing(1, 1) == Rat(1, 2));
  CHECK(pairing(kRho, 1) == Rat(1, 2));
  // bilinear and symmetric
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      CHECK(pairing(m, n) == pairing(n, m));
      CHECK(pairing(m + n, 1) == pairing(m, 1) + pairing(n, 1));
    }
}

TEST_CASE("dbar exponent table") {
  // tau = (01): exponent vanishes identically, so Dbar = Id downstream
  auto flip = build_datum(DatumKind::A1Affine, {1, 0});
  for (int m = -4; m <= 4; ++m) CHECK(dbar_exponent(flip.datum, m) == 0);
  // tau = id: reduces to the finite sovereign exponent -m
  auto id = build_datum(DatumKind::A1Affine, {0, 1});
  for (int m = -4; m <= 4; ++m) CHECK(dbar_exponent(id.datum, m) == -m);
}
