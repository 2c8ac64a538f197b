#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reflekt/transfer.hpp"

using namespace reflekt;
using testutil::S;

namespace {

const DatumBundle& flip_bundle() {
  static DatumBundle b = build_datum(DatumKind::A1Affine, {1, 0});
  return b;
}

SatakeDatum affine_datum() {
  return affine_quasi_split(flip_bundle(), Scalar::variable(kVarXi));
}

SatakeDatum finite_datum() {
  return finite_a1(Scalar::variable(kVarGamma), Scalar::variable(kVarSigma));
}

Rep ev_half() { return eval_rep(flip_bundle(), 1, Scalar(1)); }

bool is_scalar_matrix(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j && m.at(i, j) != m.at(0, 0)) return false;
      if (i != j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("pure boundary scalar at N = 0") {
  auto t = build_transfer({}, ev_half(), affine_datum());
  REQUIRE(t.mat.rows() == 1);
  // Tr(Ktilde K) by hand from K^trig and its dual
  Scalar z = Scalar::variable(kVarZ);
  Scalar xi = Scalar::variable(kVarXi);
  Scalar qi2 = Scalar::qpow(-2);
  Scalar oracle = Scalar(1) + (xi - z * z) * (xi * qi2 * z * z - 1) /
                                  ((xi * z * z - 1) * (xi - qi2 * z * z));
  CHECK(t.mat.at(0, 0) == oracle);
}

TEST_CASE("trivial auxiliary gives the unit transfer") {
  auto t = build_transfer({ev_half()}, trivial_rep(DatumKind::A1Affine),
                          affine_datum());
  CHECK(t.mat == Matrix::identity(2));
  CHECK(t.boundary == "trivial");
}

TEST_CASE("transfer commutativity at N = 1") {
  auto t = build_transfer({ev_half()}, ev_half(), affine_datum());
  auto ty = at_argument(t, Scalar::variable(kVarY));
  CHECK(commutator_check(ty, t).is_zero());
  // same argument trivially commutes
  CHECK(commutator_check(t, t).is_zero());
}

TEST_CASE("transfer commutativity at N = 2, specialized xi") {
  std::map<int, Scalar> bind{{kVarXi, Scalar(Rat(5, 3))}};
  auto t = build_transfer_specialized({ev_half(), ev_half()}, ev_half(),
                                      affine_datum(), bind);
  CHECK(t.mat.rows() == 4);
  auto ty = at_argument(t, Scalar::variable(kVarY));
  CHECK(commutator_check(ty, t).is_zero());
}

TEST_CASE("shape guard") {
  auto t1 = build_transfer({ev_half()}, ev_half(), affine_datum());
  auto t2 = build_transfer({}, ev_half(), affine_datum());
  CHECK_THROWS_AS(commutator_check(t1, t2), Error);
}

TEST_CASE("multiplicativity") {
  auto s = affine_datum();
  Rep v = ev_half(), w = ev_half();

  auto res = multiplicativity_check(v, w, {ev_half()}, s);
  CHECK(res.residual.is_zero());
  // the extracted scale is the crossing scale at argument yz
  Scalar yz = Scalar::variable(kVarY) * Scalar::variable(kVarZ);
  Scalar q2 = Scalar::qpow(2), q4 = Scalar::qpow(4);
  Scalar u2 = yz * yz;
  Scalar expected = (u2 - q4) * (u2 - 1) / ((u2 - q2) * (u2 - q2));
  CHECK(res.scale == expected);
  CHECK(res.tensor == res.product.scaled(res.scale));
}

TEST_CASE("multiplicativity with the unit auxiliary") {
  auto res = multiplicativity_check(ev_half(), trivial_rep(DatumKind::A1Affine),
                                    {ev_half()}, affine_datum());
  CHECK(res.residual.is_zero());
  CHECK(res.scale == Scalar(1));
}

TEST_CASE("tensor order swap") {
  // Grothendieck-ring commutativity: swapping the auxiliary factors is the
  // relabeling y <-> z of the tensor transfer
  auto s = affine_datum();
  auto ab = multiplicativity_check(ev_half(), ev_half(), {ev_half()}, s);
  std::map<int, Scalar> swap{{kVarY, Scalar::variable(kVarZ)},
                             {kVarZ, Scalar::variable(kVarY)}};
  CHECK(ab.tensor == ab.tensor.substitute(swap));
}

TEST_CASE("gauge invariance") {
  // K -> g K, Ktilde -> gt Ktilde multiplies t by g gt and keeps the
  // family commutative
  auto s = affine_datum();
  Rep v = ev_half(), w = ev_half();
  auto k = solve_spectral_K(w, s);
  auto so = sovereign_ops(w, flip_bundle().datum);
  auto kt = dual_K(k, so.Dbar, flip_bundle().shift->p);

  Scalar z = Scalar::variable(kVarZ);
  Scalar g = (z * z + 2) / 3;
  Scalar gt = (Scalar(2) * z * z + 5) / 7;
  SpectralOperator kg = k, ktg = kt;
  kg.mat = kg.mat.scaled(g);
  ktg.mat = ktg.mat.scaled(gt);

  auto t = build_transfer_from({v}, w, k, kt);
  auto tg = build_transfer_from({v}, w, kg, ktg);
  CHECK(tg.mat == t.mat.scaled(g * gt));
  CHECK(commutator_check(at_argument(tg, Scalar::variable(kVarY)), tg)
            .is_zero());
}

TEST_CASE("hamiltonian structure at N = 2") {
  auto s = affine_datum();
  Matrix h = hamiltonian({ev_half(), ev_half()}, s);
  REQUIRE(h.rows() == 4);
  CHECK_FALSE(is_scalar_matrix(h));
  CHECK(h == h.transpose());
  CHECK(h.trace().is_zero());
  // nearest-neighbour exchange: off-diagonal support is exactly the
  // middle-block spin flip
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j)
        CHECK(h.at(i, j).is_zero() == !((i == 1 && j == 2) ||
                                        (i == 2 && j == 1)));
  CHECK_FALSE(h.at(1, 2).is_zero());
}

TEST_CASE("hamiltonian commutes with the transfer family") {
  auto s = affine_datum();
  Matrix h = hamiltonian({ev_half(), ev_half()}, s);
  auto t = build_transfer({ev_half(), ev_half()}, ev_half(), s);
  CHECK((h * t.mat - t.mat * h).is_zero());
}

TEST_CASE("single site hamiltonian is diagonal") {
  Matrix h = hamiltonian({ev_half()}, affine_datum());
  REQUIRE(h.rows() == 2);
  CHECK(h.at(0, 1).is_zero());
  CHECK(h.at(1, 0).is_zero());
}

TEST_CASE("finite dualK transfer is trivial") {
  auto s = finite_datum();
  Rep half = spin_rep(1), one = spin_rep(2);

  Matrix t = finite_transfer(half, half, s, FiniteVariant::DualK);
  CHECK(t == Matrix::identity(2).scaled(S("q + 1/q")));
  // the scalar is Tr(D_V), also on a larger probe
  Matrix t2 = finite_transfer(one, half, s, FiniteVariant::DualK);
  CHECK(t2 == Matrix::identity(3).scaled(S("q + 1/q")));

  Matrix t3 = finite_transfer(half, one, s, FiniteVariant::DualK);
  CHECK(t3 == Matrix::identity(2).scaled(S("(q^4 + q^2 + 1)/q^2")));
}

TEST_CASE("kolb variant is central but not scalar") {
  auto s = finite_datum();
  Rep half = spin_rep(1), one = spin_rep(2);
  for (const Rep* probe : {&half, &one}) {
    Matrix t = finite_transfer(*probe, half, s, FiniteVariant::Kolb);
    CHECK_FALSE(is_scalar_matrix(t));
    for (const auto& [name, b] : coideal_action(s, *probe, false))
      CHECK((t * b - b * t).is_zero());
  }
}

TEST_CASE("balance data") {
  auto triv = balance_data(trivial_rep(DatumKind::A1));
  CHECK(triv.c == Scalar(1));
  CHECK(triv.u == Matrix::identity(1));

  Rep half = spin_rep(1);
  auto bd = balance_data(half);
  CHECK(bd.c == Scalar::vpow(-3));
  CHECK(bd.u == Matrix::diagonal({S("v"), S("v^5")}));
  CHECK(bd.b == Matrix::identity(2).scaled(bd.c));

  // Ad(u) realizes the square of the antipode on generators
  Matrix e = half.at("E"), f = half.at("F"), k = half.at("K");
  Matrix ui = inverse(bd.u);
  CHECK(bd.u * e * ui == inverse(k) * e * k);
  CHECK(bd.u * f * ui == inverse(k) * f * k);
  CHECK(bd.u * k * ui == k);

  // spin 1: c = q^{-(lambda, lambda + 2 rho)} with (2w, 2w + 2w) = 4
  CHECK(balance_data(spin_rep(2)).c == Scalar::qpow(-4));
}
