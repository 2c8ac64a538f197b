#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reflekt/reps.hpp"

using namespace reflekt;
using testutil::M;
using testutil::S;

TEST_CASE("spin ladders") {
  Rep half = spin_rep(1);
  CHECK(half.dim == 2);
  CHECK(half.at("E") == M({{"0", "1"}, {"0", "0"}}));
  CHECK(half.at("F") == M({{"0", "0"}, {"1", "0"}}));
  CHECK(half.at("K") == Matrix::diagonal({S("q"), S("1/q")}));
  CHECK(half.weight == std::vector<int>{1, -1});

  Rep zero = spin_rep(0);
  CHECK(zero.dim == 1);
  CHECK(zero.at("E").is_zero());
  CHECK(zero.at("K") == Matrix::identity(1));

  Rep one = spin_rep(2);
  CHECK(one.at("K") == Matrix::diagonal({S("q^2"), S("1"), S("1/q^2")}));
  // E e_k = [k] e_{k-1}, F e_k = [2j-k] e_{k+1}
  CHECK(one.at("E") == M({{"0", "1", "0"},
                          {"0", "0", "(q^2 + 1)/q"},
                          {"0", "0", "0"}}));
  CHECK(one.at("F") == M({{"0", "0", "0"},
                          {"(q^2 + 1)/q", "0", "0"},
                          {"0", "1", "0"}}));
  CHECK_NOTHROW(check_relations(one));
  CHECK_NOTHROW(check_relations(spin_rep(3)));
}

TEST_CASE("evaluation module") {
  auto bundle = build_datum(DatumKind::A1Affine, {1, 0});
  Rep ev = eval_rep(bundle, 1, Scalar(1));
  CHECK(ev.at("E0") == M({{"0", "0"}, {"1", "0"}}));
  CHECK(ev.at("F1") == M({{"0", "0"}, {"1", "0"}}));
  CHECK(ev.at("F0") == M({{"0", "1"}, {"0", "0"}}));
  CHECK(ev.at("E1") == M({{"0", "1"}, {"0", "0"}}));
  CHECK(ev.at("K1") == Matrix::diagonal({S("q"), S("1/q")}));
  CHECK(ev.at("K0") == Matrix::diagonal({S("1/q"), S("q")}));
  CHECK_NOTHROW(check_relations(ev));

  // grading exponents under tau-minimal s: +-1 on the affine ladder ops
  Scalar z = Scalar::variable(kVarZ);
  CHECK(shifted_gen(ev, "E0", z) == ev.at("E0").scaled(z));
  CHECK(shifted_gen(ev, "F0", z) == ev.at("F0").scaled(z.inverse()));
  CHECK(shifted_gen(ev, "K0", z) == ev.at("K0"));
  // z = 1 recovers the unshifted action
  CHECK(shifted_gen(ev, "E1", Scalar(1)) == ev.at("E1"));

  // the evaluation parameter scales the affine-node generators
  Scalar a = Scalar::variable(kVarA);
  Rep eva = eval_rep(bundle, 1, a);
  CHECK(eva.at("E0") == ev.at("E0").scaled(a));
  CHECK(eva.at("F0") == ev.at("F0").scaled(a.inverse()));
  CHECK_NOTHROW(check_relations(eva));
}

TEST_CASE("tensor product") {
  Rep half = spin_rep(1);
  Rep triv = trivial_rep(DatumKind::A1);

  // counit axiom: trivial (x) V acts as V
  Rep tv = tensor_rep(triv, half);
  for (const auto& name : generator_names(DatumKind::A1))
    CHECK(tv.at(name) == half.at(name));

  // Delta(E) = E (x) 1 + K (x) E
  Rep hh = tensor_rep(half, half);
  CHECK(hh.at("E") == kron(half.at("E"), Matrix::identity(2)) +
                          kron(half.at("K"), half.at("E")));
  CHECK(hh.at("F") == kron(half.at("F"), inverse(half.at("K"))) +
                          kron(Matrix::identity(2), half.at("F")));
  CHECK(hh.at("K") == kron(half.at("K"), half.at("K")));
  CHECK(hh.legs == std::vector<int>{2, 2});
  CHECK(hh.weight == std::vector<int>{2, 0, 0, -2});
  CHECK_NOTHROW(check_relations(hh));
}

TEST_CASE("duals") {
  Rep half = spin_rep(1);
  CHECK(dual_rep(trivial_rep(DatumKind::A1), DualSide::Left).dim == 1);

  // left dual: a acts by (S^{-1}(a))^t
  Rep dl = dual_rep(half, DualSide::Left);
  CHECK(dl.at("E") == M({{"0", "0"}, {"-q", "0"}}));
  CHECK(dl.at("K") == Matrix::diagonal({S("1/q"), S("q")}));
  CHECK_NOTHROW(check_relations(dl));
  Rep dr = dual_rep(half, DualSide::Right);
  CHECK(dr.at("E") == M({{"0", "0"}, {"-1/q", "0"}}));
  CHECK_NOTHROW(check_relations(dr));

  // double left dual is V up to conjugation by the sovereign D
  Rep ddl = dual_rep(dl, DualSide::Left);
  Matrix d = sovereign_ops(half, std::nullopt).D;
  for (const auto& name : generator_names(DatumKind::A1))
    CHECK(ddl.at(name) == inverse(d) * half.at(name) * d);
}

TEST_CASE("sovereign operators") {
  Rep half = spin_rep(1);
  auto ops = sovereign_ops(half, std::nullopt);
  CHECK(ops.D == Matrix::diagonal({S("1/q"), S("q")}));
  CHECK(ops.Dbar == Matrix::identity(2));
  CHECK(sovereign_ops(trivial_rep(DatumKind::A1), std::nullopt).D ==
        Matrix::identity(1));
  CHECK(sovereign_ops(spin_rep(2), std::nullopt).D ==
        Matrix::diagonal({S("1/q^2"), S("1"), S("q^2")}));

  // group-like across tensor products
  Rep hh = tensor_rep(half, half);
  CHECK(sovereign_ops(hh, std::nullopt).D == kron(ops.D, ops.D));

  // affine Dbar with tau = (01) is the identity
  auto bundle = build_datum(DatumKind::A1Affine, {1, 0});
  Rep ev = eval_rep(bundle, 1, Scalar(1));
  CHECK(sovereign_ops(ev, bundle.datum).Dbar == Matrix::identity(2));
}

TEST_CASE("relation guard trips on corrupted data") {
  Rep bad = spin_rep(1);
  bad.gen["E"] = bad.at("E").scaled(S("q"));
  CHECK_THROWS_AS(check_relations(bad), Error);
}
