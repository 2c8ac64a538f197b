#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reflekt/linalg.hpp"

using namespace reflekt;
using testutil::Draw;
using testutil::M;
using testutil::S;

namespace {

Matrix flip2x2() {
  Matrix f(4, 4);
  f.at(0, 0) = 1;
  f.at(1, 2) = 1;
  f.at(2, 1) = 1;
  f.at(3, 3) = 1;
  return f.with_legs({2, 2});
}

// adjugate-formula inverse for 3x3, the independent oracle
Matrix adjugate_inverse3(const Matrix& m) {
  auto co = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    Scalar minor = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    return ((i + j) % 2 == 0) ? minor : -minor;
  };
  Scalar det = m.at(0, 0) * co(0, 0) + m.at(0, 1) * co(0, 1) +
               m.at(0, 2) * co(0, 2);
  Matrix inv(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.at(i, j) = co(j, i) / det;
  return inv;
}

}  // namespace

TEST_CASE("kron") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));

  Matrix d1 = Matrix::diagonal({S("a"), S("z")});
  Matrix d2 = Matrix::diagonal({S("xi"), S("q")});
  CHECK(kron(d1, d2) ==
        Matrix::diagonal({S("a*xi"), S("a*q"), S("z*xi"), S("z*q")}));

  // kron(E12, E21): single 1 at row index 0*2+1, col 1*2+0
  Matrix e12 = M({{"0", "1"}, {"0", "0"}});
  Matrix e21 = M({{"0", "0"}, {"1", "0"}});
  Matrix k = kron(e12, e21);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(k.at(i, j) == ((i == 1 && j == 2) ? Scalar(1) : Scalar(0)));

  CHECK(kron(d1.with_legs({2}), d2).legs() == std::vector<int>{2, 2});
}

TEST_CASE("kron mixed product") {
  Draw d(21);
  Matrix a = d.matrix(2, {kVarZ}), b = d.matrix(2, {kVarV});
  Matrix c = d.matrix(2, {kVarXi}), e = d.matrix(2, {kVarZ, kVarV});
  CHECK(kron(a, b) * kron(c, e) == kron(a * c, b * e));
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("partial transpose") {
  Draw d(22);
  Matrix x = d.matrix(2, {kVarZ}).with_legs({2});
  Matrix y = d.matrix(2, {kVarXi}).with_legs({2});
  Matrix xy = kron(x, y);
  CHECK(partial_transpose(xy, 1) == kron(x, y.transpose()));
  CHECK(partial_transpose(partial_transpose(xy, 1), 1) == xy);
  CHECK(partial_transpose(xy, 0) == kron(x.transpose(), y));

  Matrix bare = d.matrix(4, {kVarZ});
  CHECK_THROWS_AS(partial_transpose(bare, 1), Error);
  CHECK_THROWS_AS(partial_transpose(xy, 2), Error);
}

TEST_CASE("partial trace") {
  Draw d(23);
  Matrix a = d.matrix(2, {kVarZ}).with_legs({2});
  Matrix b = d.matrix(2, {kVarXi}).with_legs({2});
  CHECK(partial_trace(kron(a, b), 1) == a.scaled(b.trace()).with_legs({2}));
  CHECK(partial_trace(kron(Matrix::identity(2), Matrix::identity(2))
                          .with_legs({2, 2}),
                      1) == Matrix::identity(2).scaled(Scalar(2)));
  CHECK(partial_trace(flip2x2(), 1) == Matrix::identity(2));
  CHECK(partial_trace(kron(a, b), 1).legs() == std::vector<int>{2});
}

TEST_CASE("paper trace and transpose identities") {
  // Tr_2(Phi Psi) = Tr_2(Phi^{t2} Psi^{t2}) and
  // (Phi (1 (x) f))^{t2} = (1 (x) f^t) Phi^{t2}
  Draw d(24);
  for (int it = 0; it < 3; ++it) {
    Matrix phi = d.matrix(4, {kVarZ}).with_legs({2, 2});
    Matrix psi = d.matrix(4, {kVarV}).with_legs({2, 2});
    CHECK(partial_trace(phi * psi, 1) ==
          partial_trace(partial_transpose(phi, 1) * partial_transpose(psi, 1),
                        1));
    Matrix f = d.matrix(2, {kVarXi});
    Matrix one_f = kron(Matrix::identity(2), f);
    CHECK(partial_transpose(phi * one_f, 1) ==
          kron(Matrix::identity(2), f.transpose()) *
              partial_transpose(phi, 1));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));

  Matrix k = Matrix::diagonal({S("1"), S("(xi - z^2)/(z^2*xi - 1)")});
  CHECK(inverse(k) == Matrix::diagonal({S("1"), S("(z^2*xi - 1)/(xi - z^2)")}));

  Draw d(25);
  for (int it = 0; it < 3; ++it) {
    Matrix m = d.matrix(3, {kVarZ, kVarV});
    m.at(0, 0) += Scalar(1);  // nudge away from the singular locus
    Matrix mi = inverse(m);
    CHECK(m * mi == Matrix::identity(3));
    CHECK(mi * m == Matrix::identity(3));
    CHECK(mi == adjugate_inverse3(m));
  }

  Matrix sing = M({{"1", "z"}, {"z", "z^2"}});
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Matrix::identity(2)).empty());
  CHECK(nullspace(Matrix(2, 2)).size() == 2);

  Matrix row = M({{"1", "-z"}});
  auto basis = nullspace(row);
  REQUIRE(basis.size() == 1);
  CHECK((row * basis[0]).is_zero());
  // span of (z, 1)^t
  CHECK(basis[0].at(0, 0) * Scalar(1) == basis[0].at(1, 0) * S("z"));

  Draw d(26);
  Matrix m = d.matrix(3, {kVarZ});
  for (auto& vcol : nullspace(m)) CHECK((m * vcol).is_zero());
}

TEST_CASE("leg permutation and embed") {
  Draw d(27);
  Matrix a = d.matrix(2, {kVarZ}).with_legs({2});
  Matrix b = d.matrix(2, {kVarXi}).with_legs({2});
  Matrix p = leg_permutation({2, 2}, {1, 0});
  CHECK(p * kron(a, b) * inverse(p) == kron(b, a));
  CHECK(p == flip2x2());

  // embed into the middle leg of a 3-leg space
  Matrix mid = embed(b, {2, 2, 2}, {1});
  CHECK(mid == kron(kron(Matrix::identity(2), b), Matrix::identity(2)));

  // two-leg operator on legs (0, 2)
  Matrix ab = kron(a, b);
  Matrix sp = embed(ab, {2, 2, 2}, {0, 2});
  Matrix direct(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int i0 = i >> 2, i1 = (i >> 1) & 1, i2 = i & 1;
      int j0 = j >> 2, j1 = (j >> 1) & 1, j2 = j & 1;
      direct.at(i, j) = (i1 == j1) ? ab.at(i0 * 2 + i2, j0 * 2 + j2)
                                   : Scalar(0);
    }
  CHECK(sp == direct);
}

TEST_CASE("substitute and derivative are entrywise") {
  Matrix m = M({{"z^2", "xi"}, {"z*xi", "1"}});
  CHECK(m.substitute({{kVarZ, S("2")}}) == M({{"4", "xi"}, {"2*xi", "1"}}));
  CHECK(m.derivative(kVarZ) == M({{"2*z", "0"}, {"xi", "0"}}));
  CHECK(m.trace() == S("z^2 + 1"));
}
