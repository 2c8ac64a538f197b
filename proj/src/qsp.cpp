#include "reflekt/qsp.hpp"

#include "reflekt/rmatrix.hpp"

namespace reflekt {

SatakeDatum affine_quasi_split(const DatumBundle& bundle, const Scalar& xi) {
  if (!bundle.datum.affine || bundle.datum.tau[0] != 1)
    throw Error(ErrorCode::InvalidDatum,
                "quasi-split datum needs A1affine with tau = (0 1)");
  SatakeDatum s;
  s.kind = DatumKind::A1Affine;
  s.tau = bundle.datum.tau;
  s.xi = xi;
  s.gamma = Scalar(0);
  s.sigma = Scalar(0);
  return s;
}

SatakeDatum finite_a1(const Scalar& gamma, const Scalar& sigma) {
  if (gamma.is_zero())
    throw Error(ErrorCode::InvalidDatum, "gamma must be invertible");
  SatakeDatum s;
  s.kind = DatumKind::A1;
  s.tau = {0};
  s.xi = Scalar(0);
  s.gamma = gamma;
  s.sigma = sigma;
  return s;
}

std::vector<std::pair<std::string, Matrix>> coideal_action(
    const SatakeDatum& s, const Rep& v, bool spectral) {
  if (v.kind != s.kind)
    throw Error(ErrorCode::DatumMismatch, "module over a different datum");
  Scalar q = Scalar::qpow(1);
  std::vector<std::pair<std::string, Matrix>> out;
  if (s.kind == DatumKind::A1) {
    // B = F - q^{-1} gamma K^{-1} E + sigma K^{-1}
    Matrix kinv = inverse(v.at("K"));
    Matrix b = v.at("F") - (kinv * v.at("E")).scaled(q.inverse() * s.gamma) +
               kinv.scaled(s.sigma);
    out.emplace_back("B", b);
    return out;
  }
  // Affine quasi-split: B_i = F_i - gamma_i q E_{tau(i)} k_i^{-1} with
  // gamma_0 = xi^{-1}, gamma_1 = xi; Cartan part k_0 k_1^{-1}.
  Scalar z = spectral ? Scalar::variable(kVarZ) : Scalar(1);
  auto pz = [&](const std::string& g) { return shifted_gen(v, g, z); };
  std::vector<Scalar> gam = {s.xi.inverse(), s.xi};
  for (int i = 0; i < 2; ++i) {
    std::string si = std::to_string(i), st = std::to_string(s.tau[i]);
    Matrix b = pz("F" + si) -
               (pz("E" + st) * inverse(v.at("K" + si))).scaled(q * gam[i]);
    out.emplace_back("B" + si, b);
  }
  out.emplace_back("C", v.at("K0") * inverse(v.at("K1")));
  return out;
}

Matrix psi_B(const SatakeDatum& s, const Rep& v) {
  if (s.kind != DatumKind::A1)
    throw Error(ErrorCode::UnsupportedTwist, "psi_B is finite-type only");
  Scalar q = Scalar::qpow(1);
  // psi(B) = F - q^{-1} gamma E K + sigma K
  return v.at("F") - (v.at("E") * v.at("K")).scaled(q.inverse() * s.gamma) +
         v.at("K").scaled(s.sigma);
}

TwistIdentification twist_identification(const SatakeDatum& s, const Rep& v) {
  TwistIdentification t;
  if (s.kind == DatumKind::A1Affine) {
    t.G = Matrix::identity(v.dim);
    t.invert_argument = true;
    return t;
  }
  // Solve B_V G = G psi(B)_V and K G = G K^{-1}; the solution space is
  // one-dimensional, any nonzero representative works.
  auto gens = coideal_action(s, v, false);
  Matrix b = gens[0].second, pb = psi_B(s, v);
  Matrix k = v.at("K"), kinv = inverse(k);
  int d = v.dim;
  Matrix sys(2 * d * d, d * d);
  auto add_eq = [&](int block, const Matrix& l, const Matrix& r) {
    // l * G - G * r = 0
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int row = block * d * d + i * d + j;
        for (int m = 0; m < d; ++m) {
          sys.at(row, m * d + j) += l.at(i, m);
          sys.at(row, i * d + m) -= r.at(m, j);
        }
      }
  };
  add_eq(0, b, pb);
  add_eq(1, k, kinv);
  auto basis = nullspace(sys);
  if (basis.size() != 1)
    throw Error(ErrorCode::UnsupportedTwist,
                "twist conjugation space is not one-dimensional");
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = basis[0].at(i * d + j, 0);
  // Normalize the first nonzero entry to 1 for reproducibility.
  for (int i = 0; i < d * d; ++i)
    if (!g.at(i / d, i % d).is_zero()) {
      g = g.scaled(g.at(i / d, i % d).inverse());
      break;
    }
  t.G = g;
  t.invert_argument = false;
  return t;
}

}  // namespace reflekt
