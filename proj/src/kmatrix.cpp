#include "reflekt/kmatrix.hpp"

namespace reflekt {

namespace {

Matrix pow_mat(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Matrix subst_arg(const Matrix& m, const Scalar& arg) {
  return m.substitute({{kVarZ, arg}}).with_legs(m.legs());
}

Matrix flip_op(const Matrix& m) {
  const auto& legs = m.legs();
  if (legs.size() != 2)
    throw Error(ErrorCode::LegMismatch, "flip needs two declared legs");
  Matrix p = leg_permutation(legs, {1, 0});
  return (p * m * p.transpose()).with_legs({legs[1], legs[0]});
}

}  // namespace

Matrix quasi_K_finite(const Rep& v, const SatakeDatum& s) {
  if (s.kind != DatumKind::A1 || v.kind != DatumKind::A1)
    throw Error(ErrorCode::DatumMismatch, "quasi K is finite-type only");
  auto gens = coideal_action(s, v, false);
  Matrix b = gens[0].second, pb = psi_B(s, v);
  int n = v.dim - 1;
  Matrix ups = Matrix::identity(v.dim);
  if (n == 0) return ups;
  // Ups b = psi(b) Ups with Ups = 1 + sum c_k E^k, linear in the c_k.
  std::vector<Matrix> cols;
  for (int k = 1; k <= n; ++k) {
    Matrix ek = pow_mat(v.at("E"), k);
    cols.push_back(ek * b - pb * ek);
  }
  Matrix rhs = pb - b;
  auto c = solve_unique(cols, rhs);
  for (int k = 1; k <= n; ++k)
    ups = ups + pow_mat(v.at("E"), k).scaled(c[k - 1]);
  return ups;
}

SpectralOperator solve_spectral_K(const Rep& v, const SatakeDatum& s) {
  auto t = twist_identification(s, v);
  if (!t.invert_argument)
    throw Error(ErrorCode::UnsupportedTwist,
                "spectral K needs the argument-inverting twist");
  auto gens = coideal_action(s, v, true);
  Scalar z = Scalar::variable(kVarZ);
  int d = v.dim;
  Matrix ginv = inverse(t.G);
  Matrix sys(static_cast<int>(gens.size()) * d * d, d * d);
  int block = 0;
  for (const auto& [name, act] : gens) {
    Matrix act_inv = t.G * act.substitute({{kVarZ, z.inverse()}}) * ginv;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int row = block * d * d + i * d + j;
        for (int m = 0; m < d; ++m) {
          sys.at(row, i * d + m) += act.at(m, j);      // K * act
          sys.at(row, m * d + j) -= act_inv.at(i, m);  // -act_inv * K
        }
      }
    ++block;
  }
  auto basis = nullspace(sys);
  if (basis.size() != 1)
    throw Error(ErrorCode::SolverDegenerate,
                "spectral K solution space is not one-dimensional");
  Matrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) k.at(i, j) = basis[0].at(i * d + j, 0);
  if (k.at(0, 0).is_zero())
    throw Error(ErrorCode::SolverDegenerate, "vanishing top-weight entry");
  k = k.scaled(k.at(0, 0).inverse());
  SpectralOperator out;
  out.mat = k.with_legs({d});
  out.normalization = "top-weight entry 1";
  return out;
}

SpectralOperator dual_K(const SpectralOperator& k, const Matrix& dbar,
                        const Scalar& p) {
  Scalar z = Scalar::variable(kVarZ);
  SpectralOperator out;
  out.mat = (dbar * inverse(subst_arg(k.mat, p * z))).with_legs(k.mat.legs());
  out.normalization = "Dbar K(pz)^{-1}";
  return out;
}

SpectralOperator tensor_K(const SpectralOperator& r_mv,
                          const SpectralOperator& r_vm,
                          const SpectralOperator& k_v) {
  const auto& legs = r_mv.mat.legs();
  int dm = legs[0], dv = legs[1];
  Matrix r21 = flip_op(r_vm.mat);  // acts on M (x) V
  Matrix k2 = kron(Matrix::identity(dm).with_legs(std::vector<int>{dm}),
                   k_v.mat.with_legs(std::vector<int>{dv}));
  SpectralOperator out;
  out.mat = (r21 * k2 * r_mv.mat).with_legs({dm, dv});
  out.normalization = "R21 K2 R";
  return out;
}

Matrix reflection_residual(const SpectralOperator& r_vw,
                           const SpectralOperator& r_wv,
                           const SpectralOperator& k_v,
                           const SpectralOperator& k_w, ReflectionMode mode,
                           const Matrix* g_v, const Matrix* g_w) {
  const auto& legs = r_vw.mat.legs();
  int dv = legs[0], dw = legs[1];
  Scalar y = Scalar::variable(kVarY), z = Scalar::variable(kVarZ);
  auto id = [](int d) { return Matrix::identity(d).with_legs({d}); };
  auto conj = [&](const Matrix& m, const Matrix* a, const Matrix* b) {
    if (mode == ReflectionMode::Untwisted || (a == nullptr && b == nullptr))
      return m;
    Matrix c = kron(a ? a->with_legs(std::vector<int>{dv}) : id(dv),
                    b ? b->with_legs(std::vector<int>{dw}) : id(dw));
    return (c * m * inverse(c)).with_legs(m.legs());
  };
  Matrix k1 = kron(subst_arg(k_v.mat, y).with_legs(std::vector<int>{dv}),
                   id(dw));
  Matrix k2 = kron(id(dv), k_w.mat.with_legs(std::vector<int>{dw}));
  Matrix r21_zy = flip_op(subst_arg(r_wv.mat, z / y));
  Matrix r_yz = subst_arg(r_vw.mat, y * z);
  Matrix r21_yz = flip_op(subst_arg(r_wv.mat, y * z));
  Matrix r_zy = subst_arg(r_vw.mat, z / y);
  Matrix lhs = conj(r21_zy, g_v, g_w) * k2 * conj(r_yz, g_v, nullptr) * k1;
  Matrix rhs = k1 * conj(r21_yz, nullptr, g_w) * k2 * r_zy;
  return lhs - rhs;
}

Matrix dual_reflection_residual(const SpectralOperator& r_vw,
                                const SpectralOperator& r_wv,
                                const SpectralOperator& kt_v,
                                const SpectralOperator& kt_w,
                                const Matrix& dbar, const Scalar& p) {
  const auto& legs = r_vw.mat.legs();
  int dv = legs[0], dw = legs[1];
  Scalar y = Scalar::variable(kVarY), z = Scalar::variable(kVarZ);
  auto id = [](int d) { return Matrix::identity(d).with_legs({d}); };
  auto rtilde = [&](const SpectralOperator& r, const Scalar& arg) {
    Matrix m = inverse(subst_arg(r.mat, p * p * arg));
    Matrix c = kron(id(r.mat.legs()[0]),
                    dbar.with_legs(std::vector<int>{r.mat.legs()[1]}));
    return (c * m * inverse(c)).with_legs(r.mat.legs());
  };
  Matrix k1 = kron(subst_arg(kt_v.mat, y).with_legs(std::vector<int>{dv}),
                   id(dw));
  Matrix k2 = kron(id(dv), kt_w.mat.with_legs(std::vector<int>{dw}));
  Matrix lhs = inverse(subst_arg(r_vw.mat, z / y)) * k2 *
               flip_op(rtilde(r_wv, y * z)) * k1;
  Matrix rhs = k1 * rtilde(r_vw, y * z) * k2 *
               inverse(flip_op(subst_arg(r_wv.mat, z / y)));
  return lhs - rhs;
}

}  // namespace reflekt
