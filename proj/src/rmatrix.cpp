#include "reflekt/rmatrix.hpp"

namespace reflekt {

namespace {

Matrix pow_mat(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

// Opposite coproduct action on V (x) W from the action on W (x) V.
Matrix conjugate_flip(const Matrix& m_wv, int dv, int dw) {
  Matrix p = leg_permutation({dv, dw}, {1, 0});  // V(x)W -> W(x)V
  return (p.transpose() * m_wv * p).with_legs({dv, dw});
}

}  // namespace

std::vector<Scalar> solve_unique(const std::vector<Matrix>& cols,
                                 const Matrix& rhs) {
  int k = static_cast<int>(cols.size());
  int entries = rhs.rows() * rhs.cols();
  Matrix aug(entries, k + 1);
  for (int r = 0; r < rhs.rows(); ++r)
    for (int c = 0; c < rhs.cols(); ++c) {
      int row = r * rhs.cols() + c;
      for (int j = 0; j < k; ++j) aug.at(row, j) = cols[j].at(r, c);
      aug.at(row, k) = rhs.at(r, c);
    }
  // Treat the system as [A | b] x' = 0 with last coordinate forced to -1.
  auto basis = nullspace(aug);
  std::vector<Matrix> good;
  for (const auto& b : basis)
    if (!b.at(k, 0).is_zero()) good.push_back(b);
  if (good.empty())
    throw Error(ErrorCode::SolverInconsistent, "linear system has no solution");
  if (basis.size() != 1)
    throw Error(ErrorCode::SolverDegenerate,
                "linear system solution is not unique");
  std::vector<Scalar> x(k);
  Scalar scale = -good[0].at(k, 0).inverse();
  for (int j = 0; j < k; ++j) x[j] = good[0].at(j, 0) * scale;
  return x;
}

Matrix kappa(const Rep& v, const Rep& w) {
  std::vector<Scalar> d;
  for (int mv : v.weight)
    for (int mw : w.weight) d.push_back(Scalar::vpow(mv * mw));
  return Matrix::diagonal(d).with_legs({v.dim, w.dim});
}

Matrix quasi_R_finite(const Rep& v, const Rep& w) {
  if (v.kind != DatumKind::A1 || w.kind != DatumKind::A1)
    throw Error(ErrorCode::DatumMismatch, "quasi R needs finite-type modules");
  int n = std::min(v.dim, w.dim) - 1;
  Matrix kap = kappa(v, w);
  Rep vw = tensor_rep(v, w);
  std::vector<int> legs = {v.dim, w.dim};
  Matrix id = Matrix::identity(v.dim * w.dim).with_legs(legs);
  std::vector<Matrix> ladder;  // F^k (x) E^k for k >= 1
  for (int k = 1; k <= n; ++k)
    ladder.push_back(
        kron(pow_mat(v.at("F"), k), pow_mat(w.at("E"), k)).with_legs(legs));
  if (n == 0) return id;
  // Intertwining R Delta(g) = Delta^op(g) R with R = kappa (1 + sum t_k A_k):
  // linear in the t_k.
  Rep wv = tensor_rep(w, v);
  std::vector<Matrix> gens_delta, gens_op;
  for (const auto& g : {"E", "F"}) {
    gens_delta.push_back(vw.at(g));
    gens_op.push_back(conjugate_flip(wv.at(g), v.dim, w.dim));
  }
  // Stack the generator equations vertically.
  int d = v.dim * w.dim;
  auto stack = [&](const std::vector<Matrix>& ms) {
    Matrix s(d * static_cast<int>(ms.size()), d);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          s.at(static_cast<int>(i) * d + r, c) = ms[i].at(r, c);
    return s;
  };
  std::vector<std::vector<Matrix>> percol(n);
  std::vector<Matrix> rhsper;
  for (std::size_t gi = 0; gi < gens_delta.size(); ++gi) {
    for (int k = 0; k < n; ++k)
      percol[k].push_back(kap * ladder[k] * gens_delta[gi] -
                          gens_op[gi] * kap * ladder[k]);
    rhsper.push_back(gens_op[gi] * kap - kap * gens_delta[gi]);
  }
  std::vector<Matrix> cols2;
  for (int k = 0; k < n; ++k) cols2.push_back(stack(percol[k]));
  Matrix rhs2 = stack(rhsper);
  auto t = solve_unique(cols2, rhs2);
  Matrix xi = id;
  for (int k = 0; k < n; ++k) xi = xi + ladder[k].scaled(t[k]);
  return xi;
}

Matrix finite_R(const Rep& v, const Rep& w) {
  return kappa(v, w) * quasi_R_finite(v, w);
}

SpectralOperator spectral_R(const Rep& v, const Rep& w,
                            const DatumBundle& bundle) {
  if (v.kind != DatumKind::A1Affine || w.kind != DatumKind::A1Affine)
    throw Error(ErrorCode::DatumMismatch, "spectral R needs evaluation modules");
  Scalar z = Scalar::variable(kVarZ);
  Rep vw = tensor_rep(v, w, z);            // (id (x) Sigma_z) Delta
  Rep wv = tensor_rep(w, v, z.inverse());  // flip gives (Sigma_z (x) id) Delta
  int d = v.dim * w.dim;
  std::vector<Matrix> act, act_op;
  for (const auto& g : generator_names(DatumKind::A1Affine)) {
    act.push_back(vw.at(g));
    act_op.push_back(conjugate_flip(shifted_gen(wv, g, z), v.dim, w.dim));
  }
  // Unknown entries of R; equations R act = act_op R.
  int ng = static_cast<int>(act.size());
  Matrix sys(ng * d * d, d * d);
  for (int gi = 0; gi < ng; ++gi)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        int row = (gi * d + r) * d + c;
        for (int j = 0; j < d; ++j) {
          // coefficient of R_{r,j} from R*act
          sys.at(row, r * d + j) += act[gi].at(j, c);
          // coefficient of R_{j,c} from -act_op*R
          sys.at(row, j * d + c) -= act_op[gi].at(r, j);
        }
      }
  auto basis = nullspace(sys);
  if (basis.size() != 1)
    throw Error(ErrorCode::SolverDegenerate,
                "spectral intertwiner space is not one-dimensional");
  Matrix r(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = basis[0].at(i * d + j, 0);
  // Anchor: the top corner of the true R is the constant kappa entry, so
  // rescaling by kappa_00 / R_00 enforces R(0) = kappa.
  Matrix kap = kappa(v, w);
  if (r.at(0, 0).is_zero())
    throw Error(ErrorCode::SolverDegenerate, "vanishing anchor entry");
  r = r.scaled(kap.at(0, 0) / r.at(0, 0));
  Matrix at0 = r.substitute({{kVarZ, Scalar(0)}});
  if (at0 != kap)
    throw Error(ErrorCode::SolverInconsistent, "anchor R(0) = kappa violated");
  SpectralOperator out;
  out.mat = r.with_legs({v.dim, w.dim});
  out.normalization = "R(0) = kappa";
  (void)bundle;
  return out;
}

CrossingResult verify_crossing(const SpectralOperator& r, const Matrix& dbar,
                               const Scalar& p) {
  const Matrix& m = r.mat;
  Matrix lhs = inverse(partial_transpose(inverse(partial_transpose(m, 1)), 1));
  Scalar z = Scalar::variable(kVarZ);
  Matrix shifted = m.substitute({{kVarZ, p * p * z}});
  Matrix conj = kron(Matrix::identity(m.legs()[0]), inverse(dbar));
  Matrix rhs = conj * shifted * inverse(conj);
  Scalar scale;
  bool found = false;
  for (int i = 0; i < m.rows() && !found; ++i)
    for (int j = 0; j < m.cols() && !found; ++j)
      if (!rhs.at(i, j).is_zero()) {
        scale = lhs.at(i, j) / rhs.at(i, j);
        found = true;
      }
  CrossingResult out;
  out.scale = scale;
  out.residual = lhs - rhs.scaled(scale);
  return out;
}

Matrix spectral_ybe_residual(const SpectralOperator& r) {
  const auto& legs = r.mat.legs();
  if (legs.size() != 2 || legs[0] != legs[1])
    throw Error(ErrorCode::LegMismatch, "YBE needs equal square legs");
  int d = legs[0];
  Scalar y = Scalar::variable(kVarY), z = Scalar::variable(kVarZ);
  Matrix ry = r.mat.substitute({{kVarZ, y}});
  Matrix ryz = r.mat.substitute({{kVarZ, y * z}});
  Matrix rz = r.mat;
  std::vector<int> chain = {d, d, d};
  Matrix r12 = embed(ry, chain, {0, 1});
  Matrix r13 = embed(ryz, chain, {0, 2});
  Matrix r23 = embed(rz, chain, {1, 2});
  return r12 * r13 * r23 - r23 * r13 * r12;
}

Matrix finite_ybe_residual(const Matrix& r, int dim) {
  std::vector<int> chain = {dim, dim, dim};
  Matrix rl = r.with_legs({dim, dim});
  Matrix r12 = embed(rl, chain, {0, 1});
  Matrix r13 = embed(rl, chain, {0, 2});
  Matrix r23 = embed(rl, chain, {1, 2});
  return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace reflekt
