#include "reflekt/transfer.hpp"

#include <numeric>

namespace reflekt {

namespace {

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

std::vector<int> quantum_dims(const std::vector<Rep>& vs) {
  std::vector<int> dims;
  dims.reserve(vs.size());
  for (const auto& v : vs) dims.push_back(v.dim);
  return dims;
}

// Two-row core on V1...VN (x) W without the dual boundary and without the
// trace: (flip R_{W,VN} ... flip R_{W,V1}) K_W (R_{V1,W} ... R_{VN,W}).
Matrix two_row_core(const std::vector<int>& qdims, int wdim,
                    const std::vector<SpectralOperator>& r_vw,
                    const std::vector<SpectralOperator>& r_wv,
                    const SpectralOperator& k) {
  int n = static_cast<int>(qdims.size());
  std::vector<int> legs = qdims;
  legs.push_back(wdim);
  Matrix core = embed(k.mat, legs, {n});
  for (int i = 0; i < n; ++i)
    core = core * embed(r_vw[i].mat, legs, {i, n});
  for (int i = 0; i < n; ++i)
    core = embed(flip_op(r_wv[i].mat), legs, {i, n}) * core;
  return core.with_legs(legs);
}

struct TransferParts {
  std::vector<SpectralOperator> r_vw, r_wv;
  SpectralOperator k, kt;
  Matrix dbar;
  Scalar p;
};

TransferParts transfer_parts(const std::vector<Rep>& vs, const Rep& w,
                             const SatakeDatum& s) {
  if (s.kind != DatumKind::A1Affine)
    throw Error(ErrorCode::DatumMismatch,
                "spectral transfer needs an affine Satake datum");
  auto bundle = build_datum(DatumKind::A1Affine, s.tau);
  TransferParts parts;
  for (const auto& v : vs) {
    parts.r_vw.push_back(spectral_R(v, w, bundle));
    parts.r_wv.push_back(spectral_R(w, v, bundle));
  }
  parts.k = solve_spectral_K(w, s);
  parts.dbar = sovereign_ops(w, bundle.datum).Dbar;
  parts.p = bundle.shift->p;
  parts.kt = dual_K(parts.k, parts.dbar, parts.p);
  return parts;
}

TransferMatrix assemble(const std::vector<int>& qdims, int wdim,
                        const std::vector<SpectralOperator>& r_vw,
                        const std::vector<SpectralOperator>& r_wv,
                        const SpectralOperator& k, const SpectralOperator& kt,
                        const std::string& aux) {
  int n = static_cast<int>(qdims.size());
  std::vector<int> legs = qdims;
  legs.push_back(wdim);
  Matrix t =
      embed(kt.mat, legs, {n}) * two_row_core(qdims, wdim, r_vw, r_wv, k);
  TransferMatrix out;
  if (n == 0) {
    Matrix m(1, 1);
    m.at(0, 0) = t.trace();
    out.mat = m;
  } else {
    out.mat = partial_trace(t.with_legs(legs), n).with_legs(qdims);
  }
  out.aux = aux;
  out.boundary = k.normalization + " / " + kt.normalization;
  return out;
}

}  // namespace

TransferMatrix build_transfer(const std::vector<Rep>& vs, const Rep& w,
                              const SatakeDatum& s) {
  if (w.dim == 1) {
    // Trivial auxiliary: both boundary matrices and all R factors are 1.
    int total = 1;
    for (const auto& v : vs) total *= v.dim;
    TransferMatrix out;
    out.mat = Matrix::identity(total).with_legs(quantum_dims(vs));
    out.aux = w.label;
    out.boundary = "trivial";
    return out;
  }
  auto parts = transfer_parts(vs, w, s);
  return assemble(quantum_dims(vs), w.dim, parts.r_vw, parts.r_wv, parts.k,
                  parts.kt, w.label);
}

TransferMatrix build_transfer_from(const std::vector<Rep>& vs, const Rep& w,
                                   const SpectralOperator& k,
                                   const SpectralOperator& kt) {
  auto bundle = build_datum(DatumKind::A1Affine, {1, 0});
  std::vector<SpectralOperator> r_vw, r_wv;
  for (const auto& v : vs) {
    r_vw.push_back(spectral_R(v, w, bundle));
    r_wv.push_back(spectral_R(w, v, bundle));
  }
  return assemble(quantum_dims(vs), w.dim, r_vw, r_wv, k, kt, w.label);
}

TransferMatrix build_transfer_specialized(const std::vector<Rep>& vs,
                                          const Rep& w, const SatakeDatum& s,
                                          const std::map<int, Scalar>& bind) {
  auto parts = transfer_parts(vs, w, s);
  auto sp = [&](SpectralOperator& op) {
    op.mat = op.mat.substitute(bind).with_legs(op.mat.legs());
  };
  for (auto& r : parts.r_vw) sp(r);
  for (auto& r : parts.r_wv) sp(r);
  sp(parts.k);
  sp(parts.kt);
  return assemble(quantum_dims(vs), w.dim, parts.r_vw, parts.r_wv, parts.k,
                  parts.kt, w.label);
}

TransferMatrix at_argument(const TransferMatrix& t, const Scalar& arg) {
  TransferMatrix out = t;
  out.mat = subst_arg(t.mat, arg);
  return out;
}

Matrix commutator_check(const TransferMatrix& t1, const TransferMatrix& t2) {
  if (t1.mat.rows() != t2.mat.rows() || t1.mat.cols() != t2.mat.cols())
    throw Error(ErrorCode::ShapeMismatch,
                "transfer matrices on different quantum spaces");
  return t1.mat * t2.mat - t2.mat * t1.mat;
}

MultiplicativityResult multiplicativity_check(const Rep& v, const Rep& w,
                                              const std::vector<Rep>& quantum,
                                              const SatakeDatum& s) {
  Scalar y = Scalar::variable(kVarY), z = Scalar::variable(kVarZ);
  MultiplicativityResult out;
  if (v.dim == 1 || w.dim == 1) {
    // Unit of the Grothendieck ring: the trivial factor contributes 1, so
    // the tensor transfer is literally the remaining single-aux transfer.
    const Rep& nt = v.dim == 1 ? w : v;
    TransferMatrix t = build_transfer(quantum, nt, s);
    out.tensor = v.dim == 1 ? t.mat : subst_arg(t.mat, y);
    out.product = out.tensor;
    out.residual = out.tensor - out.product;
    out.scale = Scalar(1);
    return out;
  }
  auto bundle = build_datum(DatumKind::A1Affine, s.tau);
  auto pv = transfer_parts(quantum, v, s);
  auto pw = transfer_parts(quantum, w, s);
  auto qd = quantum_dims(quantum);
  int n = static_cast<int>(qd.size());

  Matrix tv = subst_arg(assemble(qd, v.dim, pv.r_vw, pv.r_wv, pv.k, pv.kt,
                                 v.label)
                            .mat,
                        y);
  Matrix tw =
      assemble(qd, w.dim, pw.r_vw, pw.r_wv, pw.k, pw.kt, w.label).mat;
  Matrix rhs = tv * tw;

  // Composite auxiliary V(y) (x) W(z) on legs n, n+1.
  std::vector<int> legs = qd;
  legs.push_back(v.dim);
  legs.push_back(w.dim);
  std::vector<int> vleg(qd.size() + 1), wleg(qd.size() + 1);
  std::iota(vleg.begin(), vleg.end(), 0);
  std::iota(wleg.begin(), wleg.end(), 0);
  vleg.back() = n;
  wleg.back() = n + 1;

  Matrix core_v =
      subst_arg(two_row_core(qd, v.dim, pv.r_vw, pv.r_wv, pv.k), y);
  Matrix core_w = two_row_core(qd, w.dim, pw.r_vw, pw.r_wv, pw.k);
  auto r_pair = spectral_R(v, w, bundle);
  Matrix r_mid = subst_arg(r_pair.mat, y * z);
  // K~_aux = (K~_V(y) (x) 1) R~_{V,W}(yz) (1 (x) K~_W(z)) with
  // R~(u) = Ad(1 (x) Dbar)(R(p^2 u)^{-1}).
  Matrix dbar_w = sovereign_ops(w, bundle.datum).Dbar;
  Matrix conj = kron(Matrix::identity(v.dim).with_legs({v.dim}),
                     dbar_w.with_legs(std::vector<int>{w.dim}));
  Matrix rtilde =
      (conj * inverse(subst_arg(r_pair.mat, pv.p * pv.p * y * z)) *
       inverse(conj))
          .with_legs(r_pair.mat.legs());
  Matrix kt_aux =
      kron(subst_arg(pv.kt.mat, y).with_legs(std::vector<int>{v.dim}),
           Matrix::identity(w.dim).with_legs(std::vector<int>{w.dim})) *
      rtilde *
      kron(Matrix::identity(v.dim).with_legs(std::vector<int>{v.dim}),
           pw.kt.mat.with_legs(std::vector<int>{w.dim}));

  Matrix big = embed(kt_aux.with_legs({v.dim, w.dim}), legs, {n, n + 1}) *
               embed(core_w, legs, wleg) *
               embed(r_mid, legs, {n, n + 1}) * embed(core_v, legs, vleg);
  Matrix lhs = partial_trace(partial_trace(big.with_legs(legs), n + 1), n);

  Scalar scale(0);
  for (int i = 0; i < rhs.rows() && scale.is_zero(); ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      if (!rhs.at(i, j).is_zero()) {
        scale = lhs.at(i, j) / rhs.at(i, j);
        break;
      }
  out.scale = scale;
  out.tensor = lhs;
  out.product = rhs;
  out.residual = lhs - rhs.scaled(scale);
  return out;
}

Matrix hamiltonian(const std::vector<Rep>& vs, const SatakeDatum& s) {
  if (vs.empty())
    throw Error(ErrorCode::ShapeMismatch, "hamiltonian needs a chain");
  TransferMatrix t = build_transfer(vs, vs[0], s);
  Matrix h = t.mat.derivative(kVarZ).substitute({{kVarZ, Scalar(1)}});
  Scalar shift = h.trace() / Scalar(h.rows());
  return h - Matrix::identity(h.rows()).scaled(shift);
}

Matrix finite_transfer(const Rep& probe, const Rep& v, const SatakeDatum& s,
                       FiniteVariant variant) {
  if (s.kind != DatumKind::A1 || v.kind != DatumKind::A1 ||
      probe.kind != DatumKind::A1)
    throw Error(ErrorCode::DatumMismatch, "finite transfer is A1 only");
  if (v.dim == 1) {
    return Matrix::identity(probe.dim);
  }
  Matrix r_mv = finite_R(probe, v).with_legs({probe.dim, v.dim});
  Matrix r_vm = finite_R(v, probe).with_legs({v.dim, probe.dim});
  Matrix r21 = flip_op(r_vm);
  Matrix g = twist_identification(s, v).G;
  Matrix ups = quasi_K_finite(v, s);
  Matrix d = sovereign_ops(v, std::nullopt).D;
  Matrix left;
  if (variant == FiniteVariant::DualK) {
    left = d * inverse(ups) * inverse(g);
  } else {
    int m = v.weight[0];
    left = d.scaled(Scalar::vpow(m * (m + 2)));  // u_V = D_V c^{-1}
  }
  Matrix right = g * ups;
  auto one = Matrix::identity(probe.dim).with_legs(std::vector<int>{probe.dim});
  Matrix t = kron(one, left.with_legs(std::vector<int>{v.dim})) * r21 *
             kron(one, right.with_legs(std::vector<int>{v.dim})) * r_mv;
  return partial_trace(t.with_legs({probe.dim, v.dim}), 1);
}

BalanceData balance_data(const Rep& v) {
  if (v.kind != DatumKind::A1)
    throw Error(ErrorCode::DatumMismatch, "balance data is finite-type only");
  int m = v.weight[0];
  BalanceData out;
  out.c = Scalar::vpow(-m * (m + 2));
  out.u = sovereign_ops(v, std::nullopt).D.scaled(out.c.inverse());
  out.b = Matrix::identity(v.dim).scaled(out.c);
  if (v.dim == 1) return out;

  // Blockwise guard on V (x) V: (c (x) c)(R21 R)^{-1} must act as the
  // ribbon scalar of each irreducible component.
  int d = v.dim, dd = d * d;
  Matrix r = finite_R(v, v).with_legs({d, d});
  Matrix blk = inverse(flip_op(r) * r).scaled(out.c * out.c);
  Rep vv = tensor_rep(v, v);
  const Matrix& de = vv.at("E");
  const Matrix& df = vv.at("F");
  auto wt = [&](int idx) { return v.weight[idx / d] + v.weight[idx % d]; };
  for (int mu = 2 * m; mu >= 0; mu -= 2) {
    std::vector<int> slots;
    for (int i = 0; i < dd; ++i)
      if (wt(i) == mu) slots.push_back(i);
    if (slots.empty()) continue;
    Matrix sub(dd, static_cast<int>(slots.size()));
    for (int c2 = 0; c2 < static_cast<int>(slots.size()); ++c2)
      for (int i = 0; i < dd; ++i) sub.at(i, c2) = de.at(i, slots[c2]);
    for (const auto& ker : nullspace(sub)) {
      Matrix x(dd, 1);
      for (int c2 = 0; c2 < static_cast<int>(slots.size()); ++c2)
        x.at(slots[c2], 0) = ker.at(c2, 0);
      Scalar cm = Scalar::vpow(-mu * (mu + 2));
      while (!x.is_zero()) {
        if (blk * x != x.scaled(cm))
          throw Error(ErrorCode::AxiomFailure,
                      "balance coproduct guard failed");
        x = df * x;
      }
    }
  }
  return out;
}

}  // namespace reflekt
