#include "reflekt/reps.hpp"

namespace reflekt {

namespace {

// Balanced q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
Scalar qint(int n) {
  Scalar r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r += Scalar::qpow(e);
  return r;
}

Matrix qpow_diag(const std::vector<int>& weights, int factor) {
  std::vector<Scalar> d;
  d.reserve(weights.size());
  for (int m : weights) d.push_back(Scalar::qpow(factor * m));
  return Matrix::diagonal(d);
}

}  // namespace

const Matrix& Rep::at(const std::string& name) const {
  auto it = gen.find(name);
  if (it == gen.end())
    throw Error(ErrorCode::InvalidDatum, "no generator named " + name);
  return it->second;
}

std::vector<std::string> generator_names(DatumKind kind) {
  if (kind == DatumKind::A1) return {"E", "F", "K"};
  return {"E0", "E1", "F0", "F1", "K0", "K1"};
}

Rep trivial_rep(DatumKind kind) {
  Rep r;
  r.kind = kind;
  r.dim = 1;
  r.weight = {0};
  r.legs = {1};
  r.label = "trivial";
  Matrix zero(1, 1), one = Matrix::identity(1);
  for (const auto& g : generator_names(kind)) {
    r.gen[g] = g[0] == 'K' ? one : zero;
    r.grading_exp[g] = 0;
  }
  check_relations(r);
  return r;
}

Rep spin_rep(int twoj) {
  if (twoj < 0) throw Error(ErrorCode::InvalidDatum, "negative spin");
  Rep r;
  r.kind = DatumKind::A1;
  r.dim = twoj + 1;
  r.legs = {r.dim};
  r.label = "spin" + std::to_string(twoj) + "/2";
  for (int k = 0; k <= twoj; ++k) r.weight.push_back(twoj - 2 * k);
  Matrix e(r.dim, r.dim), f(r.dim, r.dim);
  for (int k = 1; k <= twoj; ++k) e.at(k - 1, k) = qint(k);
  for (int k = 0; k < twoj; ++k) f.at(k + 1, k) = qint(twoj - k);
  r.gen["E"] = e;
  r.gen["F"] = f;
  r.gen["K"] = qpow_diag(r.weight, 1);
  for (const auto& g : generator_names(r.kind)) r.grading_exp[g] = 0;
  check_relations(r);
  return r;
}

Rep eval_rep(const DatumBundle& bundle, int twoj, const Scalar& a) {
  if (!bundle.datum.affine || !bundle.shift)
    throw Error(ErrorCode::InvalidDatum, "eval_rep needs an affine datum");
  Rep fin = spin_rep(twoj);
  Rep r;
  r.kind = DatumKind::A1Affine;
  r.dim = fin.dim;
  r.legs = fin.legs;
  r.weight = fin.weight;
  r.label = "eval-" + fin.label;
  r.gen["E1"] = fin.at("E");
  r.gen["F1"] = fin.at("F");
  r.gen["K1"] = fin.at("K");
  r.gen["E0"] = fin.at("F").scaled(a);
  r.gen["F0"] = fin.at("E").scaled(a.inverse());
  r.gen["K0"] = inverse(fin.at("K"));
  const auto& s = bundle.shift->s;
  r.grading_exp = {{"E0", s[0]}, {"F0", -s[0]}, {"E1", s[1]},
                   {"F1", -s[1]}, {"K0", 0},    {"K1", 0}};
  check_relations(r);
  return r;
}

Rep tensor_rep(const Rep& v, const Rep& w, const std::optional<Scalar>& ratio) {
  if (v.kind != w.kind)
    throw Error(ErrorCode::DatumMismatch, "tensor of different datum kinds");
  Rep r;
  r.kind = v.kind;
  r.dim = v.dim * w.dim;
  r.legs = v.legs;
  for (int d : w.legs) r.legs.push_back(d);
  r.label = v.label + "(x)" + w.label;
  for (int mv : v.weight)
    for (int mw : w.weight) r.weight.push_back(mv + mw);
  Matrix iv = Matrix::identity(v.dim), iw = Matrix::identity(w.dim);
  int nodes = v.kind == DatumKind::A1 ? 1 : 2;
  for (int i = 0; i < nodes; ++i) {
    std::string suffix = nodes == 1 ? "" : std::to_string(i);
    std::string en = "E" + suffix, fn = "F" + suffix, kn = "K" + suffix;
    auto leg2 = [&](const Matrix& m, const std::string& g) {
      if (!ratio) return m;
      return m.scaled(ratio->pow(v.grading_exp.at(g)));
    };
    r.gen[en] = kron(v.at(en), iw) + kron(v.at(kn), leg2(w.at(en), en));
    r.gen[fn] =
        kron(v.at(fn), inverse(w.at(kn))) + kron(iv, leg2(w.at(fn), fn));
    r.gen[kn] = kron(v.at(kn), w.at(kn));
    r.grading_exp[en] = v.grading_exp.at(en);
    r.grading_exp[fn] = v.grading_exp.at(fn);
    r.grading_exp[kn] = 0;
  }
  for (auto& [name, m] : r.gen) m = m.with_legs(r.legs);
  check_relations(r);
  return r;
}

Rep dual_rep(const Rep& v, DualSide side) {
  Rep r;
  r.kind = v.kind;
  r.dim = v.dim;
  r.legs = {v.dim};
  r.label = (side == DualSide::Left ? "*" : "") + v.label +
            (side == DualSide::Right ? "*" : "");
  for (int m : v.weight) r.weight.push_back(-m);
  int nodes = v.kind == DatumKind::A1 ? 1 : 2;
  for (int i = 0; i < nodes; ++i) {
    std::string suffix = nodes == 1 ? "" : std::to_string(i);
    std::string en = "E" + suffix, fn = "F" + suffix, kn = "K" + suffix;
    Matrix k = v.at(kn), kinv = inverse(k);
    Matrix se, sf;
    if (side == DualSide::Left) {
      se = -(v.at(en) * kinv);  // S^{-1}(E) = -E K^{-1}
      sf = -(k * v.at(fn));     // S^{-1}(F) = -K F
    } else {
      se = -(kinv * v.at(en));  // S(E) = -K^{-1} E
      sf = -(v.at(fn) * k);     // S(F) = -F K
    }
    r.gen[en] = se.transpose();
    r.gen[fn] = sf.transpose();
    r.gen[kn] = kinv.transpose();
    r.grading_exp[en] = v.grading_exp.at(en);
    r.grading_exp[fn] = v.grading_exp.at(fn);
    r.grading_exp[kn] = 0;
  }
  check_relations(r);
  return r;
}

Matrix shifted_gen(const Rep& v, const std::string& name, const Scalar& z) {
  return v.at(name).scaled(z.pow(v.grading_exp.at(name)));
}

void check_relations(const Rep& v) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::RelationFailure, "relation check failed: " + what);
  };
  Scalar qdiff = Scalar::qpow(1) - Scalar::qpow(-1);
  int nodes = v.kind == DatumKind::A1 ? 1 : 2;
  const auto* gcm_fin = "";
  (void)gcm_fin;
  auto a_ij = [&](int i, int j) {
    if (nodes == 1) return 2;
    return i == j ? 2 : -2;
  };
  auto name = [&](const char* base, int i) {
    return nodes == 1 ? std::string(base) : std::string(base) + std::to_string(i);
  };
  for (int i = 0; i < nodes; ++i) {
    Matrix ki = v.at(name("K", i));
    Matrix kiinv = inverse(ki);
    for (int j = 0; j < nodes; ++j) {
      Matrix ej = v.at(name("E", j)), fj = v.at(name("F", j));
      if (ki * ej != ej.scaled(Scalar::qpow(a_ij(i, j))) * ki)
        fail("K E commutation");
      if (ki * fj != fj.scaled(Scalar::qpow(-a_ij(i, j))) * ki)
        fail("K F commutation");
      Matrix ei = v.at(name("E", i));
      Matrix lhs = ei * fj - fj * ei;
      Matrix rhs = i == j ? (ki - kiinv).scaled(qdiff.inverse())
                          : Matrix(v.dim, v.dim);
      if (lhs != rhs) fail("E F commutator");
    }
    // Weight compatibility: E_i maps the m-eigenspace into m + finite(alpha_i).
    int step = nodes == 1 ? 2 : (i == 1 ? 2 : -2);
    const Matrix& e = v.at(name("E", i));
    for (int r = 0; r < v.dim; ++r)
      for (int c = 0; c < v.dim; ++c)
        if (!e.at(r, c).is_zero() && v.weight[r] != v.weight[c] + step)
          fail("weight grading of E");
  }
}

SovereignOps sovereign_ops(const Rep& v,
                           const std::optional<CartanDatum>& affine_datum) {
  SovereignOps ops;
  ops.D = qpow_diag(v.weight, -1);
  if (affine_datum) {
    std::vector<Scalar> d;
    for (int m : v.weight)
      d.push_back(Scalar::qpow(dbar_exponent(*affine_datum, m)));
    ops.Dbar = Matrix::diagonal(d);
  } else {
    ops.Dbar = Matrix::identity(v.dim);
  }
  return ops;
}

}  // namespace reflekt
