#include "reflekt/cartan.hpp"

namespace reflekt {

namespace {

void validate(const CartanDatum& d) {
  int n = static_cast<int>(d.gcm.size());
  if (static_cast<int>(d.tau.size()) != n ||
      static_cast<int>(d.d.size()) != n)
    throw Error(ErrorCode::InvalidDatum, "datum size mismatch");
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (d.tau[i] < 0 || d.tau[i] >= n || seen[d.tau[i]])
      throw Error(ErrorCode::InvalidDatum, "tau is not a permutation");
    seen[d.tau[i]] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (d.tau[d.tau[i]] != i)
      throw Error(ErrorCode::InvalidDatum, "tau is not an involution");
    for (int j = 0; j < n; ++j) {
      if (d.d[i] * d.gcm[i][j] != d.d[j] * d.gcm[j][i])
        throw Error(ErrorCode::InvalidDatum, "gcm not symmetrizable");
      if (d.gcm[d.tau[i]][d.tau[j]] != d.gcm[i][j])
        throw Error(ErrorCode::InvalidDatum, "tau does not preserve gcm");
    }
  }
}

}  // namespace

DatumBundle build_datum(DatumKind kind, const std::vector<int>& tau) {
  CartanDatum d;
  d.kind = kind;
  d.tau = tau;
  if (kind == DatumKind::A1) {
    d.gcm = {{2}};
    d.d = {1};
    d.affine = false;
  } else {
    d.gcm = {{2, -2}, {-2, 2}};
    d.d = {1, 1};
    d.affine = true;
    d.delta_coeffs = {1, 1};
  }
  validate(d);
  DatumBundle bundle{d, std::nullopt};
  if (d.affine) {
    GradingShift g;
    g.s.assign(2, 0);
    g.s[0] = 1;
    g.s[d.tau[0]] = 1;
    // s(delta) with delta = alpha_0 + alpha_1; s_hom(delta) = 1.
    g.f = g.s[0] * d.delta_coeffs[0] + g.s[1] * d.delta_coeffs[1];
    g.hvee = 2;  // rho(c) with rho(h_i) = 1
    if (g.hvee % g.f != 0)
      throw Error(ErrorCode::InvalidDatum, "non-integral hvee_phi");
    g.hvee_phi = g.hvee / g.f;
    g.p = Scalar::qpow(-g.hvee_phi);
    bundle.shift = g;
  }
  return bundle;
}

Rat pairing(int m1, int m2) { return Rat(m1 * m2, 2); }

int dbar_exponent(const CartanDatum& datum, int m) {
  if (!datum.affine)
    throw Error(ErrorCode::InvalidDatum, "Dbar needs an affine datum");
  if (datum.tau[0] != 0) return 0;  // tau = (0 1)
  return -m;                        // tau = id
}

}  // namespace reflekt
