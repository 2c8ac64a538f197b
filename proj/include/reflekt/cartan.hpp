#pragma once

// Cartan data for the built-in types (finite A1 and untwisted affine A1)
// together with the grading-shift constants f, h^vee, h^vee_phi, p used by
// the crossing machinery.  Finite weights are stored as integer multiples
// of the fundamental weight omega, with (m omega, m' omega) = m m' / 2.

#include <optional>
#include <vector>

#include "reflekt/scalar.hpp"

namespace reflekt {

enum class DatumKind { A1, A1Affine };

struct CartanDatum {
  DatumKind kind;
  std::vector<std::vector<int>> gcm;
  std::vector<int> d;          // symmetrizers
  std::vector<int> tau;        // diagram involution as a permutation
  bool affine = false;
  std::vector<int> delta_coeffs;  // marks of the null root (affine only)
};

struct GradingShift {
  std::vector<int> s;  // tau-minimal: s(alpha_i) = 1 iff i in {0, tau(0)}
  int f;               // s(delta) / s_hom(delta)
  int hvee;            // rho(c)
  int hvee_phi;        // hvee / f (integral for the shipped types)
  Scalar p;            // q^{-hvee_phi} = v^{-2 hvee_phi}
};

struct DatumBundle {
  CartanDatum datum;
  std::optional<GradingShift> shift;  // present iff affine
};

DatumBundle build_datum(DatumKind kind, const std::vector<int>& tau);

// Symmetrized bilinear form on the finite weight lattice of A1.
Rat pairing(int m1, int m2);

// rho as a weight (multiple of omega).
constexpr int kRho = 1;

// Exponent table for the affine sovereign twist Dbar: q-exponent on a
// basis vector of finite weight m.  The extension of s - f*s_hom off the
// root lattice is fixed per datum so that the diagonal gauge matches the
// crossing identity: for tau = (01) the exponent vanishes identically,
// for tau = id it reduces to the finite sovereign exponent -m.
int dbar_exponent(const CartanDatum& datum, int m);

}  // namespace reflekt
