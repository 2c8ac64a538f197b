#pragma once

// Quantum symmetric pair data: Satake-type defining data, coideal
// generator matrices on modules, and the operational twist realization
// (argument inversion plus a per-module conjugation matrix G).

#include "reflekt/reps.hpp"

namespace reflekt {

struct SatakeDatum {
  DatumKind kind;
  std::vector<int> tau;
  // Affine quasi-split parameters: gamma_0 = xi^{-1}, gamma_1 = xi, sigma = 0.
  Scalar xi;
  // Finite A1 parameters.
  Scalar gamma, sigma;
};

SatakeDatum affine_quasi_split(const DatumBundle& bundle, const Scalar& xi);
SatakeDatum finite_a1(const Scalar& gamma, const Scalar& sigma);

// Coideal generator matrices on V.  Spectral mode applies the grading
// exponents, producing matrices rational in z; the Cartan part k0 k1^{-1}
// is included for the affine datum.
std::vector<std::pair<std::string, Matrix>> coideal_action(
    const SatakeDatum& s, const Rep& v, bool spectral);

// Twisted generator psi(b) on V for the finite datum: the image of the
// coideal generator under the gauge-corrected flip twist, normalized so a
// unitriangular quasi K-matrix exists on every spin ladder.
Matrix psi_B(const SatakeDatum& s, const Rep& v);

struct TwistIdentification {
  Matrix G;              // conjugation realizing V^psi = V
  bool invert_argument;  // spectral rule z -> 1/z
};

TwistIdentification twist_identification(const SatakeDatum& s, const Rep& v);

}  // namespace reflekt
