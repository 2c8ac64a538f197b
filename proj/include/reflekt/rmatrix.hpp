#pragma once

// R-matrix engine: the diagonal kappa operator, the finite-type quasi
// R-matrix by graded solving, spectral R(z) by intertwiner solving with
// the kappa anchor at z = 0, and Yang-Baxter / crossing verification.
//
// Spectral operators are plain Matrices whose entries contain the z
// variable; substitution produces other arguments.

#include "reflekt/reps.hpp"

namespace reflekt {

struct SpectralOperator {
  Matrix mat;                 // entries rational in z
  std::string normalization;  // anchor description
};

// Diagonal weight operator: acts on V_m tensor W_m' by v^{m m'}.
Matrix kappa(const Rep& v, const Rep& w);

// Quasi R-matrix Xi on V tensor W: unitriangular, solved gradewise from
// the intertwining identity for R = kappa * Xi.
Matrix quasi_R_finite(const Rep& v, const Rep& w);

// R = kappa * Xi.
Matrix finite_R(const Rep& v, const Rep& w);

// Spectral R(z): one-dimensional solution of the intertwining system,
// anchored so that R(0) equals kappa on the finite weight data.
SpectralOperator spectral_R(const Rep& v, const Rep& w,
                            const DatumBundle& bundle);

// Crossing check: LHS = (((R(z)^{t2})^{-1})^{t2})^{-1}, RHS with the p^2
// argument shift conjugated by 1 (x) Dbar^{-1}.  Returns the residual
// after extracting the proportionality scale at the first nonzero entry.
struct CrossingResult {
  Matrix residual;
  Scalar scale;
};
CrossingResult verify_crossing(const SpectralOperator& r, const Matrix& dbar,
                               const Scalar& p);

// R12(y) R13(yz) R23(z) - R23(z) R13(yz) R12(y) on three legs.
Matrix spectral_ybe_residual(const SpectralOperator& r);

// Constant Yang-Baxter residual for a finite-type R on V tensor V tensor V.
Matrix finite_ybe_residual(const Matrix& r, int dim);

// Shared solver plumbing: unique solution of sum_j x_j cols[j] = rhs.
std::vector<Scalar> solve_unique(const std::vector<Matrix>& cols,
                                 const Matrix& rhs);

}  // namespace reflekt
