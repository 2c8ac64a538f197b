#pragma once

// K-matrix solvers and verifiers: the finite-type quasi K-matrix, the
// spectral K(z) from the twisted intertwining system, the dual K-matrix
// K~(z) = Dbar K(pz)^{-1}, the tensor K-matrix, and reflection-equation
// residuals.

#include "reflekt/qsp.hpp"
#include "reflekt/rmatrix.hpp"

namespace reflekt {

// Quasi K-matrix Ups = 1 + sum c_n E^n solved from Ups b = psi(b) Ups.
Matrix quasi_K_finite(const Rep& v, const SatakeDatum& s);

// Spectral K(z) from K(z) pi_z(b) = G pi_{1/z}(b) G^{-1} K(z) over all
// coideal generators; one-dimensional solution space, top-weight diagonal
// entry normalized to 1.
SpectralOperator solve_spectral_K(const Rep& v, const SatakeDatum& s);

// K~(z) = Dbar * K(pz)^{-1}.
SpectralOperator dual_K(const SpectralOperator& k, const Matrix& dbar,
                        const Scalar& p);

// Tensor K-matrix on M (x) V: R21(z) (1 (x) K_V(z)) R(z), with the psi
// twist on the first leg realized by the shipped trivial identification.
SpectralOperator tensor_K(const SpectralOperator& r_mv,
                          const SpectralOperator& r_vm,
                          const SpectralOperator& k_v);

enum class ReflectionMode { Untwisted, Twisted };

// Residual of the spectral reflection equation on V(y) (x) W(z):
//   R21(z/y) K2(z) R(yz) K1(y) - K1(y) R21(yz) K2(z) R(z/y).
// Twisted mode conjugates the psi-marked legs by the twist matrices,
// which are trivial for the shipped affine catalogue.
Matrix reflection_residual(const SpectralOperator& r_vw,
                           const SpectralOperator& r_wv,
                           const SpectralOperator& k_v,
                           const SpectralOperator& k_w, ReflectionMode mode,
                           const Matrix* g_v = nullptr,
                           const Matrix* g_w = nullptr);

// Residual of the dual reflection equation with
// R~(u) = Ad(1 (x) Dbar)(R(p^2 u)^{-1}):
//   R(z/y)^{-1} K~2(z) R~21(yz) K~1(y) - K~1(y) R~(yz) K~2(z) R21(z/y)^{-1}.
Matrix dual_reflection_residual(const SpectralOperator& r_vw,
                                const SpectralOperator& r_wv,
                                const SpectralOperator& kt_v,
                                const SpectralOperator& kt_w,
                                const Matrix& dbar, const Scalar& p);

}  // namespace reflekt
