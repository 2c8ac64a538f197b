#pragma once

// Boundary transfer matrices: the two-row evaluated operator on a chain of
// evaluation modules, commutativity / multiplicativity checks, the XXZ
// Hamiltonian, the finite-type transfer maps (triviality and Kolb
// variants), and the balance data with its coproduct guard.

#include "reflekt/kmatrix.hpp"

namespace reflekt {

struct TransferMatrix {
  Matrix mat;            // acts on V1 (x) ... (x) VN; 1x1 when N = 0
  std::string aux;       // auxiliary module label
  std::string boundary;  // description of the (K, K~) pair used
};

// Two-row operator t(z) = Tr_W[ K~_W R21-cable K_W R-cable ] with W as the
// last tensor leg.  K and K~ are solved from the Satake datum; the cabled
// factors are R_{Vi,W}(z) left to right and their flips right to left.
TransferMatrix build_transfer(const std::vector<Rep>& vs, const Rep& w,
                              const SatakeDatum& s);

// Same contraction with caller-supplied boundary matrices (used by the
// gauge-invariance and multiplicativity checks, and by specialized runs).
TransferMatrix build_transfer_from(const std::vector<Rep>& vs, const Rep& w,
                                   const SpectralOperator& k,
                                   const SpectralOperator& kt);

// Transfer with the given variable bindings applied to every solved part
// before cabling; keeps specialized runs exact while bounding gcd cost.
TransferMatrix build_transfer_specialized(const std::vector<Rep>& vs,
                                          const Rep& w, const SatakeDatum& s,
                                          const std::map<int, Scalar>& bind);

// Transfer matrix with the spectral variable replaced by arg.
TransferMatrix at_argument(const TransferMatrix& t, const Scalar& arg);

// t1 t2 - t2 t1; throws ShapeMismatch on unequal quantum spaces.
Matrix commutator_check(const TransferMatrix& t1, const TransferMatrix& t2);

struct MultiplicativityResult {
  Matrix residual;  // tensor - scale * product
  Scalar scale;
  Matrix tensor;    // t^{(V(y) (x) W(z))}
  Matrix product;   // t^{(V)}(y) t^{(W)}(z)
};

// Tensor-auxiliary transfer against the product of the single-auxiliary
// ones, with the proportionality scalar extracted and reported.
MultiplicativityResult multiplicativity_check(const Rep& v, const Rep& w,
                                              const std::vector<Rep>& quantum,
                                              const SatakeDatum& s);

// H = d/dz t(z) at z = 1 on a homogeneous chain, with the scalar part
// removed (trace-normalized).  Throws SpecializationPole on a z = 1 pole.
Matrix hamiltonian(const std::vector<Rep>& vs, const SatakeDatum& s);

enum class FiniteVariant { DualK, Kolb };

// Finite-type transfer element acting on a probe module:
//   dualK: Tr_2[(1 (x) D_V Ups^{-1} G^{-1}) R21 (1 (x) G Ups) R]
//   kolb:  Tr_2[(1 (x) u_V) R21 (1 (x) G Ups) R]
Matrix finite_transfer(const Rep& probe, const Rep& v, const SatakeDatum& s,
                       FiniteVariant variant);

struct BalanceData {
  Scalar c;    // ribbon scalar c_lambda = q^{-(lambda, lambda + 2 rho)}
  Matrix u;    // Drinfeld operator u_V = D_V c^{-1}
  Matrix b;    // balance operator c * Id
};

// Balance data for an irreducible finite-type module; verifies the
// blockwise coproduct axiom b_{V(x)V} = (b (x) b) (R21 R)^{-1} on the
// irreducible components of V (x) V before returning (AxiomFailure).
BalanceData balance_data(const Rep& v);

}  // namespace reflekt
