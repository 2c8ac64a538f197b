#pragma once

// Concrete modules: finite-type spin-j ladders, evaluation modules of the
// quantum loop algebra with grading-shift exponents, tensor products,
// duals, and the sovereign operators D and Dbar.
//
// Generator matrices never contain the spectral variable; the grading
// exponent per generator carries it, and shifted_gen applies z^exp.

#include <map>
#include <optional>
#include <string>

#include "reflekt/cartan.hpp"
#include "reflekt/linalg.hpp"

namespace reflekt {

struct Rep {
  DatumKind kind = DatumKind::A1;
  int dim = 0;
  std::map<std::string, Matrix> gen;   // E,F,K or E0,E1,F0,F1,K0,K1
  std::vector<int> weight;             // finite weight (multiple of omega)
  std::map<std::string, int> grading_exp;  // z-exponent under Sigma_z
  std::vector<int> legs;               // tensor-factor dimensions
  std::string label;

  const Matrix& at(const std::string& name) const;
};

enum class DualSide { Left, Right };

Rep trivial_rep(DatumKind kind);
// twoj = 2j; (twoj+1)-dimensional ladder with E e_k = [k] e_{k-1},
// F e_k = [2j-k] e_{k+1}, K = diag(q^{2j-2k}).
Rep spin_rep(int twoj);
// Evaluation module over A1affine: E0 = a F, F0 = a^{-1} E, K0 = K^{-1},
// grading exponents +-s(alpha_i) on E_i / F_i.
Rep eval_rep(const DatumBundle& bundle, int twoj, const Scalar& a);
// Coproduct action on V tensor W.  When ratio is given, the second leg is
// shifted by Sigma_ratio (relative spectral argument).
Rep tensor_rep(const Rep& v, const Rep& w,
               const std::optional<Scalar>& ratio = std::nullopt);
Rep dual_rep(const Rep& v, DualSide side);

// pi_{V,z}(g) = z^{grading_exp(g)} * gen(g).
Matrix shifted_gen(const Rep& v, const std::string& name, const Scalar& z);

// Names of the generators of the datum underlying v.
std::vector<std::string> generator_names(DatumKind kind);

// Defining-relation self check; throws RelationFailure on violation.
void check_relations(const Rep& v);

struct SovereignOps {
  Matrix D;     // diag(q^{-2(rho,mu)})
  Matrix Dbar;  // affine only; identity matrix otherwise
};

SovereignOps sovereign_ops(const Rep& v,
                           const std::optional<CartanDatum>& affine_datum);

}  // namespace reflekt
