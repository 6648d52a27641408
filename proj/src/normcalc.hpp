#pragma once

#include "convolution.hpp"

namespace fgf {

// Elementary operator A |-> sum_k V_k A W_k on square matrices.
struct ElementaryMapCoefficients {
  std::vector<std::pair<CMatrix, CMatrix>> pairs;  // (V_k, W_k)
};

struct SolverConfig {
  int max_iter = 20000;
  double tol_rel = 1e-6;
  std::uint64_t seed = 1;
  double admm_rho = 1.0;
  double cone_damping = 0.5;
  // Relative feasible perturbation applied to the quotient solver's warm
  // start; nonzero values force the descent path instead of letting the
  // solver certify the analytic start directly.
  double warm_start_noise = 0.0;
};

struct SolverReport {
  double value = 0.0;
  double lower_bracket = 0.0;
  double upper_bracket = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Completely bounded norm of the elementary operator, computed as
// min over positive definite P of
//   || sum_kl P_kl V_k V_l^* ||^{1/2} * || sum_lm (P^{-1})_lm W_l^* W_m ||^{1/2}
// after reducing the coefficient families to linearly independent ones.
// The minimization runs a damped geometric-mean fixed-point iteration on the
// positive definite cone with annealed spectral smoothing, multi-started
// from the config seed.  value (= upper_bracket) is the best certified upper
// bound; lower_bracket comes from evaluating the map on contractions.
SolverReport haagerup_norm(const ElementaryMapCoefficients& coeffs,
                           const SolverConfig& cfg);

// Largest ||Phi^{(m)}(X)|| over structured and random contractions X at
// amplification level m (identity, swap pattern when m equals the coefficient
// size, random unitaries).  Always a valid lower bound for the cb norm.
double amplified_lower_bound(const ElementaryMapCoefficients& coeffs, int m,
                             int trials, std::uint64_t seed);

// Coefficient families of the two adjoint maps, acting on the model space of
// dimension total_dim: {( (1/|G|) lambda(s), T-check lambda(s) )} and
// {( (1/|G|) lambda(s), lambda(s^{-1}) T )}.
ElementaryMapCoefficients gamma_adjoint_coefficients(const UnitaryDual& dual,
                                                     const BlockOperator& t);
ElementaryMapCoefficients gamma_check_adjoint_coefficients(
    const UnitaryDual& dual, const BlockOperator& t);

// Transpose map on d x d matrices, the standard hardness gate: its cb norm
// is exactly d.
ElementaryMapCoefficients transpose_map_coefficients(int d);

// cb norm of Gamma^* at T via the Haagerup solver.
SolverReport cb_norm_gamma_adjoint(const UnitaryDual& dual,
                                   const BlockOperator& t,
                                   const SolverConfig& cfg);

// inf { sum_b D_b ||w_hat(b)||_{S^1} : Gamma w = u } over functions w on
// G x G, the Fourier-series norm taken over the product dual.  Solved by
// ADMM in isometric Fourier coordinates with blockwise singular value
// thresholding; the affine constraint projects in closed form along the
// cosets {(s r, r)}.  lower_bracket carries an independent duality bound.
SolverReport quotient_norm_projective(const UnitaryDual& dual,
                                      const ScalarFunction& u,
                                      const SolverConfig& cfg);

// Pair (materialized level-n spectral norm, closed-form value
// max_pi d_pi^{-1/2} || [ sum_k Tr(T_ki^* T_kj) ]_ij ||^{1/2}).
std::pair<double, double> level_n_dual_norm_check(const UnitaryDual& dual,
                                                  const BlockOperatorMatrix& ts);

}  // namespace fgf
