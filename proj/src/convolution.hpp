#pragma once

#include "fourier.hpp"

namespace fgf {

// A function on G x G; entry (s, t) is w(s, t).
using BiFunction = CMatrix;

// w(s, t) = u(s) v(t).
BiFunction tensor_function(const ScalarFunction& u, const ScalarFunction& v);

// Flattened copy living on the product group, index s * |G| + t.
ScalarFunction flatten_bifunction(const BiFunction& w);

// Gamma w (s) = (1/|G|) sum_r w(s r, r).
ScalarFunction gamma_map(const FiniteGroup& g, const BiFunction& w);

// Gamma-check w (s) = (1/|G|) sum_r w(s r, r^{-1}).
ScalarFunction gamma_check_map(const FiniteGroup& g, const BiFunction& w);

// (u * v)(s) = (1/|G|) sum_r u(r) v(r^{-1} s).
ScalarFunction convolve(const FiniteGroup& g, const ScalarFunction& u,
                        const ScalarFunction& v);

// Operator on the model space of G x G, blocked over irrep pairs and
// amplified to matrix level n: block (p, q) has size
// (n * d_p * d_q) x (n * d_p * d_q), with level-index-major layout.
struct BiBlockOperator {
  int level = 1;
  std::vector<std::vector<CMatrix>> blocks;  // blocks[p][q]
};

// An n x n matrix of block operators, the input of the amplified adjoints.
using BlockOperatorMatrix = std::vector<std::vector<BlockOperator>>;

// Adjoint of gamma_map against the dual pairing:
// Gamma^*(T) = (1/|G|) sum_s lambda(s) (x) (T-check lambda(s)).
BiBlockOperator gamma_adjoint(const UnitaryDual& dual, const BlockOperator& t);
BiBlockOperator gamma_adjoint(const UnitaryDual& dual,
                              const BlockOperatorMatrix& ts);

// Adjoint of gamma_check_map:
// Gamma-check^*(T) = (1/|G|) sum_s lambda(s) (x) (lambda(s^{-1}) T).
BiBlockOperator gamma_check_adjoint(const UnitaryDual& dual,
                                    const BlockOperator& t);
BiBlockOperator gamma_check_adjoint(const UnitaryDual& dual,
                                    const BlockOperatorMatrix& ts);

// (1/|G|) sum_s pi(s^{-1}) A pi(s); equals (Tr A / d_pi) I.
CMatrix tracial_expectation(const Irrep& pi, const CMatrix& a);

// (1/|G|) sum_s pi'(s) (x) pi(s); a projection, nonzero exactly when pi' is
// the conjugate partner of pi, in which case it has rank one.
CMatrix projection_P(const FiniteGroup& g, const Irrep& pi_prime,
                     const Irrep& pi);

// d_pi (1/|G|) sum_s pi(s) (x) pi(s^{-1}); unitary, and coincides with the
// tensor-factor swap in every unitary realization.
CMatrix flip_unitary(const FiniteGroup& g, const Irrep& pi);

// Distance from m to the nearest complex permutation-support matrix with
// unit entries (greedy row argmax pattern).
double nearest_permutation_distance(const CMatrix& m);

// Largest block spectral norm of the materialized operator.
double bi_spectral_norm(const BiBlockOperator& b);

// One line per irrep pair: pi_prime,pi,n,norm.
std::string norm_table_csv(const UnitaryDual& dual, const BiBlockOperator& b);

}  // namespace fgf
