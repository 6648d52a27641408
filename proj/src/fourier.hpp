#pragma once

#include "dual.hpp"

namespace fgf {

// A complex-valued function on the group, indexed by element.
using ScalarFunction = CVector;

// An element of the group von Neumann algebra presented blockwise: one
// matrix per irrep, blocks[p] of size dim(p) x dim(p).
struct BlockOperator {
  std::vector<CMatrix> blocks;
};

BlockOperator zero_operator(const UnitaryDual& dual);
BlockOperator identity_operator(const UnitaryDual& dual);
// Block picture of the left translation lambda(s).
BlockOperator lambda_operator(const UnitaryDual& dual, int s);

// u_hat(pi) = (1/|G|) sum_s u(s) pi(s^{-1}).
BlockOperator fourier_transform(const UnitaryDual& dual,
                                const ScalarFunction& u);

// u(s) = sum_pi d_pi Tr(u_hat(pi) pi(s)).
ScalarFunction inverse_transform(const UnitaryDual& dual,
                                 const BlockOperator& t);

// <u, T> = sum_pi d_pi Tr(u_hat(pi) T_pi).  Bilinear, no conjugation.
Complex dual_pairing(const UnitaryDual& dual, const ScalarFunction& u,
                     const BlockOperator& t);

// u_check(s) = u(s^{-1}).
ScalarFunction check_function(const FiniteGroup& g, const ScalarFunction& u);

// Blockwise check: T_check_pi = (Omega_pi T_sigma Omega_pi^*)^t with sigma
// the conjugate partner of pi, so that <u, T_check> = <u_check, T>.
BlockOperator check_operator(const UnitaryDual& dual, const BlockOperator& t);

double norm_A(const UnitaryDual& dual, const ScalarFunction& u);
double norm_ADelta(const UnitaryDual& dual, const ScalarFunction& u);
double norm_Agamma(const UnitaryDual& dual, const ScalarFunction& u);

// max_pi of the block spectral norm.
double norm_VN(const UnitaryDual& dual, const BlockOperator& t);
// max_pi d_pi^{-1/2} of the block Hilbert-Schmidt norm; dual to norm_ADelta.
double norm_ADelta_dual(const UnitaryDual& dual, const BlockOperator& t);

// Direct sum of the blocks on the model space of dimension total_dim.
CMatrix assemble_block_diagonal(const UnitaryDual& dual,
                                const BlockOperator& t);

ScalarFunction random_function(Rng& rng, int order);
BlockOperator random_operator(Rng& rng, const UnitaryDual& dual);

}  // namespace fgf
