#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace fgf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Thrown when an iterative routine fails to reach its target accuracy or a
// computed object violates a structural invariant beyond tolerance.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic random stream.  Wraps mt19937_64 but generates uniforms and
// gaussians by hand (bit shift + Box-Muller) so that sequences are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53 bits of the raw draw.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double gaussian();
  Complex complex_gaussian();

  CMatrix gaussian_matrix(int rows, int cols);
  CMatrix hermitian_matrix(int dim);
  // Haar-like random unitary: QR of a gaussian matrix with phase fixing.
  CMatrix random_unitary(int dim);
  // Random matrix rescaled to spectral norm <= 1 (exactly 1 when saturate).
  CMatrix random_contraction(int dim, bool saturate);

  // Derive an independent deterministic stream for a tagged subtask.
  Rng fork(std::uint64_t tag);

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

double spectral_norm(const CMatrix& m);
double trace_norm(const CMatrix& m);
double hs_norm(const CMatrix& m);
Eigen::VectorXd singular_values(const CMatrix& m);

// Largest absolute entry; zero for empty matrices.
double max_abs(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Unitary factor of the polar decomposition, via SVD.
CMatrix polar_unitary(const CMatrix& m);

// Hermitian positive definite matrix powers through eigendecomposition.
// Eigenvalues below floor_ratio * max are clamped before the power is taken.
CMatrix hpd_power(const CMatrix& a, double p, double floor_ratio = 1e-14);

// Riemannian geodesic A #_t B on the positive definite cone,
// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.  t = 1/2 is the geometric mean.
CMatrix hpd_geodesic(const CMatrix& a, const CMatrix& b, double t);

}  // namespace fgf
