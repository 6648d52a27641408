#include "linalg.hpp"

#include <cmath>

namespace fgf {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) * M_SQRT1_2;
}

CMatrix Rng::gaussian_matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = complex_gaussian();
  return m;
}

CMatrix Rng::hermitian_matrix(int dim) {
  CMatrix g = gaussian_matrix(dim, dim);
  return 0.5 * (g + g.adjoint());
}

CMatrix Rng::random_unitary(int dim) {
  CMatrix g = gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double ad = std::abs(d);
    q.col(j) *= (ad > 0.0) ? d / ad : Complex(1.0, 0.0);
  }
  return q;
}

CMatrix Rng::random_contraction(int dim, bool saturate) {
  CMatrix g = gaussian_matrix(dim, dim);
  const double s = spectral_norm(g);
  if (s <= 0.0) return CMatrix::Zero(dim, dim);
  g /= s;
  if (!saturate) g *= uniform();
  return g;
}

Rng Rng::fork(std::uint64_t tag) {
  // splitmix64 step keeps forked streams decorrelated from the parent.
  std::uint64_t z = gen_() + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd::Zero(0);
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const CMatrix& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

double trace_norm(const CMatrix& m) {
  return singular_values(m).sum();
}

double hs_norm(const CMatrix& m) { return m.norm(); }

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix polar_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix hpd_power(const CMatrix& a, double p, double floor_ratio) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed in hpd_power");
  Eigen::VectorXd ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  if (top <= 0.0) throw NumericError("matrix not positive in hpd_power");
  const double floor = top * floor_ratio;
  Eigen::VectorXd powed(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    powed(i) = std::pow(std::max(ev(i), floor), p);
  return es.eigenvectors() * powed.asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix hpd_geodesic(const CMatrix& a, const CMatrix& b, double t) {
  const CMatrix rt = hpd_power(a, 0.5);
  const CMatrix irt = hpd_power(a, -0.5);
  const CMatrix mid = hpd_power(irt * b * irt, t);
  return rt * mid * rt;
}

}  // namespace fgf
