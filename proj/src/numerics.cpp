#include "blochsep/numerics.hpp"

#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace blochsep {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<double> singular_values(const RealMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::JacobiSVD<RealMatrix> svd(m);
  if (svd.info() != Eigen::Success)
    throw NumericalFailure("singular value decomposition did not converge");
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

double trace_norm(const RealMatrix& m) {
  const auto sv = singular_values(m);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double spectral_norm(const RealMatrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

double trace_norm(const ComplexMatrix& m) {
  RealMatrix embed(2 * m.rows(), 2 * m.cols());
  embed << m.real(), -m.imag(), m.imag(), m.real();
  return 0.5 * trace_norm(embed);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "hermitian_eigenvalues: matrix must be square");
  const double deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
  require(deviation <= 1e-10, "hermitian_eigenvalues: matrix is not Hermitian (deviation " +
                                  std::to_string(deviation) + ")");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("Hermitian eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace blochsep
