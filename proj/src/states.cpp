#include "blochsep/states.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "blochsep/numerics.hpp"

namespace blochsep {

namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void check_dims(const std::vector<int>& dims) {
  require(!dims.empty(), "state needs at least one subsystem");
  for (int d : dims) require(d >= 2, "subsystem dimensions must be at least 2");
}

}  // namespace

int PureState::total_dim() const { return product(dims); }

int DensityMatrix::total_dim() const { return product(dims); }

DensityMatrix density_from_pure(const PureState& psi) {
  check_dims(psi.dims);
  require(psi.amplitudes.size() == psi.total_dim(),
          "amplitude count must match the product of subsystem dimensions");
  require(std::abs(psi.amplitudes.norm() - 1.0) <= 1e-12,
          "pure state must be normalized");
  return {psi.dims, psi.amplitudes * psi.amplitudes.adjoint()};
}

DensityMatrix maximally_mixed(const std::vector<int>& dims) {
  check_dims(dims);
  const int d = product(dims);
  return {dims, ComplexMatrix::Identity(d, d) / static_cast<double>(d)};
}

DensityMatrix mix(double x, const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dims == b.dims, "mix: subsystem dimension lists must match");
  require(x >= 0.0 && x <= 1.0, "mix: weight must lie in [0, 1]");
  return {a.dims, x * a.matrix + (1.0 - x) * b.matrix};
}

PureState bell_pair() {
  ComplexVector amps = ComplexVector::Zero(4);
  amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
  return {{2, 2}, amps};
}

DensityMatrix horodecki_2x4(double b) {
  require(b > 0.0 && b < 1.0, "horodecki_2x4: b must lie strictly inside (0, 1)");
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 4; ++i) m(i, i) = b;
  for (int i = 0; i < 3; ++i) {
    m(i, i + 5) = b;
    m(i + 5, i) = b;
    m(i + 5, i + 5) = b;
  }
  const double diag = 0.5 * (1.0 + b);
  const double off = 0.5 * std::sqrt(1.0 - b * b);
  m(4, 4) = diag;
  m(7, 7) = diag;
  m(4, 7) = off;
  m(7, 4) = off;
  m /= 7.0 * b + 1.0;
  return {{2, 4}, m};
}

PureState ghz_perturbed(double eps) {
  const double gamma = std::sqrt(2.0 + eps * eps);
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = 1.0 / gamma;
  amps(6) = eps / gamma;  // |110>
  amps(7) = 1.0 / gamma;
  return {{2, 2, 2}, amps};
}

DensityMatrix random_separable(const std::vector<int>& dims, int k_terms, std::uint64_t seed) {
  check_dims(dims);
  require(k_terms >= 1, "random_separable: need at least one product term");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> weights(k_terms);
  for (double& w : weights) w = expo(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  const int d = product(dims);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (int t = 0; t < k_terms; ++t) {
    ComplexMatrix term = ComplexMatrix::Identity(1, 1);
    for (int dk : dims) {
      ComplexVector v(dk);
      for (int j = 0; j < dk; ++j) v(j) = Complex(gauss(rng), gauss(rng));
      v /= v.norm();
      term = kron(term, ComplexMatrix(v * v.adjoint()));
    }
    rho += (weights[t] / total) * term;
  }
  return {dims, rho};
}

ValidationReport validate(const DensityMatrix& rho) {
  ValidationReport report;
  report.finite = rho.matrix.allFinite() &&
                  rho.matrix.rows() == rho.matrix.cols() &&
                  rho.matrix.rows() == rho.total_dim();
  if (!report.finite) return report;

  report.hermiticity_deviation = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  report.trace_deviation = std::abs(rho.matrix.trace() - Complex(1.0, 0.0));

  const ComplexMatrix herm = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("validate: eigensolver did not converge");
  report.min_eigenvalue = solver.eigenvalues().minCoeff();

  report.hermitian = report.hermiticity_deviation <= 1e-10;
  report.unit_trace = report.trace_deviation <= 1e-10;
  report.positive = report.min_eigenvalue >= -1e-9;
  return report;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  const int n = rho.num_subsystems();
  require(subsystem >= 0 && subsystem < n, "partial_transpose: subsystem index out of range");
  require(rho.matrix.rows() == rho.total_dim() && rho.matrix.cols() == rho.total_dim(),
          "partial_transpose: matrix size does not match dims");

  // Group the basis as (pre, chosen, post); swap the chosen factor's
  // row/column indices.
  const int dk = rho.dims[subsystem];
  int post = 1;
  for (int i = subsystem + 1; i < n; ++i) post *= rho.dims[i];
  const int pre = rho.total_dim() / (dk * post);

  ComplexMatrix out(rho.matrix.rows(), rho.matrix.cols());
  for (int a = 0; a < pre; ++a)
    for (int ap = 0; ap < pre; ++ap)
      for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j)
          for (int b = 0; b < post; ++b)
            for (int bp = 0; bp < post; ++bp)
              out((a * dk + j) * post + b, (ap * dk + i) * post + bp) =
                  rho.matrix((a * dk + i) * post + b, (ap * dk + j) * post + bp);
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  require(rho.num_subsystems() == 2, "realign: state must be bipartite");
  const int d1 = rho.dims[0];
  const int d2 = rho.dims[1];
  ComplexMatrix out(d1 * d1, d2 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l)
          out(i * d1 + j, k * d2 + l) = rho.matrix(i * d2 + k, j * d2 + l);
  return out;
}

}  // namespace blochsep
