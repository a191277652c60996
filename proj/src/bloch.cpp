#include "blochsep/bloch.hpp"

#include <cmath>

#include "blochsep/numerics.hpp"
#include "blochsep/su_basis.hpp"

namespace blochsep {

namespace {

// Tr(rho * op) without forming the product matrix.
Complex trace_with(const ComplexMatrix& rho, const ComplexMatrix& op) {
  return (rho.transpose().cwiseProduct(op)).sum();
}

double real_coefficient(Complex value) {
  if (std::abs(value.imag()) >= 1e-10)
    throw ContractViolation("Bloch coefficient has an imaginary residue; state is not Hermitian");
  return value.real();
}

}  // namespace

BlochDecomposition bipartite_decomposition(const DensityMatrix& rho) {
  require(rho.num_subsystems() == 2, "bipartite_decomposition: state must have two subsystems");
  const int d1 = rho.dims[0];
  const int d2 = rho.dims[1];
  const GeneratorSet g1 = gell_mann_generators(d1);
  const GeneratorSet g2 = gell_mann_generators(d2);
  const ComplexMatrix id1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(d2, d2);

  BlochDecomposition dec;
  dec.d1 = d1;
  dec.d2 = d2;
  const int p = d1 * d1 - 1;
  const int q = d2 * d2 - 1;
  dec.r.resize(p);
  dec.s.resize(q);
  dec.T.resize(p, q);

  for (int i = 0; i < p; ++i)
    dec.r(i) = 0.5 * d1 * real_coefficient(trace_with(rho.matrix, kron(g1.generators[i], id2)));
  for (int j = 0; j < q; ++j)
    dec.s(j) = 0.5 * d2 * real_coefficient(trace_with(rho.matrix, kron(id1, g2.generators[j])));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      dec.T(i, j) = 0.25 * d1 * d2 *
                    real_coefficient(trace_with(rho.matrix, kron(g1.generators[i], g2.generators[j])));
    }
  }
  return dec;
}

ComplexMatrix reconstruct(const BlochDecomposition& dec) {
  const int d1 = dec.d1;
  const int d2 = dec.d2;
  const GeneratorSet g1 = gell_mann_generators(d1);
  const GeneratorSet g2 = gell_mann_generators(d2);
  const ComplexMatrix id1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(d2, d2);

  ComplexMatrix rho = ComplexMatrix::Identity(d1 * d2, d1 * d2);
  for (int i = 0; i < dec.r.size(); ++i) rho += dec.r(i) * kron(g1.generators[i], id2);
  for (int j = 0; j < dec.s.size(); ++j) rho += dec.s(j) * kron(id1, g2.generators[j]);
  for (int i = 0; i < dec.T.rows(); ++i)
    for (int j = 0; j < dec.T.cols(); ++j)
      rho += dec.T(i, j) * kron(g1.generators[i], g2.generators[j]);
  return rho / static_cast<double>(d1 * d2);
}

ComplexMatrix delta_operator(int d, int k, int m, double alpha) {
  require(d >= 2, "delta_operator: dimension must be at least 2");
  require(m >= 0, "delta_operator: border must be nonnegative");
  require(alpha >= 0.0, "delta_operator: alpha must be nonnegative");
  require(k >= 1 && k <= d * d + m - 1, "delta_operator: index out of range");
  if (k <= m) return (2.0 * alpha / d) * ComplexMatrix::Identity(d, d);
  return gell_mann_generators(d).generators[k - m - 1];
}

double CorrelationTensor::at(const std::vector<int>& index) const {
  require(static_cast<int>(index.size()) == order(), "tensor index has wrong length");
  std::size_t offset = 0;
  std::size_t stride = 1;
  for (int i = 0; i < order(); ++i) {
    require(index[i] >= 0 && index[i] < extents[i], "tensor index out of range");
    offset += static_cast<std::size_t>(index[i]) * stride;
    stride *= extents[i];
  }
  return data[offset];
}

CorrelationTensor generalized_tensor(const DensityMatrix& rho, int m,
                                     const std::vector<double>& alphas) {
  const int n = rho.num_subsystems();
  require(static_cast<int>(alphas.size()) == n,
          "generalized_tensor: one alpha per subsystem required");
  require(m >= 0, "generalized_tensor: border must be nonnegative");
  for (double a : alphas) require(a >= 0.0, "generalized_tensor: alphas must be nonnegative");

  CorrelationTensor w;
  w.dims = rho.dims;
  w.border = m;
  w.alphas = alphas;
  w.extents.resize(n);

  double scale = 1.0;
  std::size_t total = 1;
  std::vector<std::vector<ComplexMatrix>> ops(n);
  for (int i = 0; i < n; ++i) {
    const int d = rho.dims[i];
    w.extents[i] = d * d + m - 1;
    total *= w.extents[i];
    scale *= 0.5 * d;
    const GeneratorSet basis = gell_mann_generators(d);
    ops[i].reserve(w.extents[i]);
    for (int k = 0; k < m; ++k)
      ops[i].push_back((2.0 * alphas[i] / d) * ComplexMatrix::Identity(d, d));
    for (const auto& g : basis.generators) ops[i].push_back(g);
  }

  w.data.resize(total);
  std::vector<int> index(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    ComplexMatrix op = ops[0][index[0]];
    for (int i = 1; i < n; ++i) op = kron(op, ops[i][index[i]]);
    w.data[flat] = scale * real_coefficient(trace_with(rho.matrix, op));
    // advance the multi-index, first mode fastest
    for (int i = 0; i < n; ++i) {
      if (++index[i] < w.extents[i]) break;
      index[i] = 0;
    }
  }
  return w;
}

}  // namespace blochsep
