#ifndef BLOCHSEP_BLOCH_HPP
#define BLOCHSEP_BLOCH_HPP

#include <vector>

#include "blochsep/states.hpp"
#include "blochsep/types.hpp"

namespace blochsep {

/// Expansion coefficients of a bipartite state over the su(d) generator
/// basis: local vectors r (length d1^2-1) and s (length d2^2-1), and the
/// correlation matrix T of shape (d1^2-1) x (d2^2-1).
struct BlochDecomposition {
  int d1 = 0;
  int d2 = 0;
  RealVector r;
  RealVector s;
  RealMatrix T;
};

/// r_i = (d1/2) Tr(rho g_i x I), s_j = (d2/2) Tr(rho I x g_j),
/// t_ij = (d1 d2 / 4) Tr(rho g_i x g_j). All coefficients are real for
/// Hermitian input; an imaginary residue above 1e-10 is rejected.
BlochDecomposition bipartite_decomposition(const DensityMatrix& rho);

/// Rebuild the density matrix a decomposition came from.
ComplexMatrix reconstruct(const BlochDecomposition& dec);

/// Basis operator indexed by k (1-based): the first m slots hold the
/// scaled identity (2 alpha / d) I_d, the remaining d^2-1 hold the su(d)
/// generators in canonical order.
ComplexMatrix delta_operator(int d, int k, int m, double alpha);

/// Real N-way array of generalized correlation coefficients. Mode i has
/// extent d_i^2 + m - 1; the first m slots of each mode are the identity
/// border. Data is stored flat with the first mode fastest.
struct CorrelationTensor {
  std::vector<int> dims;
  int border = 0;  // m
  std::vector<double> alphas;
  std::vector<int> extents;
  std::vector<double> data;

  int order() const { return static_cast<int>(dims.size()); }
  double at(const std::vector<int>& index) const;  // 0-based multi-index
};

/// w_{k1..kN} = (d1..dN / 2^N) Tr(rho delta_{k1} x ... x delta_{kN}).
/// For m = 0 this is the plain generator correlation tensor; for a
/// bipartite state it reproduces T as its m = 0 slice.
CorrelationTensor generalized_tensor(const DensityMatrix& rho, int m,
                                     const std::vector<double>& alphas);

}  // namespace blochsep

#endif  // BLOCHSEP_BLOCH_HPP
