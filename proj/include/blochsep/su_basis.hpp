#ifndef BLOCHSEP_SU_BASIS_HPP
#define BLOCHSEP_SU_BASIS_HPP

#include <vector>

#include "blochsep/types.hpp"

namespace blochsep {

/// The d^2-1 traceless Hermitian su(d) generators, normalized so that
/// Tr(g_i g_j) = 2 delta_ij.
struct GeneratorSet {
  int dim = 0;
  std::vector<ComplexMatrix> generators;
};

/// Generalized Gell-Mann matrices for dimension d >= 2. Ordering is fixed:
/// symmetric pair matrices |j><k| + |k><j| for j < k (lexicographic), then
/// the antisymmetric pairs -i|j><k| + i|k><j| in the same order, then the
/// d-1 diagonal matrices. For d = 2 this yields the Pauli triple x, y, z.
GeneratorSet gell_mann_generators(int d);

}  // namespace blochsep

#endif  // BLOCHSEP_SU_BASIS_HPP
