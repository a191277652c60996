#ifndef BLOCHSEP_NUMERICS_HPP
#define BLOCHSEP_NUMERICS_HPP

#include <vector>

#include "blochsep/types.hpp"

namespace blochsep {

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Singular values in descending order; count = min(rows, cols).
/// Small values are kept as computed, never truncated.
std::vector<double> singular_values(const RealMatrix& m);

/// Sum of singular values.
double trace_norm(const RealMatrix& m);

/// Largest singular value (0 for an empty matrix).
double spectral_norm(const RealMatrix& m);

/// Trace norm of a complex matrix, computed through the real embedding
/// [[Re, -Im], [Im, Re]] whose singular values are those of the input,
/// each with doubled multiplicity.
double trace_norm(const ComplexMatrix& m);

/// Real spectrum of a Hermitian matrix, ascending. The input must be
/// square and Hermitian to within 1e-10 (max elementwise deviation).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace blochsep

#endif  // BLOCHSEP_NUMERICS_HPP
