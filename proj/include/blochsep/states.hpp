#ifndef BLOCHSEP_STATES_HPP
#define BLOCHSEP_STATES_HPP

#include <cstdint>
#include <vector>

#include "blochsep/types.hpp"

namespace blochsep {

/// Normalized state vector over subsystems with the given dimensions.
/// Composite basis order is lexicographic with the first subsystem slowest.
struct PureState {
  std::vector<int> dims;
  ComplexVector amplitudes;

  int total_dim() const;
};

/// Density matrix with an explicit subsystem dimension list. Fields are
/// plain; the named constructors below produce valid states and validate()
/// reports on anything else.
struct DensityMatrix {
  std::vector<int> dims;
  ComplexMatrix matrix;

  int total_dim() const;
  int num_subsystems() const { return static_cast<int>(dims.size()); }
};

struct ValidationReport {
  double hermiticity_deviation = 0.0;  // max |rho - rho^dag|
  double trace_deviation = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;         // of the Hermitian part
  bool finite = false;
  bool hermitian = false;   // deviation <= 1e-10
  bool unit_trace = false;  // deviation <= 1e-10
  bool positive = false;    // min eigenvalue >= -1e-9

  bool pass() const { return finite && hermitian && unit_trace && positive; }
};

/// Rank-one projector |psi><psi|. The input must be normalized to 1e-12.
DensityMatrix density_from_pure(const PureState& psi);

/// I_D / D over the given subsystem dimensions (each >= 2).
DensityMatrix maximally_mixed(const std::vector<int>& dims);

/// Convex mixture x*a + (1-x)*b; dimension lists must match, 0 <= x <= 1.
DensityMatrix mix(double x, const DensityMatrix& a, const DensityMatrix& b);

/// (|00> + |11>) / sqrt(2) on dims (2,2).
PureState bell_pair();

/// The 2x4 positive-partial-transpose entangled family, 0 < b < 1.
DensityMatrix horodecki_2x4(double b);

/// (|000> + eps|110> + |111>) / sqrt(2 + eps^2) on dims (2,2,2).
PureState ghz_perturbed(double eps);

/// Convex mixture of k_terms product states: Haar-random pure factors per
/// subsystem, weights uniform on the simplex. Deterministic for a seed.
DensityMatrix random_separable(const std::vector<int>& dims, int k_terms, std::uint64_t seed);

/// Invariant report; never throws on bad states.
ValidationReport validate(const DensityMatrix& rho);

/// Transpose the chosen tensor factor's indices only (subsystem is 0-based).
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

/// Realignment of a bipartite state: shape d1^2 x d2^2, entry at row (i,j),
/// column (k,l) equal to <i|<k| rho |j>|l>, row/column pairs lexicographic.
ComplexMatrix realign(const DensityMatrix& rho);

}  // namespace blochsep

#endif  // BLOCHSEP_STATES_HPP
