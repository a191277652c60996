#ifndef BLOCHSEP_CRITERIA_HPP
#define BLOCHSEP_CRITERIA_HPP

#include <string>
#include <vector>

#include "blochsep/bloch.hpp"
#include "blochsep/states.hpp"
#include "blochsep/types.hpp"

namespace blochsep {

/// Detection margin above which a bound violation counts as entanglement.
inline constexpr double kDetectionTol = 1e-9;

enum class CriterionId { Thm1, Thm2, Vb, Lb, Vm, Hm, Lm, Ppt, Ccnr };

std::string to_string(CriterionId id);
CriterionId criterion_from_string(const std::string& name);

/// Parameters of one criterion evaluation. Presets pin their parameters:
/// vb = (alpha=beta=0, m=0), lb = (alpha=beta=1, m=1), vm/hm = (all
/// alphas 0, m=0), lm = (all alphas 1, m=1). Mode subsets and subsystem
/// indices are 0-based here; text and JSON surfaces print them 1-based.
struct CriterionParams {
  CriterionId id = CriterionId::Thm1;
  int border = 0;                  // m
  double alpha = 0.0;              // bipartite, pairs with the second factor bound
  double beta = 0.0;               // bipartite, pairs with the first factor bound
  std::vector<double> alphas;      // multipartite, one per subsystem
  std::vector<int> partition;      // row-mode subset; empty = best over partitions
  int subsystem = 1;               // transposed factor (ppt only)
};

struct CriterionReport {
  CriterionParams params;
  double value = 0.0;   // trace norm (or PPT negativity witness)
  double bound = 0.0;
  double margin = 0.0;  // value - bound
  bool detected = false;
};

/// Bordered correlation matrix: T augmented with m copies of the local
/// vectors and an alpha*beta corner block of ones,
///   [ alpha*beta E_{m x m}   beta (s ... s)^t ]
///   [ alpha (r ... r)        T                ].
/// m = 0 yields T itself.
RealMatrix build_s_matrix(const BlochDecomposition& dec, double alpha, double beta, int m);

/// Bipartite trace-norm criterion: a separable state satisfies
/// ||S_{alpha,beta}^m||_tr <= sqrt((2m beta^2 + d1^2 - d1)(2m alpha^2 + d2^2 - d2)) / 2.
CriterionReport bipartite_check(const DensityMatrix& rho, double alpha, double beta, int m);

/// True when alpha*sqrt(d1(d1-1)) = beta*sqrt(d2(d2-1)) within 1e-12.
/// Under this balance the bipartite check can only gain power as the
/// border m grows.
bool border_monotone_condition(double alpha, double beta, int d1, int d2);

/// Flatten a tensor into a matrix: rows run over the given modes (0-based,
/// ascending, leftmost slowest), columns over the complement likewise.
RealMatrix matricize(const CorrelationTensor& w, const std::vector<int>& modes);

/// Multipartite criterion at a fixed row-mode subset: a fully separable
/// state satisfies ||W^{A|Abar}||_tr <= prod_k sqrt((2m alpha_k^2 + d_k^2 - d_k)/2).
CriterionReport multipartite_check(const DensityMatrix& rho, int m,
                                   const std::vector<double>& alphas,
                                   const std::vector<int>& modes);

enum class PartitionScope { All, SingleModes };

/// Evaluate multipartite_check over every partition (up to complement
/// equivalence, or single modes only) and return the maximal-margin report.
/// A violation at any one partition certifies entanglement.
CriterionReport multipartite_best(const DensityMatrix& rho, int m,
                                  const std::vector<double>& alphas,
                                  PartitionScope scope = PartitionScope::All);

/// Baseline: value is the negated smallest eigenvalue of the partial
/// transpose over the given subsystem (0-based); bound 0.
CriterionReport ppt_check(const DensityMatrix& rho, int subsystem);

/// Baseline: value is the trace norm of the realignment; bound 1.
CriterionReport ccnr_check(const DensityMatrix& rho);

/// Copy of params with preset-pinned values filled in for a state with
/// the given subsystem count.
CriterionParams canonicalize(const CriterionParams& params, int n_subsystems);

/// Dispatch on params.id; presets override the numeric parameters.
CriterionReport evaluate(const DensityMatrix& rho, const CriterionParams& params);

/// Nonempty proper subsets of {0..n-1} up to complement equivalence,
/// represented by the smaller side (ties: the side containing mode 0).
std::vector<std::vector<int>> partitions_up_to_complement(int n);

}  // namespace blochsep

#endif  // BLOCHSEP_CRITERIA_HPP
