#ifndef BLOCHSEP_DETECT_HPP
#define BLOCHSEP_DETECT_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blochsep/criteria.hpp"
#include "blochsep/states.hpp"

namespace blochsep {

/// One-parameter family of states, x in [0, 1].
struct StateFamily {
  std::string name;
  std::function<DensityMatrix(double)> at;
};

/// x * (perturbed GHZ projector) + (1 - x) * I_8 / 8.
StateFamily ghz_mixture_family(double eps);

/// x * (embedded Bell projector) + (1 - x) * horodecki_2x4(b). The Bell
/// vector lives in C^2 x C^4 with amplitudes on the first two levels of
/// the second factor.
StateFamily horodecki_mixture_family(double b);

/// Outcome of a detection-threshold search. When x_star is interior the
/// final bracket satisfies margin(x_lo) <= 0 < margin(x_hi) with
/// x_star the midpoint and bracket the half-width.
struct ThresholdResult {
  std::string family;
  CriterionParams params;
  std::optional<double> x_star;     // empty: the criterion never detects
  double x_lo = 0.0;
  double x_hi = 0.0;
  double bracket = 0.0;
  bool multi_crossing = false;      // margin changes sign more than once
  bool detects_everywhere = false;  // positive margin across the whole grid
};

/// Margins at a uniform grid (including both endpoints) on [0, 1].
std::vector<std::pair<double, double>> margin_curve(const StateFamily& family,
                                                    const CriterionParams& params, int grid);

/// Coarse scan (default 200 points) for the first sign change of the
/// margin, refined by bisection until the bracket half-width is at most
/// tol_x. Multiple sign changes are flagged and the smallest detecting x
/// is returned.
ThresholdResult detection_threshold(const StateFamily& family, const CriterionParams& params,
                                    double tol_x, int coarse_grid = 200);

struct GhzTableCell {
  double epsilon = 0.0;
  std::string criterion_label;
  CriterionParams params;
  ThresholdResult result;
};

/// Detection thresholds of the GHZ-perturbation mixture for
/// eps in {0, 1e-5, 0.1, 1} under vm, lm, and thm2 with m=1 and all
/// alphas 0.1 (best partition). Row-major: 4 epsilons x 3 criteria.
std::vector<GhzTableCell> table1_thresholds(double tol_x = 1e-5);

/// Thresholds of the Bell/horodecki_2x4(b) mixture under (i) thm1 with
/// m=1 and alpha = sqrt(2/(d1(d1-1))), beta = sqrt(2/(d2(d2-1))),
/// (ii) vb, (iii) lb.
std::array<ThresholdResult, 3> bipartite_example_thresholds(double b, double tol_x = 1e-5);

}  // namespace blochsep

#endif  // BLOCHSEP_DETECT_HPP
