#include "blochsep/detect.hpp"

#include <cmath>
#include <cstdio>

namespace blochsep {

namespace {

std::string format_param(const char* name, const char* symbol, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%s(%s=%.6g)", name, symbol, value);
  return buffer;
}

double margin_at(const StateFamily& family, const CriterionParams& params, double x) {
  return evaluate(family.at(x), params).margin;
}

}  // namespace

StateFamily ghz_mixture_family(double eps) {
  const DensityMatrix signal = density_from_pure(ghz_perturbed(eps));
  const DensityMatrix noise = maximally_mixed({2, 2, 2});
  return {format_param("ghz", "eps", eps),
          [signal, noise](double x) { return mix(x, signal, noise); }};
}

StateFamily horodecki_mixture_family(double b) {
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = amps(5) = 1.0 / std::sqrt(2.0);  // |0>|0> and |1>|1> of the 4-level factor
  const DensityMatrix signal = density_from_pure({{2, 4}, amps});
  const DensityMatrix noise = horodecki_2x4(b);
  return {format_param("horodecki", "b", b),
          [signal, noise](double x) { return mix(x, signal, noise); }};
}

std::vector<std::pair<double, double>> margin_curve(const StateFamily& family,
                                                    const CriterionParams& params, int grid) {
  require(grid >= 2, "margin_curve: grid needs at least two points");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid);
  for (int i = 0; i < grid; ++i) {
    const double x = static_cast<double>(i) / (grid - 1);
    curve.emplace_back(x, margin_at(family, params, x));
  }
  return curve;
}

ThresholdResult detection_threshold(const StateFamily& family, const CriterionParams& params,
                                    double tol_x, int coarse_grid) {
  require(tol_x > 0.0, "detection_threshold: tolerance must be positive");
  const auto curve = margin_curve(family, params, coarse_grid);

  int sign_changes = 0;
  int first_up = -1;  // first index i with margin(x_i) <= 0 < margin(x_{i+1})
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const bool lo = curve[i].second > 0.0;
    const bool hi = curve[i + 1].second > 0.0;
    if (lo != hi) {
      ++sign_changes;
      if (!lo && first_up < 0) first_up = static_cast<int>(i);
    }
  }

  ThresholdResult result;
  result.family = family.name;
  result.params = canonicalize(params, family.at(0.0).num_subsystems());

  if (curve.front().second > 0.0) {
    // Detection already at x = 0; the smallest detecting x is 0.
    result.x_star = 0.0;
    result.detects_everywhere = sign_changes == 0;
    result.multi_crossing = sign_changes >= 1;
    return result;
  }
  if (first_up < 0) return result;  // margin never positive
  result.multi_crossing = sign_changes > 1;

  double lo = curve[first_up].first;
  double hi = curve[first_up + 1].first;
  while (0.5 * (hi - lo) > tol_x) {
    const double mid = 0.5 * (lo + hi);
    (margin_at(family, params, mid) > 0.0 ? hi : lo) = mid;
  }
  result.x_lo = lo;
  result.x_hi = hi;
  result.x_star = 0.5 * (lo + hi);
  result.bracket = 0.5 * (hi - lo);
  return result;
}

std::vector<GhzTableCell> table1_thresholds(double tol_x) {
  const std::vector<double> epsilons = {0.0, 1e-5, 0.1, 1.0};

  CriterionParams vm;
  vm.id = CriterionId::Vm;
  CriterionParams lm;
  lm.id = CriterionId::Lm;
  CriterionParams general;
  general.id = CriterionId::Thm2;
  general.border = 1;
  general.alphas = {0.1, 0.1, 0.1};

  const std::vector<std::pair<std::string, CriterionParams>> columns = {
      {"vm", vm}, {"lm", lm}, {"thm2(m=1,alpha=0.1)", general}};

  std::vector<GhzTableCell> cells;
  cells.reserve(epsilons.size() * columns.size());
  for (double eps : epsilons) {
    const StateFamily family = ghz_mixture_family(eps);
    for (const auto& [label, params] : columns) {
      GhzTableCell cell;
      cell.epsilon = eps;
      cell.criterion_label = label;
      cell.params = params;
      cell.result = detection_threshold(family, params, tol_x);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::array<ThresholdResult, 3> bipartite_example_thresholds(double b, double tol_x) {
  const StateFamily family = horodecki_mixture_family(b);
  const int d1 = 2;
  const int d2 = 4;

  CriterionParams balanced;
  balanced.id = CriterionId::Thm1;
  balanced.border = 1;
  balanced.alpha = std::sqrt(2.0 / (d1 * (d1 - 1.0)));
  balanced.beta = std::sqrt(2.0 / (d2 * (d2 - 1.0)));
  CriterionParams vb;
  vb.id = CriterionId::Vb;
  CriterionParams lb;
  lb.id = CriterionId::Lb;

  return {detection_threshold(family, balanced, tol_x),
          detection_threshold(family, vb, tol_x),
          detection_threshold(family, lb, tol_x)};
}

}  // namespace blochsep
