#include "blochsep/criteria.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "blochsep/numerics.hpp"

namespace blochsep {

namespace {

CriterionReport finish(CriterionParams params, double value, double bound) {
  CriterionReport report;
  report.params = std::move(params);
  report.value = value;
  report.bound = bound;
  report.margin = value - bound;
  report.detected = report.margin > kDetectionTol;
  return report;
}

std::vector<int> complement_modes(int n, const std::vector<int>& modes) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (std::find(modes.begin(), modes.end(), i) == modes.end()) rest.push_back(i);
  return rest;
}

}  // namespace

std::string to_string(CriterionId id) {
  switch (id) {
    case CriterionId::Thm1: return "thm1";
    case CriterionId::Thm2: return "thm2";
    case CriterionId::Vb: return "vb";
    case CriterionId::Lb: return "lb";
    case CriterionId::Vm: return "vm";
    case CriterionId::Hm: return "hm";
    case CriterionId::Lm: return "lm";
    case CriterionId::Ppt: return "ppt";
    case CriterionId::Ccnr: return "ccnr";
  }
  throw ContractViolation("unknown criterion id");
}

CriterionId criterion_from_string(const std::string& name) {
  if (name == "thm1") return CriterionId::Thm1;
  if (name == "thm2") return CriterionId::Thm2;
  if (name == "vb") return CriterionId::Vb;
  if (name == "lb") return CriterionId::Lb;
  if (name == "vm") return CriterionId::Vm;
  if (name == "hm") return CriterionId::Hm;
  if (name == "lm") return CriterionId::Lm;
  if (name == "ppt") return CriterionId::Ppt;
  if (name == "ccnr") return CriterionId::Ccnr;
  throw ContractViolation("unknown criterion name: " + name);
}

RealMatrix build_s_matrix(const BlochDecomposition& dec, double alpha, double beta, int m) {
  require(alpha >= 0.0 && beta >= 0.0, "build_s_matrix: alpha and beta must be nonnegative");
  require(m >= 0, "build_s_matrix: border must be nonnegative");
  const int p = static_cast<int>(dec.r.size());
  const int q = static_cast<int>(dec.s.size());
  RealMatrix s(m + p, m + q);
  s.topLeftCorner(m, m).setConstant(alpha * beta);
  for (int row = 0; row < m; ++row) s.block(row, m, 1, q) = beta * dec.s.transpose();
  for (int col = 0; col < m; ++col) s.block(m, col, p, 1) = alpha * dec.r;
  s.bottomRightCorner(p, q) = dec.T;
  return s;
}

CriterionReport bipartite_check(const DensityMatrix& rho, double alpha, double beta, int m) {
  require(rho.num_subsystems() == 2, "bipartite check needs exactly two subsystems");
  const BlochDecomposition dec = bipartite_decomposition(rho);
  const double value = trace_norm(build_s_matrix(dec, alpha, beta, m));
  const double c1 = dec.d1 * (dec.d1 - 1.0);
  const double c2 = dec.d2 * (dec.d2 - 1.0);
  const double bound =
      0.5 * std::sqrt((2.0 * m * beta * beta + c1) * (2.0 * m * alpha * alpha + c2));

  CriterionParams params;
  params.id = CriterionId::Thm1;
  params.border = m;
  params.alpha = alpha;
  params.beta = beta;
  return finish(std::move(params), value, bound);
}

bool border_monotone_condition(double alpha, double beta, int d1, int d2) {
  return std::abs(alpha * std::sqrt(d1 * (d1 - 1.0)) - beta * std::sqrt(d2 * (d2 - 1.0))) <= 1e-12;
}

RealMatrix matricize(const CorrelationTensor& w, const std::vector<int>& modes) {
  const int n = w.order();
  std::vector<int> row_modes = modes;
  std::sort(row_modes.begin(), row_modes.end());
  row_modes.erase(std::unique(row_modes.begin(), row_modes.end()), row_modes.end());
  require(row_modes.size() == modes.size(), "matricize: repeated mode in subset");
  require(!row_modes.empty() && static_cast<int>(row_modes.size()) < n,
          "matricize: subset must be nonempty and proper");
  require(row_modes.front() >= 0 && row_modes.back() < n, "matricize: mode index out of range");
  const std::vector<int> col_modes = complement_modes(n, row_modes);

  auto extent_product = [&](const std::vector<int>& ms) {
    long long p = 1;
    for (int mode : ms) p *= w.extents[mode];
    return p;
  };
  RealMatrix out(extent_product(row_modes), extent_product(col_modes));

  // Leftmost listed mode is the slowest within each side.
  auto side_index = [&](const std::vector<int>& ms, const std::vector<int>& index) {
    long long flat = 0;
    for (int mode : ms) flat = flat * w.extents[mode] + index[mode];
    return flat;
  };

  std::vector<int> index(n, 0);
  for (double entry : w.data) {
    out(side_index(row_modes, index), side_index(col_modes, index)) = entry;
    for (int i = 0; i < n; ++i) {  // first mode fastest, matching the flat layout
      if (++index[i] < w.extents[i]) break;
      index[i] = 0;
    }
  }
  return out;
}

CriterionReport multipartite_check(const DensityMatrix& rho, int m,
                                   const std::vector<double>& alphas,
                                   const std::vector<int>& modes) {
  const int n = rho.num_subsystems();
  require(n >= 2, "multipartite check needs at least two subsystems");
  const CorrelationTensor w = generalized_tensor(rho, m, alphas);
  const double value = trace_norm(matricize(w, modes));
  double bound = 1.0;
  for (int k = 0; k < n; ++k) {
    const double dk = rho.dims[k];
    bound *= std::sqrt(0.5 * (2.0 * m * alphas[k] * alphas[k] + dk * dk - dk));
  }

  CriterionParams params;
  params.id = CriterionId::Thm2;
  params.border = m;
  params.alphas = alphas;
  params.partition = modes;
  std::sort(params.partition.begin(), params.partition.end());
  return finish(std::move(params), value, bound);
}

std::vector<std::vector<int>> partitions_up_to_complement(int n) {
  require(n >= 2, "partitions need at least two modes");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (2 * size > n) continue;
    if (2 * size == n && !(mask & 1u)) continue;  // tie: keep the side with mode 0
    std::vector<int> modes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) modes.push_back(i);
    out.push_back(std::move(modes));
  }
  return out;
}

CriterionReport multipartite_best(const DensityMatrix& rho, int m,
                                  const std::vector<double>& alphas, PartitionScope scope) {
  const int n = rho.num_subsystems();
  require(n >= 2, "multipartite check needs at least two subsystems");

  std::vector<std::vector<int>> candidates;
  if (scope == PartitionScope::SingleModes) {
    const int count = (n == 2) ? 1 : n;  // for two modes, {1} mirrors {0}
    for (int i = 0; i < count; ++i) candidates.push_back({i});
  } else {
    candidates = partitions_up_to_complement(n);
  }

  CriterionReport best;
  bool first = true;
  for (const auto& modes : candidates) {
    CriterionReport report = multipartite_check(rho, m, alphas, modes);
    if (first || report.margin > best.margin) {
      best = report;
      first = false;
    }
  }
  return best;
}

CriterionReport ppt_check(const DensityMatrix& rho, int subsystem) {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(rho, subsystem));
  const double value = -spectrum.front();

  CriterionParams params;
  params.id = CriterionId::Ppt;
  params.subsystem = subsystem;
  return finish(std::move(params), value, 0.0);
}

CriterionReport ccnr_check(const DensityMatrix& rho) {
  const double value = trace_norm(realign(rho));
  CriterionParams params;
  params.id = CriterionId::Ccnr;
  return finish(std::move(params), value, 1.0);
}

CriterionParams canonicalize(const CriterionParams& params, int n_subsystems) {
  CriterionParams out = params;
  switch (params.id) {
    case CriterionId::Vb:
      out.alpha = out.beta = 0.0;
      out.border = 0;
      break;
    case CriterionId::Lb:
      out.alpha = out.beta = 1.0;
      out.border = 1;
      break;
    case CriterionId::Vm:
    case CriterionId::Hm:
      out.alphas.assign(n_subsystems, 0.0);
      out.border = 0;
      break;
    case CriterionId::Lm:
      out.alphas.assign(n_subsystems, 1.0);
      out.border = 1;
      break;
    default:
      break;
  }
  return out;
}

CriterionReport evaluate(const DensityMatrix& rho, const CriterionParams& params) {
  const int n = rho.num_subsystems();
  CriterionReport report;
  switch (params.id) {
    case CriterionId::Thm1:
      report = bipartite_check(rho, params.alpha, params.beta, params.border);
      break;
    case CriterionId::Vb:
      report = bipartite_check(rho, 0.0, 0.0, 0);
      break;
    case CriterionId::Lb:
      report = bipartite_check(rho, 1.0, 1.0, 1);
      break;
    case CriterionId::Thm2:
      require(static_cast<int>(params.alphas.size()) == n,
              "thm2 needs one alpha per subsystem");
      report = params.partition.empty()
                   ? multipartite_best(rho, params.border, params.alphas)
                   : multipartite_check(rho, params.border, params.alphas, params.partition);
      break;
    case CriterionId::Vm:
      report = multipartite_best(rho, 0, std::vector<double>(n, 0.0));
      break;
    case CriterionId::Hm:
      report = multipartite_best(rho, 0, std::vector<double>(n, 0.0), PartitionScope::SingleModes);
      break;
    case CriterionId::Lm:
      report = multipartite_best(rho, 1, std::vector<double>(n, 1.0));
      break;
    case CriterionId::Ppt:
      report = ppt_check(rho, params.subsystem);
      break;
    case CriterionId::Ccnr:
      report = ccnr_check(rho);
      break;
  }
  report.params.id = params.id;
  return report;
}

}  // namespace blochsep
