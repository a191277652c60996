#include "blochsep/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace blochsep {

using nlohmann::json;

double round_to_12_digits(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return std::strtod(buffer, nullptr);
}

json density_to_json(const DensityMatrix& rho) {
  json matrix = json::array();
  for (Eigen::Index i = 0; i < rho.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < rho.matrix.cols(); ++j)
      row.push_back({rho.matrix(i, j).real(), rho.matrix(i, j).imag()});
    matrix.push_back(std::move(row));
  }
  return json{{"dims", rho.dims}, {"matrix", std::move(matrix)}};
}

DensityMatrix density_from_json(const json& j, bool validate_state) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
    throw IoError("state file must be an object with \"dims\" and \"matrix\"");

  DensityMatrix rho;
  try {
    rho.dims = j.at("dims").get<std::vector<int>>();
  } catch (const json::exception&) {
    throw IoError("\"dims\" must be a list of integers");
  }
  if (rho.dims.empty()) throw IoError("\"dims\" must be nonempty");
  for (int d : rho.dims)
    if (d < 2) throw IoError("subsystem dimensions must be at least 2");

  const int d = rho.total_dim();
  const json& matrix = j.at("matrix");
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != d)
    throw IoError("\"matrix\" must have exactly " + std::to_string(d) + " rows");
  rho.matrix.resize(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = matrix.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw IoError("matrix row " + std::to_string(i) + " must have " + std::to_string(d) +
                    " entries");
    for (int k = 0; k < d; ++k) {
      const json& entry = row.at(k);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number())
        throw IoError("matrix entries must be [re, im] pairs");
      rho.matrix(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }

  if (validate_state) {
    const ValidationReport report = validate(rho);
    if (!report.pass())
      throw IoError("state fails validation (hermiticity deviation " +
                    std::to_string(report.hermiticity_deviation) + ", trace deviation " +
                    std::to_string(report.trace_deviation) + ", min eigenvalue " +
                    std::to_string(report.min_eigenvalue) + ")");
  }
  return rho;
}

void save_density(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << density_to_json(rho).dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

DensityMatrix load_density(const std::string& path, bool validate_state) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("invalid JSON in " + path + ": " + e.what());
  }
  return density_from_json(j, validate_state);
}

json params_to_json(const CriterionParams& params) {
  json j{{"m", params.border}};
  switch (params.id) {
    case CriterionId::Thm1:
    case CriterionId::Vb:
    case CriterionId::Lb:
      j["alpha"] = params.alpha;
      j["beta"] = params.beta;
      break;
    case CriterionId::Thm2:
    case CriterionId::Vm:
    case CriterionId::Hm:
    case CriterionId::Lm: {
      j["alphas"] = params.alphas;
      json partition = json::array();
      for (int mode : params.partition) partition.push_back(mode + 1);
      j["partition"] = std::move(partition);
      break;
    }
    case CriterionId::Ppt:
      j.erase("m");
      j["subsystem"] = params.subsystem + 1;
      break;
    case CriterionId::Ccnr:
      j.erase("m");
      break;
  }
  return j;
}

json report_to_json(const CriterionReport& report) {
  return json{{"criterion", to_string(report.params.id)},
              {"params", params_to_json(report.params)},
              {"value", round_to_12_digits(report.value)},
              {"bound", round_to_12_digits(report.bound)},
              {"margin", round_to_12_digits(report.margin)},
              {"detected", report.detected}};
}

json decomposition_to_json(const BlochDecomposition& dec) {
  json t = json::array();
  for (Eigen::Index i = 0; i < dec.T.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < dec.T.cols(); ++j) row.push_back(dec.T(i, j));
    t.push_back(std::move(row));
  }
  return json{{"d1", dec.d1},
              {"d2", dec.d2},
              {"r", std::vector<double>(dec.r.data(), dec.r.data() + dec.r.size())},
              {"s", std::vector<double>(dec.s.data(), dec.s.data() + dec.s.size())},
              {"T", std::move(t)}};
}

json threshold_to_json(const ThresholdResult& result) {
  json j{{"family", result.family},
         {"criterion", to_string(result.params.id)},
         {"params", params_to_json(result.params)},
         {"bracket", result.bracket},
         {"multi_crossing", result.multi_crossing},
         {"detects_everywhere", result.detects_everywhere}};
  if (result.x_star)
    j["x_star"] = *result.x_star;
  else
    j["x_star"] = nullptr;
  return j;
}

json validation_to_json(const ValidationReport& report) {
  return json{{"hermiticity_deviation", report.hermiticity_deviation},
              {"trace_deviation", report.trace_deviation},
              {"min_eigenvalue", report.min_eigenvalue},
              {"finite", report.finite},
              {"hermitian", report.hermitian},
              {"unit_trace", report.unit_trace},
              {"positive", report.positive},
              {"pass", report.pass()}};
}

}  // namespace blochsep
