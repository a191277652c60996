#ifndef BLOCHSEP_IO_HPP
#define BLOCHSEP_IO_HPP

#include <string>

#include <json.hpp>

#include "blochsep/bloch.hpp"
#include "blochsep/criteria.hpp"
#include "blochsep/detect.hpp"
#include "blochsep/states.hpp"

namespace blochsep {

/// State file layout: { "dims": [d1,...,dN], "matrix": [[[re,im],...],...] }
/// with row-major D x D entries at full double precision.
nlohmann::json density_to_json(const DensityMatrix& rho);

/// Parse a state; when validate_state is set (the default), reject
/// anything that fails the density-matrix invariants.
DensityMatrix density_from_json(const nlohmann::json& j, bool validate_state = true);

void save_density(const std::string& path, const DensityMatrix& rho);
DensityMatrix load_density(const std::string& path, bool validate_state = true);

/// Reports carry { criterion, params, value, bound, margin, detected }
/// with numeric fields at 12 significant digits. Partition and subsystem
/// indices are serialized 1-based.
nlohmann::json report_to_json(const CriterionReport& report);

nlohmann::json params_to_json(const CriterionParams& params);
nlohmann::json decomposition_to_json(const BlochDecomposition& dec);
nlohmann::json threshold_to_json(const ThresholdResult& result);
nlohmann::json validation_to_json(const ValidationReport& report);

/// Nearest double to the 12-significant-digit decimal form of v.
double round_to_12_digits(double v);

}  // namespace blochsep

#endif  // BLOCHSEP_IO_HPP
