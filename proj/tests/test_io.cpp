#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "blochsep/io.hpp"
#include "test_support.hpp"

using namespace blochsep;
namespace ts = blochsep::testing;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("state files round-trip") {
  std::mt19937_64 rng(163);
  const DensityMatrix rho = ts::random_density({2, 3}, rng);
  const auto path = temp_file("blochsep_roundtrip.json");
  save_density(path.string(), rho);
  const DensityMatrix back = load_density(path.string());
  CHECK(back.dims == rho.dims);
  CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() <= 1e-15);
  std::filesystem::remove(path);
}

TEST_CASE("loader rejects missing files and malformed content") {
  CHECK_THROWS_AS(load_density("/nonexistent/state.json"), IoError);

  const auto path = temp_file("blochsep_bad.json");
  std::ofstream(path.string()) << "{ \"dims\": [2,2] }";
  CHECK_THROWS_AS(load_density(path.string()), IoError);

  std::ofstream(path.string()) << "not json";
  CHECK_THROWS_AS(load_density(path.string()), IoError);

  // wrong row count
  std::ofstream(path.string()) << R"({"dims": [2], "matrix": [[[1,0],[0,0]]]})";
  CHECK_THROWS_AS(load_density(path.string()), IoError);
  std::filesystem::remove(path);
}

TEST_CASE("loader validates states unless told otherwise") {
  DensityMatrix indefinite{{2}, ComplexMatrix::Zero(2, 2)};
  indefinite.matrix(0, 0) = 1.5;
  indefinite.matrix(1, 1) = -0.5;
  const auto path = temp_file("blochsep_invalid.json");
  save_density(path.string(), indefinite);
  CHECK_THROWS_AS(load_density(path.string()), IoError);
  const DensityMatrix raw = load_density(path.string(), /*validate_state=*/false);
  CHECK(!validate(raw).pass());
  std::filesystem::remove(path);
}

TEST_CASE("report serialization keeps 12 significant digits and the flag") {
  const CriterionReport report = ccnr_check(density_from_pure(bell_pair()));
  const nlohmann::json j = report_to_json(report);
  CHECK(j.at("criterion") == "ccnr");
  CHECK(j.at("detected") == true);
  CHECK(j.at("value").get<double>() == doctest::Approx(report.value).epsilon(1e-11));
  CHECK(j.at("bound").get<double>() == doctest::Approx(report.bound).epsilon(1e-11));
  CHECK(j.at("margin").get<double>() == doctest::Approx(report.margin).epsilon(1e-11));
}

TEST_CASE("multipartite params serialize the partition one-based") {
  const DensityMatrix rho = maximally_mixed({2, 2, 2});
  const CriterionReport report = multipartite_check(rho, 1, {0.1, 0.1, 0.1}, {0, 2});
  const nlohmann::json j = report_to_json(report);
  CHECK(j.at("params").at("partition") == nlohmann::json::array({1, 3}));
  CHECK(j.at("params").at("m") == 1);
}

TEST_CASE("12-digit rounding is stable") {
  CHECK(round_to_12_digits(1.0) == 1.0);
  CHECK(round_to_12_digits(0.0) == 0.0);
  const double value = 0.12345678901234567;
  CHECK(std::abs(round_to_12_digits(value) - value) < 1e-12);
}

TEST_SUITE_END();
