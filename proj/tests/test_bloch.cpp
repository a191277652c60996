#include <cmath>
#include <random>

#include <doctest.h>

#include "blochsep/bloch.hpp"
#include "blochsep/numerics.hpp"
#include "blochsep/su_basis.hpp"
#include "test_support.hpp"

using namespace blochsep;
namespace ts = blochsep::testing;

TEST_SUITE_BEGIN("bloch");

TEST_CASE("maximally mixed state decomposes to zero coefficients") {
  const BlochDecomposition dec = bipartite_decomposition(maximally_mixed({2, 3}));
  CHECK(dec.r.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(dec.s.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(dec.T.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Bell projector correlation matrix against direct expectations") {
  const DensityMatrix bell = density_from_pure(bell_pair());
  const BlochDecomposition dec = bipartite_decomposition(bell);
  CHECK(dec.r.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(dec.s.cwiseAbs().maxCoeff() < 1e-14);

  // oracle: T_ij = Tr(rho sigma_i x sigma_j) with hand-built Paulis
  const auto paulis = ts::pauli_triple();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex expected = (bell.matrix * kron(paulis[i], paulis[j])).trace();
      CHECK(std::abs(expected.imag()) < 1e-14);
      CHECK(dec.T(i, j) == doctest::Approx(expected.real()).epsilon(1e-12));
    }
  }
  // which is diag(1, -1, 1)
  RealMatrix expected_t = RealMatrix::Zero(3, 3);
  expected_t(0, 0) = 1;
  expected_t(1, 1) = -1;
  expected_t(2, 2) = 1;
  CHECK((dec.T - expected_t).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("product states factor the correlation matrix") {
  std::mt19937_64 rng(61);
  const DensityMatrix a = ts::random_density({3}, rng);
  const DensityMatrix b = ts::random_density({3}, rng);
  const DensityMatrix product{{3, 3}, kron(a.matrix, b.matrix)};
  const BlochDecomposition dec = bipartite_decomposition(product);
  for (int i = 0; i < dec.T.rows(); ++i)
    for (int j = 0; j < dec.T.cols(); ++j)
      CHECK(dec.T(i, j) == doctest::Approx(dec.r(i) * dec.s(j)).epsilon(1e-10));
}

TEST_CASE("decomposition rejects non-bipartite states") {
  CHECK_THROWS_AS(bipartite_decomposition(maximally_mixed({2, 2, 2})), ContractViolation);
}

TEST_CASE("reconstruction returns the input state") {
  std::mt19937_64 rng(67);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    for (int round = 0; round < 25; ++round) {
      const DensityMatrix rho = ts::random_density(dims, rng);
      const ComplexMatrix rebuilt = reconstruct(bipartite_decomposition(rho));
      CHECK((rebuilt - rho.matrix).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("local vectors of pure product states sit on the generator sphere") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 5; ++round) {
    const DensityMatrix left = density_from_pure(ts::random_pure({2}, rng));
    const DensityMatrix right = density_from_pure(ts::random_pure({3}, rng));
    const DensityMatrix product{{2, 3}, kron(left.matrix, right.matrix)};
    const BlochDecomposition dec = bipartite_decomposition(product);
    CHECK(dec.r.norm() <= std::sqrt(2.0 * 1.0 / 2.0) + 1e-9);
    CHECK(dec.s.norm() <= std::sqrt(3.0 * 2.0 / 2.0) + 1e-9);
    CHECK(dec.r.norm() == doctest::Approx(std::sqrt(1.0)).epsilon(1e-9));
    CHECK(dec.s.norm() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  }
}

TEST_CASE("delta operator selects borders then generators") {
  const ComplexMatrix border = delta_operator(2, 1, 1, 1.0);
  CHECK((border - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK((delta_operator(2, 2, 1, 1.0) - ts::pauli_x()).cwiseAbs().maxCoeff() < 1e-15);

  ComplexMatrix last = ComplexMatrix::Zero(3, 3);
  last(0, 0) = last(1, 1) = 1.0 / std::sqrt(3.0);
  last(2, 2) = -2.0 / std::sqrt(3.0);
  CHECK((delta_operator(3, 8, 0, 0.5) - last).cwiseAbs().maxCoeff() < 1e-15);

  const ComplexMatrix scaled = delta_operator(4, 2, 3, 0.7);
  CHECK((scaled - (2.0 * 0.7 / 4.0) * ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);

  CHECK_THROWS_AS(delta_operator(2, 0, 1, 1.0), ContractViolation);
  CHECK_THROWS_AS(delta_operator(2, 5, 1, 1.0), ContractViolation);
}

TEST_CASE("generalized tensor of the maximally mixed state is a corner spike") {
  const DensityMatrix mixed = maximally_mixed({2, 2, 2});
  const CorrelationTensor w = generalized_tensor(mixed, 1, {0.3, 0.5, 0.7});
  REQUIRE(w.extents == std::vector<int>{4, 4, 4});
  for (int k1 = 0; k1 < 4; ++k1)
    for (int k2 = 0; k2 < 4; ++k2)
      for (int k3 = 0; k3 < 4; ++k3) {
        const double expected = (k1 == 0 && k2 == 0 && k3 == 0) ? 0.3 * 0.5 * 0.7 : 0.0;
        CHECK(std::abs(w.at({k1, k2, k3}) - expected) < 1e-12);
      }
}

TEST_CASE("all-border entry equals the alpha product for any state") {
  std::mt19937_64 rng(73);
  const DensityMatrix rho = ts::random_density({2, 2, 2}, rng);
  const std::vector<double> alphas{0.4, 1.1, 0.9};
  for (int m : {1, 2, 3}) {
    const CorrelationTensor w = generalized_tensor(rho, m, alphas);
    for (int k1 = 0; k1 < m; ++k1)
      for (int k2 = 0; k2 < m; ++k2)
        for (int k3 = 0; k3 < m; ++k3)
          CHECK(std::abs(w.at({k1, k2, k3}) - 0.4 * 1.1 * 0.9) < 1e-12);
  }
}

TEST_CASE("borderless tensor equals the bipartite correlation matrix") {
  std::mt19937_64 rng(79);
  const DensityMatrix rho = ts::random_density({2, 3}, rng);
  const CorrelationTensor w = generalized_tensor(rho, 0, {0.0, 0.0});
  const BlochDecomposition dec = bipartite_decomposition(rho);
  REQUIRE(w.extents == std::vector<int>{3, 8});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(w.at({i, j}) == doctest::Approx(dec.T(i, j)).epsilon(1e-12));
}

TEST_CASE("tensor construction validates its inputs") {
  const DensityMatrix rho = maximally_mixed({2, 2});
  CHECK_THROWS_AS(generalized_tensor(rho, 1, {1.0}), ContractViolation);
  CHECK_THROWS_AS(generalized_tensor(rho, -1, {1.0, 1.0}), ContractViolation);
  CHECK_THROWS_AS(generalized_tensor(rho, 1, {1.0, -0.5}), ContractViolation);
}

TEST_SUITE_END();
