#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "blochsep/numerics.hpp"
#include "test_support.hpp"

using namespace blochsep;
namespace ts = blochsep::testing;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  CHECK((kron(id2, id2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron of diagonal z operators") {
  const ComplexMatrix out = kron(ts::pauli_z(), ts::pauli_z());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = -1;
  expected(2, 2) = -1;
  expected(3, 3) = 1;
  CHECK((out - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron trace multiplies traces of random factors") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 20; ++round) {
    const ComplexMatrix a = ts::random_complex(3, 3, rng);
    const ComplexMatrix b = ts::random_complex(3, 3, rng);
    const Complex expected = ts::trace_by_summation(a) * ts::trace_by_summation(b);
    CHECK(std::abs(ts::trace_by_summation(kron(a, b)) - expected) < 1e-12);
  }
}

TEST_CASE("singular values of a diagonal matrix") {
  RealMatrix m = RealMatrix::Zero(2, 2);
  m(0, 0) = 3;
  m(1, 1) = 1;
  const auto sv = singular_values(m);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("singular values of the all-ones 2x3 matrix") {
  const RealMatrix ones = RealMatrix::Ones(2, 3);
  const auto sv = singular_values(ones);
  REQUIRE(sv.size() == 2);
  // rank one: sqrt(2 * 3), then zero
  CHECK(sv[0] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK(sv[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("singular values of the zero matrix vanish") {
  const auto sv = singular_values(RealMatrix::Zero(3, 4));
  REQUIRE(sv.size() == 3);
  for (double s : sv) CHECK(s == 0.0);
}

TEST_CASE("trace norm fixtures") {
  CHECK(trace_norm(RealMatrix(RealMatrix::Identity(3, 3))) == doctest::Approx(3.0).epsilon(1e-12));

  // rank-one outer product: trace norm = |column| * |row|
  RealVector col(3);
  col << 2, 0, 0;
  RealVector row(4);
  row << 3, 4, 0, 0;
  CHECK(trace_norm(RealMatrix(col * row.transpose())) == doctest::Approx(10.0).epsilon(1e-12));

  CHECK(spectral_norm(RealMatrix(RealMatrix::Ones(5, 5))) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(spectral_norm(RealMatrix::Zero(2, 2)) == 0.0);
  RealMatrix diag = RealMatrix::Zero(2, 2);
  diag(0, 0) = 3;
  diag(1, 1) = 1;
  CHECK(spectral_norm(diag) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("trace norm of a Hermitian PSD matrix equals its trace") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 10; ++round) {
    const ComplexMatrix g = ts::random_complex(4, 4, rng);
    const ComplexMatrix psd = g * g.adjoint();
    CHECK(trace_norm(psd) == doctest::Approx(psd.trace().real()).epsilon(1e-10));
    // and for a real PSD matrix through the real path
    const RealMatrix gr = ts::random_real(4, 4, rng);
    const RealMatrix psdr = gr * gr.transpose();
    CHECK(std::abs(trace_norm(psdr) - psdr.trace()) < 1e-10);
  }
}

TEST_CASE("trace norm dominates spectral norm; equality on rank one") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 25; ++round) {
    const RealMatrix m = ts::random_real(4, 5, rng);
    CHECK(trace_norm(m) >= spectral_norm(m) - 1e-12);

    const RealMatrix rank_one = ts::random_real(4, 1, rng) * ts::random_real(1, 5, rng);
    CHECK(trace_norm(rank_one) == doctest::Approx(spectral_norm(rank_one)).epsilon(1e-10));
  }
}

TEST_CASE("trace norm is transpose- and permutation-invariant") {
  std::mt19937_64 rng(13);
  std::vector<int> rows{0, 1, 2, 3};
  std::vector<int> cols{0, 1, 2, 3, 4};
  for (int round = 0; round < 10; ++round) {
    const RealMatrix m = ts::random_real(4, 5, rng);
    const double norm = trace_norm(m);
    CHECK(trace_norm(RealMatrix(m.transpose())) == doctest::Approx(norm).epsilon(1e-10));

    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    RealMatrix shuffled(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) shuffled(i, j) = m(rows[i], cols[j]);
    CHECK(trace_norm(shuffled) == doctest::Approx(norm).epsilon(1e-10));
  }
}

TEST_CASE("complex trace norm matches the real path on real input") {
  std::mt19937_64 rng(17);
  const RealMatrix m = ts::random_real(4, 4, rng);
  const ComplexMatrix mc = m.cast<Complex>();
  CHECK(trace_norm(mc) == doctest::Approx(trace_norm(m)).epsilon(1e-10));
}

TEST_CASE("hermitian eigenvalues of simple fixtures") {
  const auto quarter = hermitian_eigenvalues(ComplexMatrix::Identity(4, 4) / 4.0);
  REQUIRE(quarter.size() == 4);
  for (double v : quarter) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));

  const auto flip = hermitian_eigenvalues(ts::pauli_x());
  REQUIRE(flip.size() == 2);
  CHECK(flip[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(flip[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalue solver rejects non-Hermitian input") {
  ComplexMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), ContractViolation);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), ContractViolation);
}

TEST_SUITE_END();
