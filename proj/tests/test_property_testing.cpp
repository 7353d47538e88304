#include <doctest.h>

#include "helpers.hpp"
#include "qbool/fourier.hpp"
#include "qbool/testing.hpp"

using namespace qbool;
using qbool::test::two_term;

TEST_SUITE_BEGIN("property_testing");

TEST_CASE("stabilizer test exact values") {
  const DenseOperator xz(2, pauli_matrix(PauliString::parse("XZ")), true);
  const StabilizerResult r = stabilizer_test(xz);
  CHECK(r.probability == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->s == PauliString::parse("XZ"));

  CHECK(stabilizer_test_probability(two_term(0.6)) == doctest::Approx(0.5392));
  CHECK(stabilizer_test_probability(DenseOperator::identity(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stabilizer test agrees with the direct-trace spectrum") {
  Rng rng(67);
  for (int rep = 0; rep < 5; ++rep) {
    const DenseOperator f = random_boolean(3, rng);
    double expect = 0;
    for (const auto& [s, c] : fourier_transform_direct(f))
      expect += std::norm(c) * std::norm(c);
    const double got = stabilizer_test_probability(f);
    CHECK(got == doctest::Approx(expect).epsilon(1e-10));
    CHECK(got >= 0.0);
    CHECK(got <= 1.0 + 1e-12);
  }
}

TEST_CASE("soundness witness is unique above one half") {
  Rng rng(71);
  for (int rep = 0; rep < 10; ++rep) {
    const DenseOperator f = random_boolean(3, rng);
    const StabilizerResult r = stabilizer_test(f);
    const double eps = 1.0 - r.probability;
    if (eps >= 0.5) continue;
    REQUIRE(r.witness.has_value());
    int heavy = 0;
    for (const auto& [s, c] : fourier_transform(f)) {
      if (std::norm(c) >= 1.0 - eps)
        ++heavy;
      else
        CHECK(std::norm(c) <= eps + 1e-10);
    }
    CHECK(heavy == 1);
  }
}

TEST_CASE("sampling concentrates on the exact probability") {
  // point masses accept always
  const SampleReport pm = stabilizer_test_sample(
      DenseOperator(1, pauli_matrix(PauliString::parse("Z")), true), 200, 5);
  CHECK(pm.fraction() == 1.0);
  const SampleReport id = stabilizer_test_sample(DenseOperator::identity(2), 100, 6);
  CHECK(id.fraction() == 1.0);

  const DenseOperator f = two_term(0.6);
  const SampleReport rep = stabilizer_test_sample(f, 100000, 12);
  const double p = rep.exact_probability;
  const double sigma = std::sqrt(p * (1 - p) / 100000.0);
  CHECK(std::abs(rep.fraction() - p) <= 3 * sigma);
}

TEST_CASE("sampled fraction stays within four sigma in nearly all seeded runs") {
  const DenseOperator f = two_term(0.6);
  const double p = stabilizer_test_probability(f);
  const long long trials = 2000;
  const double radius = 4.0 * std::sqrt(p * (1 - p) / trials);
  int violations = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    const SampleReport rep = stabilizer_test_sample(f, trials, derive_seed(900, r));
    if (std::abs(rep.fraction() - p) > radius) ++violations;
  }
  CHECK(violations <= runs / 100);  // fewer than 1%
}

TEST_CASE("damped test exact values") {
  const DenseOperator dict(3, pauli_matrix(PauliString::parse("ZII")), true);
  for (double delta : {0.01, 0.1, 0.5})
    CHECK(hastad_test_probability(dict, delta) == doctest::Approx(1.0 - delta).epsilon(1e-12));

  CHECK(hastad_test_probability(DenseOperator::identity(2), 0.37) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const DenseOperator zz(2, pauli_matrix(PauliString::parse("ZZ")), true);
  CHECK(hastad_test_probability(zz, 0.5) == doctest::Approx(0.25));

  CHECK_THROWS_AS(hastad_test_probability(zz, 1.5), std::invalid_argument);
}

TEST_CASE("damped test probability is nonincreasing in delta") {
  Rng rng(73);
  const DenseOperator f = random_boolean(3, rng);
  double prev = 2.0;
  for (double delta = 0.0; delta <= 1.0; delta += 0.1) {
    const double cur = hastad_test_probability(f, delta);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("dictator verdicts") {
  const DenseOperator dict(2, pauli_matrix(PauliString::parse("ZI")), true);
  const HastadReport acc = hastad_verdict(dict, 0.01);
  CHECK(acc.verdict == Verdict::Accept);
  REQUIRE(acc.witness.has_value());
  CHECK(acc.witness->s == PauliString::parse("ZI"));

  const DenseOperator zz(2, pauli_matrix(PauliString::parse("ZZ")), true);
  CHECK(hastad_verdict(zz, 0.01).verdict == Verdict::Reject);

  const HastadReport id = hastad_verdict(DenseOperator::identity(2), 0.01);
  CHECK(id.verdict == Verdict::Accept);
  REQUIRE(id.witness.has_value());
  CHECK(id.witness->s == PauliString::parse("II"));

  // beyond the guarantee range the verdict is withheld
  CHECK(hastad_verdict(zz, 0.2).verdict == Verdict::Inconclusive);
}

TEST_CASE("locality test accepts local operators") {
  CHECK(locality_test_probability(DenseOperator(2, pauli_matrix(PauliString::parse("XZ")), true)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  Rng rng(79);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + rep % 4;
    const DenseOperator f = random_local_boolean(n, rng);
    CHECK(locality_test_probability(f) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("locality test matches the brute-force state construction") {
  // entangled projector flip
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const DenseOperator fb = projector_qbf(DenseOperator(2, bell * bell.adjoint(), true));
  const double brute = test::locality_probability_bruteforce(fb);
  CHECK(locality_test_probability(fb) == doctest::Approx(brute).epsilon(1e-10));

  Rng rng(83);
  for (int rep = 0; rep < 3; ++rep) {
    const DenseOperator f = random_boolean(2, rng);
    CHECK(locality_test_probability(f) ==
          doctest::Approx(test::locality_probability_bruteforce(f)).epsilon(1e-10));
  }

  CHECK_THROWS_AS(locality_test_probability(DenseOperator::identity(3), 2),
                  std::invalid_argument);
}

TEST_CASE("discrimination probability") {
  const DenseOperator x(1, pauli_matrix(PauliString::parse("X")), true);
  const DenseOperator z(1, pauli_matrix(PauliString::parse("Z")), true);
  CHECK(discrimination_probability(x, z) == doctest::Approx(1.0));
  CHECK(discrimination_probability(x, x) == doctest::Approx(0.5));

  const double theta = M_PI / 6.0;
  Matrix tilted = std::cos(theta) * pauli_matrix(PauliString::parse("Z")) +
                  std::sin(theta) * pauli_matrix(PauliString::parse("X"));
  CHECK(discrimination_probability(z, DenseOperator(1, tilted, true)) ==
        doctest::Approx(0.75));

  CHECK_THROWS_AS(discrimination_probability(x, DenseOperator::identity(2)),
                  std::invalid_argument);
}

TEST_SUITE_END();
