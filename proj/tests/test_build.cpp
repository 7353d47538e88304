#include <doctest.h>

#include "helpers.hpp"
#include "qbool/build.hpp"
#include "qbool/fourier.hpp"
#include "qbool/random.hpp"

using namespace qbool;
using qbool::test::two_term;

TEST_SUITE_BEGIN("qbf_build");

TEST_CASE("phase oracle") {
  const DenseOperator dict = phase_oracle(TruthTable::parse("01"));
  CHECK((dict.mat - pauli_matrix(PauliString::parse("Z"))).cwiseAbs().maxCoeff() == 0.0);

  const DenseOperator constant = phase_oracle(TruthTable::parse("0000"));
  CHECK((constant.mat - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const DenseOperator parity = phase_oracle(TruthTable::parse("0110"));
  CHECK((parity.mat - pauli_matrix(PauliString::parse("ZZ"))).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("phase oracle spectra live on {I,Z} words and match the classical sum") {
  Rng rng(41);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 3;
    std::vector<std::uint8_t> bits(1L << n);
    for (auto& b : bits) b = rng() & 1;
    const TruthTable t(n, bits);
    const Spectrum spec = fourier_transform(phase_oracle(t));
    for (const auto& [s, c] : spec) {
      long mask = 0;
      for (int j = 0; j < n; ++j) {
        CHECK((s.symbol(j) == 0 || s.symbol(j) == 3));
        if (s.symbol(j) == 3) mask |= 1L << (n - 1 - j);
      }
      CHECK(c.real() == doctest::Approx(test::classical_fourier(t, mask)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bit oracle") {
  const DenseOperator cnot = bit_oracle(TruthTable::parse("01"));
  Matrix expected(4, 4);
  expected << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  CHECK((cnot.mat - expected).cwiseAbs().maxCoeff() == 0.0);

  const DenseOperator trivial = bit_oracle(TruthTable::constant(3, 0));
  CHECK((trivial.mat - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(43);
  std::vector<std::uint8_t> bits(8);
  for (auto& b : bits) b = rng() & 1;
  const DenseOperator u = bit_oracle(TruthTable(3, bits));
  CHECK((u.mat * u.mat - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bit oracle reproduces the phase oracle on the minus ancilla") {
  Rng rng(47);
  std::vector<std::uint8_t> bits(8);
  for (auto& b : bits) b = rng() & 1;
  const TruthTable t(3, bits);
  const DenseOperator u = bit_oracle(t);
  // K maps |x> to |x>|->; the sandwich K^dag U K is the phase action.
  Matrix k = Matrix::Zero(16, 8);
  for (long x = 0; x < 8; ++x) {
    k(2 * x, x) = 1.0 / std::sqrt(2.0);
    k(2 * x + 1, x) = -1.0 / std::sqrt(2.0);
  }
  const Matrix sandwich = k.adjoint() * u.mat * k;
  CHECK((sandwich - phase_oracle(t).mat).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("projector construction") {
  CHECK((projector_qbf(DenseOperator::zero(1)).mat - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // I - 2P sends the projected direction to eigenvalue -1
  Matrix pm(2, 2);
  pm << 1, 0, 0, 0;
  CHECK((projector_qbf(DenseOperator(1, pm, true)).mat +
         pauli_matrix(PauliString::parse("Z")))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // uniform superposition state on two qubits: one -1 eigenvalue
  Vector v = Vector::Constant(4, 0.5);
  const DenseOperator p(2, v * v.adjoint(), true);
  const DenseOperator f = projector_qbf(p);
  CHECK(is_quantum_boolean(f, 1e-12));
  Eigen::SelfAdjointEigenSolver<Matrix> es(f.mat);
  int negatives = 0;
  for (long i = 0; i < 4; ++i) negatives += es.eigenvalues()(i) < 0;
  CHECK(negatives == 1);

  CHECK_THROWS_AS(projector_qbf(DenseOperator(1, 0.5 * pm, true)), std::invalid_argument);
}

TEST_CASE("anticommuting combination") {
  const Spectrum spec = fourier_transform(two_term(0.6));
  CHECK(spec.real_coefficient(PauliString::parse("XX")) == doctest::Approx(0.6));
  CHECK(spec.real_coefficient(PauliString::parse("YI")) == doctest::Approx(0.8));

  const DenseOperator z(1, pauli_matrix(PauliString::parse("Z")), true);
  const DenseOperator single = anticommuting_combination({1.0}, {z});
  CHECK((single.mat - z.mat).cwiseAbs().maxCoeff() == 0.0);

  const DenseOperator x(1, pauli_matrix(PauliString::parse("X")), true);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_WITH_AS(anticommuting_combination({r, r}, {x, x}),
                       doctest::Contains("do not anticommute"), std::invalid_argument);
  CHECK_THROWS_AS(anticommuting_combination({0.5, 0.5}, {x, z}), std::invalid_argument);
}

TEST_CASE("sign function") {
  Matrix h(2, 2);
  h << 2, 0, 0, -3;
  CHECK((sign_function(DenseOperator(1, h, true)).mat -
         pauli_matrix(PauliString::parse("Z")))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  // all eigenvalues of the zero operator map to -1
  CHECK((sign_function(DenseOperator::zero(1)).mat + Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  const Matrix x = pauli_matrix(PauliString::parse("X"));
  CHECK((sign_function(DenseOperator(1, 0.3 * x, true)).mat - x).cwiseAbs().maxCoeff() <=
        1e-12);

  CHECK_THROWS_AS(sign_function(DenseOperator(1, Complex(0, 1) * x, false)),
                  std::invalid_argument);
}

TEST_CASE("spin flip") {
  const DenseOperator z(1, pauli_matrix(PauliString::parse("Z")), true);
  CHECK((spin_flip(z, 0).mat + z.mat).cwiseAbs().maxCoeff() <= 1e-15);
  for (int sym = 1; sym <= 3; ++sym) {
    const DenseOperator s(2, pauli_matrix(PauliString::single(2, 1, sym)), true);
    CHECK((spin_flip(s, 1).mat + s.mat).cwiseAbs().maxCoeff() <= 1e-15);
  }
  CHECK((spin_flip(DenseOperator::identity(1), 0).mat - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  Rng rng(53);
  const DenseOperator m(1, random_ginibre(2, 2, rng), false);
  const DenseOperator twice = spin_flip(spin_flip(m, 0), 0);
  CHECK((twice.mat - m.mat).cwiseAbs().maxCoeff() <= 1e-14);

  CHECK_THROWS_AS(spin_flip(m, 1), std::invalid_argument);
}

TEST_CASE("balance") {
  // constants become the ancilla dictator
  const DenseOperator g = balance(DenseOperator::identity(1));
  CHECK((g.mat - pauli_matrix(PauliString::parse("ZI"))).cwiseAbs().maxCoeff() <= 1e-15);
  const Spectrum gs = fourier_transform(g);
  CHECK(gs.real_coefficient(PauliString::parse("ZI")) == doctest::Approx(1.0));

  const DenseOperator z(1, pauli_matrix(PauliString::parse("Z")), true);
  const DenseOperator bz = balance(z);
  CHECK(std::abs(bz.mat.trace()) <= 1e-12);
  CHECK(fourier_transform(bz).weight_per_level()[1] == doctest::Approx(1.0));

  CHECK_THROWS_AS(balance(DenseOperator(1, 0.5 * Matrix::Identity(2, 2), true)),
                  std::invalid_argument);
}

TEST_CASE("balance is traceless and preserves low-level weight on random inputs") {
  Rng rng(59);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const DenseOperator f = random_boolean(n, rng);
    const DenseOperator g = balance(f);
    CHECK(is_quantum_boolean(g, 1e-9));
    CHECK(std::abs(g.mat.trace()) / static_cast<double>(g.dim()) <= 1e-10);

    const auto wf = fourier_transform(f).weight_per_level();
    const auto wg = fourier_transform(g).weight_per_level();
    CHECK(wg[0] <= 1e-10);
    CHECK(wg[1] == doctest::Approx(wf[0] + wf[1]).epsilon(1e-10));
  }
}

TEST_CASE("every constructor output is quantum boolean") {
  Rng rng(61);
  CHECK(is_quantum_boolean(phase_oracle(TruthTable::majority(3)), 1e-9));
  std::vector<std::uint8_t> bits(8);
  for (auto& b : bits) b = rng() & 1;
  CHECK(is_quantum_boolean(bit_oracle(TruthTable(3, bits)), 1e-9));
  CHECK(is_quantum_boolean(two_term(0.37), 1e-9));
  CHECK(is_quantum_boolean(sign_function(random_hermitian(3, rng)), 1e-9));
  CHECK(is_quantum_boolean(random_boolean(3, rng), 1e-9));
  CHECK(is_quantum_boolean(random_local_boolean(4, rng), 1e-9));
  CHECK(is_quantum_boolean(balance(random_boolean(2, rng)), 1e-9));
}

TEST_SUITE_END();
