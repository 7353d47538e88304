#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qbool/operators.hpp"
#include "qbool/pauli.hpp"

namespace qbool {

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a base seed and an index
/// (splitmix64 mixing), for parallel restarts and per-run streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Gaussian complex matrix with i.i.d. standard normal real/imag parts.
Matrix random_ginibre(int rows, int cols, Rng& rng);

/// Hermitian matrix (G + G^dag)/2 with Gaussian G.
DenseOperator random_hermitian(int n, Rng& rng);

/// Hermitian with the identity component removed.
DenseOperator random_traceless_hermitian(int n, Rng& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix.
Matrix random_unitary(long dim, Rng& rng);

/// Random quantum boolean: U^dag D U with Haar U and uniform +-1 diagonal D.
DenseOperator random_boolean(int n, Rng& rng);

/// Random traceless quantum boolean: the diagonal carries equally many +1
/// and -1 entries.
DenseOperator random_traceless_boolean(int n, Rng& rng);

/// Tensor product of single-qubit involutions u.sigma with random unit u.
DenseOperator random_local_boolean(int n, Rng& rng);

/// Uniform Pauli word / stabilizer operator.
PauliString random_pauli_string(int n, Rng& rng);
DenseOperator random_stabilizer(int n, Rng& rng);

/// Hermitian operator with Gaussian real coefficients on all words of weight
/// at most d (so its degree is at most d).
DenseOperator random_degree_bounded(int n, int d, Rng& rng);

/// A pairwise anticommuting family of m distinct Pauli words on n qubits,
/// m <= 2n + 1, drawn from the ladder family (X, Y, ZX, ZY, ZZX, ...) under
/// a random qubit relabeling.
std::vector<PauliString> random_anticommuting_strings(int n, int m, Rng& rng);

/// Random unit coefficient vector on a random anticommuting family; the
/// result is quantum boolean with known spectrum.
struct AnticommutingSample {
  std::vector<PauliString> strings;
  std::vector<double> coefficients;
  DenseOperator op;
};
AnticommutingSample random_anticommuting_boolean(int n, int m, Rng& rng);

/// Haar-distributed single-qubit unitary (QR construction on U(2)).
Eigen::Matrix2cd random_u2(Rng& rng);

/// Random point on the unit sphere in R^k.
std::vector<double> random_unit_vector(int k, Rng& rng);

}  // namespace qbool
