#include "qbool/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/QR>

#include "qbool/build.hpp"
#include "qbool/fourier.hpp"

namespace qbool {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  return g;
}

DenseOperator random_hermitian(int n, Rng& rng) {
  const long dim = 1L << n;
  Matrix g = random_ginibre(dim, dim, rng);
  return DenseOperator(n, (g + g.adjoint()) / 2.0, true);
}

DenseOperator random_traceless_hermitian(int n, Rng& rng) {
  DenseOperator h = random_hermitian(n, rng);
  const Complex mean = h.mat.trace() / static_cast<double>(h.dim());
  h.mat -= mean * Matrix::Identity(h.dim(), h.dim());
  return h;
}

Matrix random_unitary(long dim, Rng& rng) {
  Matrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= (d == Complex(0, 0)) ? 1.0 : d / std::abs(d);
  }
  return q;
}

namespace {

DenseOperator conjugated_diagonal(int n, const std::vector<double>& signs, Rng& rng) {
  const long dim = 1L << n;
  const Matrix u = random_unitary(dim, rng);
  Matrix d = Matrix::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) d(i, i) = signs[i];
  Matrix m = u.adjoint() * d * u;
  m = (m + m.adjoint()) / 2.0;
  return DenseOperator(n, std::move(m), true);
}

}  // namespace

DenseOperator random_boolean(int n, Rng& rng) {
  const long dim = 1L << n;
  std::vector<double> signs(dim);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : signs) s = coin(rng) ? 1.0 : -1.0;
  return conjugated_diagonal(n, signs, rng);
}

DenseOperator random_traceless_boolean(int n, Rng& rng) {
  const long dim = 1L << n;
  std::vector<double> signs(dim, 1.0);
  std::fill(signs.begin() + dim / 2, signs.end(), -1.0);
  std::shuffle(signs.begin(), signs.end(), rng);
  return conjugated_diagonal(n, signs, rng);
}

DenseOperator random_local_boolean(int n, Rng& rng) {
  Matrix m = Matrix::Identity(1, 1);
  for (int j = 0; j < n; ++j) {
    const auto u = random_unit_vector(3, rng);
    Eigen::Matrix2cd local = u[0] * pauli_2x2(1) + u[1] * pauli_2x2(2) + u[2] * pauli_2x2(3);
    m = kron(m, local);
  }
  return DenseOperator(n, std::move(m), true);
}

PauliString random_pauli_string(int n, Rng& rng) {
  std::uniform_int_distribution<int> sym(0, 3);
  std::vector<std::uint8_t> w(n);
  for (auto& c : w) c = static_cast<std::uint8_t>(sym(rng));
  return PauliString(std::move(w));
}

DenseOperator random_stabilizer(int n, Rng& rng) {
  return DenseOperator(n, pauli_matrix(random_pauli_string(n, rng)), true);
}

DenseOperator random_degree_bounded(int n, int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const long total = 1L << (2 * n);
  Vector coeffs = Vector::Zero(total);
  for (long p = 0; p < total; ++p) {
    if (word_from_index(p, n).weight() <= d) coeffs[p] = gauss(rng);
  }
  Matrix m = matrix_from_coefficients(coeffs, n);
  return DenseOperator(n, (m + m.adjoint()) / 2.0, true);
}

std::vector<PauliString> random_anticommuting_strings(int n, int m, Rng& rng) {
  if (m < 1 || m > 2 * n + 1)
    throw std::invalid_argument("anticommuting family size must be in [1, 2n+1]");
  // Ladder family: Z^k X 1..., Z^k Y 1... for k = 0..n-1, plus Z^n. Any two
  // members clash at exactly one position.
  std::vector<PauliString> family;
  for (int k = 0; k < n; ++k) {
    for (std::uint8_t sym : {std::uint8_t{1}, std::uint8_t{2}}) {
      std::vector<std::uint8_t> w(n, 0);
      for (int j = 0; j < k; ++j) w[j] = 3;
      w[k] = sym;
      family.emplace_back(std::move(w));
    }
  }
  family.emplace_back(std::vector<std::uint8_t>(n, 3));

  std::shuffle(family.begin(), family.end(), rng);
  family.resize(m);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& s : family) {
    std::vector<std::uint8_t> w(n);
    for (int j = 0; j < n; ++j) w[perm[j]] = s.symbol(j);
    s = PauliString(std::move(w));
  }
  return family;
}

AnticommutingSample random_anticommuting_boolean(int n, int m, Rng& rng) {
  AnticommutingSample out;
  out.strings = random_anticommuting_strings(n, m, rng);
  out.coefficients = random_unit_vector(m, rng);
  const long dim = 1L << n;
  Matrix acc = Matrix::Zero(dim, dim);
  for (int j = 0; j < m; ++j) acc += out.coefficients[j] * pauli_matrix(out.strings[j]);
  out.op = DenseOperator(n, std::move(acc), true);
  return out;
}

Eigen::Matrix2cd random_u2(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd g;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= (d == Complex(0, 0)) ? 1.0 : d / std::abs(d);
  }
  return q;
}

std::vector<double> random_unit_vector(int k, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(k);
  double norm_sq = 0;
  do {
    norm_sq = 0;
    for (auto& x : v) {
      x = gauss(rng);
      norm_sq += x * x;
    }
  } while (norm_sq < 1e-12);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& x : v) x *= inv;
  return v;
}

}  // namespace qbool
