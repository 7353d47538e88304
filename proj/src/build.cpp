#include "qbool/build.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qbool {

DenseOperator phase_oracle(const TruthTable& t) {
  const long dim = t.size();
  Matrix m = Matrix::Zero(dim, dim);
  for (long x = 0; x < dim; ++x) m(x, x) = t.values[x] ? -1.0 : 1.0;
  return DenseOperator(t.n, std::move(m), true);
}

DenseOperator bit_oracle(const TruthTable& t) {
  const long dim = 2 * t.size();
  Matrix m = Matrix::Zero(dim, dim);
  for (long x = 0; x < t.size(); ++x) {
    for (long y = 0; y < 2; ++y) {
      const long yp = y ^ t.values[x];
      m(2 * x + yp, 2 * x + y) = 1.0;
    }
  }
  return DenseOperator(t.n + 1, std::move(m), true);
}

DenseOperator projector_qbf(const DenseOperator& p, double tol) {
  if (hermiticity_error(p.mat) > tol)
    throw std::invalid_argument("projector input is not Hermitian within tolerance");
  if (operator_norm(p.mat * p.mat - p.mat) > tol)
    throw std::invalid_argument("input is not a projector within tolerance");
  Matrix m = Matrix::Identity(p.dim(), p.dim()) - 2.0 * p.mat;
  return DenseOperator(p.n, std::move(m), true);
}

DenseOperator anticommuting_combination(const std::vector<double>& alphas,
                                        const std::vector<DenseOperator>& fs,
                                        double tol) {
  if (alphas.size() != fs.size() || fs.empty())
    throw std::invalid_argument("need one coefficient per operator");
  const double norm_sq =
      std::inner_product(alphas.begin(), alphas.end(), alphas.begin(), 0.0);
  if (std::abs(norm_sq - 1.0) > tol)
    throw std::invalid_argument("coefficients are not normalized: sum alpha^2 = " +
                                std::to_string(norm_sq));
  const int n = fs.front().n;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].n != n) throw std::invalid_argument("operator qubit counts differ");
    if (!is_quantum_boolean(fs[j], tol))
      throw std::invalid_argument("operator " + std::to_string(j) +
                                  " is not quantum boolean within tolerance");
  }
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (std::size_t k = j + 1; k < fs.size(); ++k) {
      const Matrix anti = fs[j].mat * fs[k].mat + fs[k].mat * fs[j].mat;
      if (operator_norm(anti) > tol)
        throw std::invalid_argument("operators " + std::to_string(j) + " and " +
                                    std::to_string(k) + " do not anticommute");
    }
  }
  Matrix m = Matrix::Zero(fs.front().dim(), fs.front().dim());
  for (std::size_t j = 0; j < fs.size(); ++j) m += alphas[j] * fs[j].mat;
  DenseOperator out(n, std::move(m), true);
  if (!is_quantum_boolean(out, std::max(tol, 1e-9) * 10))
    throw std::runtime_error("combination failed the booleanity check");
  return out;
}

DenseOperator sign_function(const DenseOperator& h, double tol, double zero_band) {
  if (hermiticity_error(h.mat) > tol)
    throw std::invalid_argument("sign_function needs a Hermitian input");
  Eigen::SelfAdjointEigenSolver<Matrix> es((h.mat + h.mat.adjoint()) / 2.0);
  Eigen::VectorXd signs(es.eigenvalues().size());
  for (long i = 0; i < signs.size(); ++i)
    signs(i) = es.eigenvalues()(i) > zero_band ? 1.0 : -1.0;
  Matrix m = es.eigenvectors() * signs.asDiagonal() * es.eigenvectors().adjoint();
  return DenseOperator(h.n, std::move(m), true);
}

DenseOperator spin_flip(const DenseOperator& m, int qubit) {
  if (qubit < 0 || qubit >= m.n) throw std::invalid_argument("spin flip qubit out of range");
  const Matrix y = embed(m.n, {qubit}, pauli_2x2(2));
  return DenseOperator(m.n, y * m.mat.conjugate() * y, false);
}

DenseOperator spin_flip_all(const DenseOperator& m) {
  const Matrix y = pauli_matrix(PauliString(std::vector<std::uint8_t>(m.n, 2)));
  return DenseOperator(m.n, y * m.mat.conjugate() * y, false);
}

DenseOperator balance(const DenseOperator& f, double tol) {
  if (!is_quantum_boolean(f, tol))
    throw std::invalid_argument("balance needs a quantum boolean input");
  const long dim = f.dim();
  Matrix g = Matrix::Zero(2 * dim, 2 * dim);
  g.topLeftCorner(dim, dim) = f.mat;
  g.bottomRightCorner(dim, dim) = -spin_flip_all(f).mat;
  return DenseOperator(f.n + 1, std::move(g), true);
}

}  // namespace qbool
