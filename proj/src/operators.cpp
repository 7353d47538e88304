#include "qbool/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qbool {

namespace {

int infer_qubits(long dim) {
  if (dim < 2) throw std::invalid_argument("operator dimension must be at least 2");
  int n = 0;
  long d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("operator dimension is not a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

}  // namespace

DenseOperator::DenseOperator(int n_, Matrix m, bool hermitian_)
    : n(n_), mat(std::move(m)), hermitian(hermitian_) {
  if (mat.rows() != dim() || mat.cols() != dim())
    throw std::invalid_argument("matrix dimension does not match qubit count");
}

DenseOperator DenseOperator::identity(int n) {
  return DenseOperator(n, Matrix::Identity(1L << n, 1L << n), true);
}

DenseOperator DenseOperator::zero(int n) {
  return DenseOperator(n, Matrix::Zero(1L << n, 1L << n), true);
}

DenseOperator DenseOperator::from_matrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("operator matrix must be square");
  const int n = infer_qubits(m.rows());
  return DenseOperator(n, m, hermiticity_error(m) <= tol);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed(int n, const std::vector<int>& positions, const Matrix& a) {
  const int k = static_cast<int>(positions.size());
  if (a.rows() != (1L << k) || a.cols() != (1L << k))
    throw std::invalid_argument("embedded operator dimension does not match position count");
  for (int i = 0; i < k; ++i) {
    if (positions[i] < 0 || positions[i] >= n)
      throw std::invalid_argument("embed position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("embed positions must be strictly increasing");
  }
  const long dim = 1L << n;
  auto sub_index = [&](long x) {
    long r = 0;
    for (int i = 0; i < k; ++i) r = (r << 1) | ((x >> (n - 1 - positions[i])) & 1);
    return r;
  };
  // Mask of the untouched qubits; the embedded operator is block diagonal in
  // them.
  long rest_mask = dim - 1;
  for (int p : positions) rest_mask &= ~(1L << (n - 1 - p));

  Matrix out = Matrix::Zero(dim, dim);
  for (long row = 0; row < dim; ++row) {
    const long rest = row & rest_mask;
    const long ra = sub_index(row);
    for (long ca = 0; ca < (1L << k); ++ca) {
      if (a(ra, ca) == Complex(0, 0)) continue;
      long col = rest;
      for (int i = 0; i < k; ++i) {
        const long bit = (ca >> (k - 1 - i)) & 1;
        col |= bit << (n - 1 - positions[i]);
      }
      out(row, col) = a(ra, ca);
    }
  }
  return out;
}

Matrix partial_trace(int n, const Matrix& m, const std::vector<int>& traced) {
  const long dim = 1L << n;
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("partial_trace dimension mismatch");
  std::vector<bool> is_traced(n, false);
  for (int p : traced) {
    if (p < 0 || p >= n) throw std::invalid_argument("partial_trace position out of range");
    if (is_traced[p]) throw std::invalid_argument("duplicate traced position");
    is_traced[p] = true;
  }
  std::vector<int> kept;
  for (int j = 0; j < n; ++j)
    if (!is_traced[j]) kept.push_back(j);
  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const long dk = 1L << nk, dt = 1L << nt;

  auto assemble = [&](long kept_bits, long traced_bits) {
    long x = 0;
    for (int i = 0; i < nk; ++i)
      x |= ((kept_bits >> (nk - 1 - i)) & 1) << (n - 1 - kept[i]);
    int ti = 0;
    for (int j = 0; j < n; ++j) {
      if (is_traced[j]) {
        x |= ((traced_bits >> (nt - 1 - ti)) & 1) << (n - 1 - j);
        ++ti;
      }
    }
    return x;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex acc(0, 0);
      for (long z = 0; z < dt; ++z) acc += m(assemble(r, z), assemble(c, z));
      out(r, c) = acc;
    }
  return out;
}

Matrix mean_over_qubits(int n, const Matrix& m, const std::vector<int>& qubits) {
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  const Matrix reduced = partial_trace(n, m, sorted);
  const int k = static_cast<int>(sorted.size());
  // Re-insert identity factors at the traced slots.
  std::vector<bool> is_traced(n, false);
  for (int p : sorted) is_traced[p] = true;
  std::vector<int> kept;
  for (int j = 0; j < n; ++j)
    if (!is_traced[j]) kept.push_back(j);
  if (kept.empty()) {
    const Complex tr = reduced(0, 0);
    return (tr / static_cast<double>(1L << n)) * Matrix::Identity(1L << n, 1L << n);
  }
  return embed(n, kept, reduced) / static_cast<double>(1L << k);
}

Complex inner_product(const DenseOperator& f, const DenseOperator& g) {
  if (f.n != g.n) throw std::invalid_argument("inner_product dimension mismatch");
  const Complex tr = (f.mat.conjugate().cwiseProduct(g.mat)).sum();
  return tr / static_cast<double>(f.dim());
}

Eigen::VectorXd singular_values(const Matrix& m) {
  Matrix gram = m.adjoint() * m;
  gram = (gram + gram.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  Eigen::VectorXd sv = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<double>());
  return sv;
}

double schatten_norm(const Matrix& m, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Schatten norm requires p >= 1");
  const Eigen::VectorXd sv = singular_values(m);
  const double top = sv(0);
  if (std::isinf(p) || top == 0.0) return top;
  // Factor out the largest singular value to avoid overflow at large p.
  double acc = 0.0;
  for (long i = 0; i < sv.size(); ++i) acc += std::pow(sv(i) / top, p);
  return top * std::pow(acc / static_cast<double>(sv.size()), 1.0 / p);
}

double schatten_norm(const DenseOperator& f, double p) { return schatten_norm(f.mat, p); }

double operator_norm(const Matrix& m) {
  return schatten_norm(m, std::numeric_limits<double>::infinity());
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) { return hermiticity_error(m) <= tol; }

bool is_quantum_boolean(const DenseOperator& f, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const Matrix sq = f.mat * f.mat;
  const Matrix eye = Matrix::Identity(f.dim(), f.dim());
  if (operator_norm(sq - eye) > tol) return false;
  return operator_norm(f.mat - f.mat.adjoint()) <= tol;
}

double unitarity_error(const DenseOperator& f) {
  const Matrix eye = Matrix::Identity(f.dim(), f.dim());
  return operator_norm(f.mat.adjoint() * f.mat - eye);
}

}  // namespace qbool
