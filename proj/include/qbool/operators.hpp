#pragma once

#include <vector>

#include "qbool/pauli.hpp"

namespace qbool {

/// Default tolerance for Hermiticity / booleanity / projector checks.
inline constexpr double kDefaultTol = 1e-9;

/// A dense operator on n qubits. Dense storage only; the design ceiling is
/// n = 10 (1024 x 1024).
struct DenseOperator {
  int n = 0;
  Matrix mat;
  bool hermitian = false;

  DenseOperator() = default;
  DenseOperator(int n_, Matrix m, bool hermitian_ = false);

  long dim() const { return 1L << n; }

  static DenseOperator identity(int n);
  static DenseOperator zero(int n);
  /// Wraps a matrix, inferring n from the dimension (must be a power of two)
  /// and detecting Hermiticity numerically.
  static DenseOperator from_matrix(const Matrix& m, double tol = kDefaultTol);
};

/// Kronecker product, first factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds an operator acting on the given (0-based, strictly increasing)
/// qubit positions into n qubits, identity elsewhere.
Matrix embed(int n, const std::vector<int>& positions, const Matrix& a);

/// Partial trace over the qubits in `traced` (0-based); the result acts on
/// the remaining qubits in their original order.
Matrix partial_trace(int n, const Matrix& m, const std::vector<int>& traced);

/// tr_J(f) (x) I_J / 2^|J| with the identity factors re-inserted at the
/// traced positions, i.e. the projection of f onto words vanishing on J.
Matrix mean_over_qubits(int n, const Matrix& m, const std::vector<int>& qubits);

/// Normalized Hilbert-Schmidt inner product <f,g> = 2^-n tr(f^dag g).
Complex inner_product(const DenseOperator& f, const DenseOperator& g);

/// Singular values (descending) via eigendecomposition of the symmetrized
/// f^dag f.
Eigen::VectorXd singular_values(const Matrix& m);

/// Normalized Schatten p-norm, p >= 1; p = infinity gives the largest
/// singular value (pass std::numeric_limits<double>::infinity()).
double schatten_norm(const DenseOperator& f, double p);
double schatten_norm(const Matrix& m, double p);

/// Largest singular value.
double operator_norm(const Matrix& m);

double hermiticity_error(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kDefaultTol);

/// True iff ||f^2 - I||_inf <= tol and ||f - f^dag||_inf <= tol.
bool is_quantum_boolean(const DenseOperator& f, double tol = kDefaultTol);

/// ||f^dag f - I||_inf.
double unitarity_error(const DenseOperator& f);

}  // namespace qbool
