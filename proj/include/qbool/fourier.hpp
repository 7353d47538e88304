#pragma once

#include "qbool/operators.hpp"
#include "qbool/spectrum.hpp"

namespace qbool {

/// Pauli-basis Fourier transform, f_hat_s = 2^-n tr(sigma^s f), computed with
/// n successive local 4x4 basis changes on the 4^n-entry coefficient tensor
/// (cost O(n 4^n)). Coefficients at or below the sparsity threshold are
/// dropped.
Spectrum fourier_transform(const DenseOperator& f, double hermitian_tol = kDefaultTol);

/// Single coefficient by direct trace against sigma^s, O(2^n). Retained as an
/// independent reference path for the fast transform.
Complex fourier_coefficient(const DenseOperator& f, const PauliString& s);

/// Full spectrum via the direct per-coefficient trace, O(8^n). Reference path.
Spectrum fourier_transform_direct(const DenseOperator& f, double hermitian_tol = kDefaultTol);

/// Reconstructs the dense matrix f = sum_s f_hat_s sigma^s.
DenseOperator inverse_fourier(const Spectrum& spec);

/// Raw-array variants used by transforms and searches. Coefficient tensors
/// hold 4^n entries; the digit of qubit j (0-based, qubit 0 most significant)
/// selects the Pauli symbol at that position.
Vector coefficient_tensor(const Matrix& m, int n);
Matrix matrix_from_coefficients(const Vector& coeffs, int n);
Spectrum spectrum_from_tensor(const Vector& coeffs, int n, bool real_coefficients);

/// Flat tensor index of a Pauli word, and back.
long tensor_index(const PauliString& s);
PauliString word_from_index(long index, int n);

}  // namespace qbool
