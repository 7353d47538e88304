#pragma once

#include <vector>

#include "qbool/operators.hpp"
#include "qbool/truth_table.hpp"

namespace qbool {

/// Diagonal +-1 operator |x> -> (-1)^f(x) |x> on n qubits. Its spectrum is
/// supported on {I,Z}^n and matches the classical Fourier transform of f.
DenseOperator phase_oracle(const TruthTable& t);

/// Permutation operator |x>|y> -> |x>|y xor f(x)> on n+1 qubits; the target
/// is the new least significant qubit.
DenseOperator bit_oracle(const TruthTable& t);

/// I - 2P for a projector P (checked: Hermitian and P^2 = P within tol).
DenseOperator projector_qbf(const DenseOperator& p, double tol = kDefaultTol);

/// Normalized real combination sum_j alpha_j f_j of pairwise anticommuting
/// involutions. Checks sum alpha^2 = 1, each f_j boolean, and every pair's
/// anticommutator within tol; reports the offending pair on failure.
DenseOperator anticommuting_combination(const std::vector<double>& alphas,
                                        const std::vector<DenseOperator>& fs,
                                        double tol = kDefaultTol);

/// sgn(h) applied to the eigenvalues of Hermitian h, with sgn(x) = 1 for
/// x > 0 and -1 for x <= 0; eigenvalues within the zero band map to -1.
DenseOperator sign_function(const DenseOperator& h, double tol = kDefaultTol,
                            double zero_band = 1e-12);

/// Spin flip on qubit j: conjugation by sigma^2 at j combined with entrywise
/// complex conjugation. Maps sigma^k at j (identity elsewhere) to its
/// negative for k in {1,2,3}; an involution.
DenseOperator spin_flip(const DenseOperator& m, int qubit);

/// Spin flip on every qubit: sigma^2{xn} M^* sigma^2{xn}.
DenseOperator spin_flip_all(const DenseOperator& m);

/// Balancing: g = |0><0| (x) f  -  |1><1| (x) S{xn}(f) with the ancilla as
/// the new most significant qubit. Traceless, boolean, and preserves the
/// level-(<=1) weight of f.
DenseOperator balance(const DenseOperator& f, double tol = kDefaultTol);

}  // namespace qbool
