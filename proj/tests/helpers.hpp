#pragma once

#include <bit>
#include <cmath>
#include <vector>

#include "qbool/build.hpp"
#include "qbool/fourier.hpp"
#include "qbool/operators.hpp"
#include "qbool/random.hpp"

namespace qbool::test {

/// eps XX + sqrt(1-eps^2) YI, the standard two-term anticommuting example.
inline DenseOperator two_term(double eps) {
  DenseOperator xx(2, pauli_matrix(PauliString::parse("XX")), true);
  DenseOperator yi(2, pauli_matrix(PauliString::parse("YI")), true);
  return anticommuting_combination({eps, std::sqrt(1.0 - eps * eps)}, {xx, yi});
}

/// Classical Fourier coefficient 2^-n sum_T (-1)^{|S cap T|} f(T) in the
/// +-1 convention, by direct summation over all inputs. Independent oracle
/// for the phase-oracle spectra.
inline double classical_fourier(const TruthTable& t, long subset_mask) {
  double acc = 0;
  for (long x = 0; x < t.size(); ++x) {
    const int overlap = std::popcount(static_cast<unsigned long>(x & subset_mask));
    const double fx = t.values[x] ? -1.0 : 1.0;
    acc += (overlap % 2 ? -1.0 : 1.0) * fx;
  }
  return acc / static_cast<double>(t.size());
}

/// Brute-force acceptance probability of the purity test: builds the
/// 4^n-dimensional state (f (x) I)|Phi> in the computational basis (A block
/// then A' block) and sums reduced purities over all subsets of the n
/// (A_j, A'_j) pairs. Independent of the coefficient-tensor path.
inline double locality_probability_bruteforce(const DenseOperator& f) {
  const int n = f.n;
  const long d = f.dim();
  // |Phi> = 2^{-n/2} sum_x |x>_A |x>_A'; amplitude of |x>_A |y>_A' in
  // (f (x) I)|Phi> is f(x,y)/2^{n/2}.
  std::vector<Complex> psi(d * d);
  for (long x = 0; x < d; ++x)
    for (long y = 0; y < d; ++y)
      psi[x * d + y] = f.mat(x, y) / std::sqrt(static_cast<double>(d));

  auto pair_digit = [&](long idx, int j) {
    const long x = idx / d, y = idx % d;
    return 2 * ((x >> (n - 1 - j)) & 1) + ((y >> (n - 1 - j)) & 1);
  };

  double total = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (mask == 0) {
      total += 1.0;
      continue;
    }
    std::vector<int> kept, traced;
    for (int j = 0; j < n; ++j)
      ((mask >> (n - 1 - j)) & 1 ? kept : traced).push_back(j);
    const long dk = 1L << (2 * kept.size());
    const long dt = 1L << (2 * traced.size());
    Matrix m = Matrix::Zero(dk, dt);
    for (long idx = 0; idx < d * d; ++idx) {
      long r = 0, c = 0;
      for (int j : kept) r = (r << 2) | pair_digit(idx, j);
      for (int j : traced) c = (c << 2) | pair_digit(idx, j);
      m(r, c) += psi[idx];
    }
    const Matrix rho = m * m.adjoint();
    total += (rho * rho).trace().real();
  }
  return total / static_cast<double>(1L << n);
}

/// Exact-mode reference list: words with |f_hat_s|^2 >= gamma^2/2, the fixed
/// point of the pruning rule under noiseless weight estimates.
inline std::vector<PauliString> exact_large_coefficients(const Spectrum& spec, double gamma) {
  std::vector<PauliString> out;
  for (const auto& [s, c] : spec)
    if (std::norm(c) >= gamma * gamma / 2.0) out.push_back(s);
  return out;
}

}  // namespace qbool::test
