#pragma once

#include <cstdint>

#include "qbool/operators.hpp"
#include "qbool/random.hpp"
#include "qbool/spectrum.hpp"

namespace qbool {

/// Noise rates below this bound make the channel fail complete positivity;
/// the spectral multiplier still accepts them.
inline constexpr double kCompletelyPositiveFloor = -1.0 / 3.0;

/// Multiplies each coefficient by epsilon^|s|; epsilon in [-1,1]. Satisfies
/// the semigroup law exactly.
Spectrum apply_noise(const Spectrum& spec, double epsilon);

/// The same map realized channel-wise: (1-eps)/2 tr_j(f) (x) I_j + eps f on
/// every qubit. Restricted to the completely positive range [-1/3, 1].
DenseOperator depolarize(const DenseOperator& f, double epsilon);

struct HyperReport {
  double p = 0, q = 0, epsilon = 0;
  double input_norm = 0;   // ||f||_p
  double noisy_norm = 0;   // ||T_eps f||_q
  double margin = 0;       // input_norm - noisy_norm
  bool in_theorem_regime = false;
};

/// margin = ||f||_p - ||T_eps f||_q, with the regime flag
/// (1 <= p <= 2 <= q and eps <= sqrt((p-1)/(q-1))); in regime the margin is
/// nonnegative up to numerical tolerance.
HyperReport hypercontractivity_check(const DenseOperator& f, double p, double q,
                                     double epsilon, double tol = kDefaultTol);

struct LowDegreeReport {
  int degree = 0;
  double q = 0, p_dual = 0;
  double norm_2 = 0, norm_q = 0, norm_p = 0;
  double margin_upper = 0;  // (q-1)^{d/2} ||f||_2 - ||f||_q
  double margin_lower = 0;  // ||f||_p - (p-1)^{d/2} ||f||_2
};

/// Smoothness of low-degree operators: ||f||_q <= (q-1)^{d/2} ||f||_2 for
/// q >= 2, with the dual bound at p = q/(q-1).
LowDegreeReport low_degree_norm_check(const DenseOperator& f, double q);

struct RankBoundReport {
  int nonzero_eigenvalues = 0;
  int degree = 0;
  double bound = 0;  // 2^{n - (2 log2 e) d}
  bool holds = false;
};

/// Eigenvalue-count lower bound m >= 2^{n - (2 log2 e) d} for non-zero
/// Hermitian operators of degree d.
RankBoundReport rank_bound_check(const DenseOperator& f, double rank_tol = 1e-8);

struct ProjectorLevel1Report {
  double level1_weight = 0;
  double q = 0, p_dual = 0;
  double bound = 0;  // (q-1) ||P||_1^{2/p}
  double margin = 0;
};

/// ||P^{=1}||_2^2 <= (q-1) ||P||_1^{2/p} for projectors, 1/p + 1/q = 1.
ProjectorLevel1Report projector_level1_check(const DenseOperator& p, double q,
                                             double tol = kDefaultTol);

struct SearchReport {
  double best_ratio = 0;
  Spectrum best_spectrum;
  int restarts = 0;
  long long evaluations = 0;
  std::uint64_t seed = 0;
  bool in_theorem_regime = false;
};

/// Maximizes ||T_eps f||_q / ||f||_p over Hermitian f by random restarts and
/// coordinate perturbations on the unit sphere of real Pauli coefficient
/// vectors. Inside the proven regime a ratio above 1 + 1e-6 indicates an
/// implementation bug; outside it the result is exploratory data.
SearchReport search_violation(double p, double q, double epsilon, int n, int restarts,
                              std::uint64_t seed);

}  // namespace qbool
