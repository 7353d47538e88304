#pragma once

#include <string>
#include <vector>

#include "qbool/operators.hpp"
#include "qbool/spectrum.hpp"

namespace qbool {

/// Fourier weight above level 1: sum over |s| > 1 of |f_hat_s|^2.
double high_level_weight(const DenseOperator& f, double tol = kDefaultTol);
double high_level_weight(const Spectrum& spec);

struct DictatorSearch {
  bool found = false;
  int qubit = -1;
  DenseOperator dictator;   // single-qubit-supported quantum boolean
  double distance = 0;      // ||f - h||_2^2 / 4
  bool balanced_first = false;
  bool on_ancilla = false;  // the best qubit is the balancing ancilla
  std::vector<double> qubit_weights;
};

/// Picks the qubit carrying the most single-qubit Fourier weight and
/// renormalizes its coefficient triple into a bona fide quantum boolean
/// dictator. Operators with non-negligible trace are balanced first (the
/// ancilla becomes qubit 0 of the analyzed operator).
DictatorSearch nearest_dictator(const DenseOperator& f, double tol = kDefaultTol);

struct ExactFknReport {
  enum class Kind { Dictator, Constant, Rejected };
  Kind kind = Kind::Rejected;
  int qubit = -1;  // dictator qubit in the analyzed (possibly balanced) labeling
  std::vector<double> lambdas;  // per-qubit level-1 block norms
  double lambda_sum = 0;
  double high_level = 0;
  bool balanced_first = false;
  std::string reason;
};

/// Exact degree-<=1 classification: per-qubit block eigenvalues
/// lambda_i = sqrt(sum of the three squared singleton coefficients) must sum
/// to one with a single non-zero block; classifies dictator vs constant.
/// Throws when the high-level weight exceeds tol.
ExactFknReport exact_fkn_check(const DenseOperator& f, double tol = kDefaultTol);

struct FknInftyReport {
  double epsilon = 0;
  double input_distance = 0;     // ||f - g||_inf
  double dictator_distance = 0;  // ||f - sgn(g)||_inf
  double bound = 0;              // 2 epsilon
  bool holds = false;
  double max_weyl_gap = 0;  // max_j |lambda_j(f) - lambda_j(g)| (sorted)
  bool balanced_first = false;
};

/// Builds the dictator h = sgn(g) from a degree-1 Hermitian g with
/// ||f - g||_inf <= epsilon < 1/2 and verifies ||f - h||_inf <= 2 epsilon.
/// Operators with non-negligible trace are balanced first, with g lifted by
/// the same block construction.
FknInftyReport fkn_infty_check(const DenseOperator& f, const DenseOperator& g,
                               double epsilon, double tol = kDefaultTol);

struct TwoNormEvidence {
  double high_level = 0;
  DictatorSearch dictator;
  double ratio = 0;  // distance / high_level (0 when both vanish)
  double q_norm2_sq = 0;
  bool deg2_bound_ok = false;
};

/// Per-instance diagnostics for the 2-norm closeness evidence sweep: the
/// distance-to-weight ratio plus the degree-2 eigenvalue-spread bound
/// ||q||_2^2 <= delta^2 (1-p) / (1 - 9 sqrt(p)) on q = l^2 - (1-eps) I,
/// checked across the eigenvalue grid of q wherever 1 - 9 sqrt(p) > 0.
TwoNormEvidence two_norm_evidence(const DenseOperator& f, double tol = kDefaultTol);

}  // namespace qbool
