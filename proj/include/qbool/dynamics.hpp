#pragma once

#include <cstdint>
#include <vector>

#include "qbool/learning.hpp"
#include "qbool/operators.hpp"
#include "qbool/random.hpp"

namespace qbool {

/// Nearest-neighbour chain Hamiltonian H = sum_k h_k with h_k a Hermitian
/// 4x4 block on qubits (k, k+1), k = 0..n-2, and ||h_k||_inf <= norm_cap.
struct ChainHamiltonian {
  int n = 0;
  std::vector<Eigen::Matrix4cd> bonds;
  double norm_cap = 1.0;

  ChainHamiltonian() = default;
  ChainHamiltonian(int n_, std::vector<Eigen::Matrix4cd> bonds_, double norm_cap_ = 1.0);

  /// Gaussian Hermitian bonds rescaled to ||h_k||_inf = norm_cap.
  static ChainHamiltonian random(int n, Rng& rng, double norm_cap = 1.0);

  /// Dense 2^n x 2^n matrix of the full Hamiltonian.
  DenseOperator dense() const;
  /// Dense matrix of H restricted to the given bond indices.
  DenseOperator dense_restricted(const std::vector<int>& bond_set) const;
};

/// Heisenberg evolution sigma_j^s(t) = e^{-itH} sigma_j^s e^{itH} by full
/// eigendecomposition; the result is quantum boolean. Dense ceiling n <= 10.
DenseOperator evolve_observable(const ChainHamiltonian& h, int qubit, int symbol, double t);

/// Contiguous bond window of the given radius around `qubit`:
/// bonds max(0, qubit - radius) .. min(n-2, qubit + radius - 1); radius 0 is
/// the empty window (no evolution).
std::vector<int> bond_window(const ChainHamiltonian& h, int qubit, int radius);

struct ProfilePoint {
  int radius = 0;
  int window_size = 0;    // |Lambda|, number of bonds kept
  double discrepancy = 0; // 2^-n || sigma(t) - sigma_Lambda(t) ||_2^2
};

/// Truncation discrepancy profile: for each radius, the normalized squared
/// 2-norm gap between the full and window-restricted evolutions.
std::vector<ProfilePoint> lieb_robinson_profile(const ChainHamiltonian& h, int qubit,
                                                int symbol, double t,
                                                const std::vector<int>& radii);

struct DecayFit {
  double c = 0;  // prefactor
  double k = 0;  // growth rate in |t|
  double v = 0;  // decay rate in |Lambda|
  int points = 0;
};

/// Least-squares fit of log(discrepancy) = log c + k |t| - v |Lambda| over
/// profiles taken at one or more times. Points at or below `floor` are
/// excluded. The constants describe the observed light cone; nothing is
/// asserted against them.
DecayFit fit_light_cone(const std::vector<std::pair<double, std::vector<ProfilePoint>>>& profiles,
                        double floor = 1e-14);

struct LearnDynamicsResult {
  DenseOperator estimate;
  double error_sq = 0;  // ||estimate - sigma(t)||_2^2 against the exact evolution
  long long queries = 0;
  GlResult gl;
  double coefficient_eta = 0;
};

/// Learns sigma_j^s(t) through a simulated oracle: a large-coefficient
/// search at threshold gamma followed by coefficient re-estimation, with the
/// re-estimation radius chosen so the reconstruction meets
/// ||estimate - truth||_2^2 <= epsilon with confidence 1 - delta (union
/// bound across the estimates). Returns the true reconstruction error.
LearnDynamicsResult learn_dynamics(const ChainHamiltonian& h, int qubit, int symbol,
                                   double t, double gamma, double epsilon, double delta,
                                   std::uint64_t seed);

}  // namespace qbool
