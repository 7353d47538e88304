#pragma once

#include <cstdint>
#include <optional>

#include "qbool/operators.hpp"
#include "qbool/random.hpp"
#include "qbool/spectrum.hpp"

namespace qbool {

enum class Verdict { Accept, Reject, Inconclusive };

/// A witness word together with its squared coefficient and the phase of the
/// coefficient (closeness statements hold up to a phase).
struct Witness {
  PauliString s;
  double weight = 0;
  double phase = 0;
};

struct StabilizerResult {
  double probability = 0;          // sum_s |f_hat_s|^4
  std::optional<Witness> witness;  // present when 1 - probability < 1/2 and unique
};

/// Exact acceptance probability of the two-query equality test,
/// sum_s |f_hat_s|^4, with the closeness witness when one exists.
StabilizerResult stabilizer_test(const DenseOperator& f, double tol = kDefaultTol);
double stabilizer_test_probability(const DenseOperator& f, double tol = kDefaultTol);

struct SampleReport {
  double exact_probability = 0;
  long long accepted = 0;
  long long trials = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;

  double fraction() const {
    return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0;
  }
};

/// Monte-Carlo simulation of the equality test: each trial draws two words
/// independently from the Bell-measurement distribution {|f_hat_s|^2} and
/// accepts iff they match.
SampleReport stabilizer_test_sample(const DenseOperator& f, long long trials,
                                    std::uint64_t seed, double tol = kDefaultTol);

/// delta-damped variant: a matched pair of weight-w words is accepted with
/// probability (1-delta)^w.
SampleReport hastad_test_sample(const DenseOperator& f, double delta, long long trials,
                                std::uint64_t seed, double tol = kDefaultTol);

/// Exact acceptance probability of the damped equality test,
/// sum_s (1-delta)^|s| |f_hat_s|^4. Equals 1-delta on a stabilizer dictator.
double hastad_test_probability(const DenseOperator& f, double delta,
                               double tol = kDefaultTol);

struct HastadReport {
  double probability = 0;
  double delta = 0;
  double epsilon = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;  // weight <= 1 word with |f_hat|^2 >= 1-eps
};

/// Runs the damped test at delta = (3/4) epsilon; on acceptance >= 1-epsilon
/// locates the support-<=1 witness. The closeness guarantee assumes
/// epsilon <= 0.01; larger epsilon yields an inconclusive verdict.
HastadReport hastad_verdict(const DenseOperator& f, double epsilon,
                            double tol = kDefaultTol);

/// Exact acceptance probability of the purity-based locality test,
/// 2^-n sum_{S subset [n]} tr(rho_S^2), computed from the 4^n-entry
/// coefficient tensor of (f (x) I)|Phi>. Equals 1 for local f.
/// The state construction caps at `max_qubits`.
double locality_test_probability(const DenseOperator& f, int max_qubits = 6,
                                 double tol = kDefaultTol);

/// One-use Holevo-Helstrom discrimination probability,
/// 1/2 + 1/2 sqrt(1 - |<f1,f2>|^2).
double discrimination_probability(const DenseOperator& f1, const DenseOperator& f2,
                                  double tol = kDefaultTol);

/// The Bell-measurement distribution of f: words paired with |f_hat_s|^2,
/// normalized. Shared by the samplers and the learning oracle.
struct BellDistribution {
  std::vector<PauliString> words;
  std::vector<double> cumulative;  // normalized, last entry 1

  explicit BellDistribution(const Spectrum& spec);
  const PauliString& sample(Rng& rng) const;
};

}  // namespace qbool
