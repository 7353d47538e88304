#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qbool/operators.hpp"
#include "qbool/spectrum.hpp"
#include "qbool/testing.hpp"

namespace qbool {

/// A set of Pauli words fixed on some positions and free elsewhere:
/// { t : t_j = symbol_j for every fixed position j }.
class IndicatorString {
 public:
  IndicatorString(int n, std::vector<std::pair<int, std::uint8_t>> fixed);

  /// Words fixed on the leading qubits 0..prefix.size()-1.
  static IndicatorString prefix(int n, std::vector<std::uint8_t> symbols);

  int qubits() const { return n_; }
  const std::vector<std::pair<int, std::uint8_t>>& fixed() const { return fixed_; }
  bool contains(const PauliString& t) const;
  /// Non-empty when the fixed positions are exactly 0..k-1.
  std::optional<std::vector<std::uint8_t>> as_prefix() const;

 private:
  int n_;
  std::vector<std::pair<int, std::uint8_t>> fixed_;  // sorted by position
};

struct WeightEstimate {
  double value = 0;
  double radius = 0;
  double confidence = 0;
  long long queries_used = 0;
};

/// A simulated black box around an operator. Measurement statistics are
/// drawn from the cached spectrum (identical output laws to the circuits,
/// tractable at n = 10); the counter tracks how many oracle applications the
/// simulated circuits would have consumed. In exact mode estimators return
/// noiseless values while accounting stays unchanged.
class OracleHandle {
 public:
  OracleHandle(DenseOperator op, std::uint64_t seed, bool exact_mode = false,
               double tol = kDefaultTol);

  const DenseOperator& op() const { return op_; }
  const Spectrum& spectrum() const { return spectrum_; }
  int qubits() const { return op_.n; }
  long long query_count() const { return query_count_; }
  bool exact_mode() const { return exact_; }
  std::uint64_t seed() const { return seed_; }

  /// Draws a word with probability |f_hat_s|^2; one oracle use.
  PauliString bell_sample();

  /// Majority vote over ceil(ln(1/delta) / (2 eps^2)) Bell samples; empty
  /// when no strict majority emerges.
  std::optional<PauliString> robust_identify(double epsilon, double delta);

  /// Estimates Re(f_hat_s) to within +-eta with confidence 1-delta from
  /// ceil(ln(2/delta) / (2 eta^2)) coin flips with head probability
  /// 1/2 + Re(f_hat_s)/2; each flip costs 2 oracle uses.
  double estimate_coefficient(const PauliString& s, double eta, double delta);

  /// Imaginary-part variant (an extra i phase on the control side of the
  /// interference circuit); same costs.
  double estimate_coefficient_imag(const PauliString& s, double eta, double delta);

  /// Estimates W(S) = sum_{t in S} |f_hat_t|^2. Default radius gamma^2/4;
  /// each flip costs 2 controlled applications of f plus 2 of f^dag.
  WeightEstimate estimate_weight(const IndicatorString& S, double gamma, double delta,
                                 std::optional<double> radius_override = std::nullopt);

  /// One Bell sample under the stabilizer promise.
  PauliString identify_stabilizer();

  /// Exact W(S) from the cached spectrum (test oracle and exact mode).
  double true_weight(const IndicatorString& S) const;

 private:
  long long binomial_draw(long long m, double p);

  DenseOperator op_;
  Spectrum spectrum_;
  BellDistribution bell_;
  long long query_count_ = 0;
  Rng rng_;
  std::uint64_t seed_;
  bool exact_;
};

struct GlResult {
  std::vector<std::pair<PauliString, double>> coefficients;
  long long estimations = 0;
  long long queries = 0;
  std::size_t max_list_size = 0;
  std::size_t list_cap = 0;   // floor(4 / gamma^2)
  bool cap_enforced = false;  // a pruning step exceeded the cap and was trimmed
};

/// Branch-and-bound search for the large Fourier coefficients. Prefixes over
/// qubits 0..k-1 survive when their estimated weight (accuracy +-gamma^2/4,
/// per-estimate confidence 1 - delta*gamma^2/(16n)) reaches gamma^2/2. With
/// probability 1-delta the output lists every word with |f_hat| >= gamma and
/// nothing below gamma/2. Listed coefficients are re-estimated to
/// +-coefficient_eta (default gamma/4).
GlResult goldreich_levin(OracleHandle& oracle, double gamma, double delta,
                         std::optional<double> coefficient_eta = std::nullopt,
                         std::optional<double> coefficient_delta = std::nullopt);

}  // namespace qbool
