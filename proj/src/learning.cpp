#include "qbool/learning.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qbool/fourier.hpp"

namespace qbool {

namespace {

// Two-sided Hoeffding count for the +-1-scaled estimator 2*fraction - 1:
// |estimate - truth| <= radius with probability >= 1 - delta.
long long hoeffding_samples(double delta, double radius) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("confidence delta must lie in (0,1)");
  if (radius <= 0 || radius >= 1) throw std::invalid_argument("radius must lie in (0,1)");
  return static_cast<long long>(std::ceil(2.0 * std::log(2.0 / delta) / (radius * radius)));
}

}  // namespace

IndicatorString::IndicatorString(int n, std::vector<std::pair<int, std::uint8_t>> fixed)
    : n_(n), fixed_(std::move(fixed)) {
  std::sort(fixed_.begin(), fixed_.end());
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    const auto& [pos, sym] = fixed_[i];
    if (pos < 0 || pos >= n_) throw std::invalid_argument("indicator position out of range");
    if (sym > 3) throw std::invalid_argument("indicator symbol out of range");
    if (i > 0 && fixed_[i - 1].first == pos)
      throw std::invalid_argument("duplicate indicator position");
  }
}

IndicatorString IndicatorString::prefix(int n, std::vector<std::uint8_t> symbols) {
  std::vector<std::pair<int, std::uint8_t>> fixed;
  fixed.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i)
    fixed.emplace_back(static_cast<int>(i), symbols[i]);
  return IndicatorString(n, std::move(fixed));
}

bool IndicatorString::contains(const PauliString& t) const {
  if (t.size() != n_) return false;
  for (const auto& [pos, sym] : fixed_)
    if (t.symbol(pos) != sym) return false;
  return true;
}

std::optional<std::vector<std::uint8_t>> IndicatorString::as_prefix() const {
  std::vector<std::uint8_t> symbols(fixed_.size());
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    if (fixed_[i].first != static_cast<int>(i)) return std::nullopt;
    symbols[i] = fixed_[i].second;
  }
  return symbols;
}

OracleHandle::OracleHandle(DenseOperator op, std::uint64_t seed, bool exact_mode, double tol)
    : op_(std::move(op)),
      spectrum_(fourier_transform(op_)),
      bell_(spectrum_),
      rng_(seed),
      seed_(seed),
      exact_(exact_mode) {
  if (unitarity_error(op_) > tol)
    throw std::invalid_argument("oracle operator is not unitary within tolerance");
}

PauliString OracleHandle::bell_sample() {
  query_count_ += 1;
  return bell_.sample(rng_);
}

std::optional<PauliString> OracleHandle::robust_identify(double epsilon, double delta) {
  if (epsilon <= 0 || delta <= 0 || delta >= 1)
    throw std::invalid_argument("robust_identify parameters out of range");
  const long long q =
      static_cast<long long>(std::ceil(std::log(1.0 / delta) / (2.0 * epsilon * epsilon)));
  std::map<PauliString, long long> votes;
  for (long long i = 0; i < q; ++i) ++votes[bell_sample()];
  for (const auto& [s, count] : votes) {
    if (2 * count > q) return s;
  }
  return std::nullopt;
}

long long OracleHandle::binomial_draw(long long m, double p) {
  p = std::clamp(p, 0.0, 1.0);
  std::binomial_distribution<long long> bin(m, p);
  return bin(rng_);
}

double OracleHandle::estimate_coefficient(const PauliString& s, double eta, double delta) {
  const long long m = hoeffding_samples(delta, eta);
  query_count_ += 2 * m;
  const double truth = spectrum_.coefficient(s).real();
  if (exact_) return truth;
  const long long heads = binomial_draw(m, 0.5 + 0.5 * truth);
  return 2.0 * static_cast<double>(heads) / static_cast<double>(m) - 1.0;
}

double OracleHandle::estimate_coefficient_imag(const PauliString& s, double eta,
                                               double delta) {
  const long long m = hoeffding_samples(delta, eta);
  query_count_ += 2 * m;
  const double truth = spectrum_.coefficient(s).imag();
  if (exact_) return truth;
  const long long heads = binomial_draw(m, 0.5 + 0.5 * truth);
  return 2.0 * static_cast<double>(heads) / static_cast<double>(m) - 1.0;
}

double OracleHandle::true_weight(const IndicatorString& S) const {
  if (S.qubits() != op_.n) throw std::invalid_argument("indicator qubit count mismatch");
  if (auto pre = S.as_prefix()) return spectrum_.prefix_weight(*pre);
  double w = 0;
  for (const auto& [t, c] : spectrum_)
    if (S.contains(t)) w += std::norm(c);
  return w;
}

WeightEstimate OracleHandle::estimate_weight(const IndicatorString& S, double gamma,
                                             double delta,
                                             std::optional<double> radius_override) {
  if (gamma <= 0 || gamma >= 2) throw std::invalid_argument("gamma out of range");
  const double radius = radius_override.value_or(gamma * gamma / 4.0);
  const long long m = hoeffding_samples(delta, radius);
  query_count_ += 4 * m;  // 2 controlled-f and 2 controlled-f^dag per flip
  const double truth = true_weight(S);
  WeightEstimate est;
  est.radius = radius;
  est.confidence = 1.0 - delta;
  est.queries_used = 4 * m;
  if (exact_) {
    est.value = truth;
  } else {
    const long long heads = binomial_draw(m, 0.5 + 0.5 * truth);
    est.value = 2.0 * static_cast<double>(heads) / static_cast<double>(m) - 1.0;
  }
  return est;
}

PauliString OracleHandle::identify_stabilizer() { return bell_sample(); }

GlResult goldreich_levin(OracleHandle& oracle, double gamma, double delta,
                         std::optional<double> coefficient_eta,
                         std::optional<double> coefficient_delta) {
  if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must lie in (0,1]");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");
  const int n = oracle.qubits();
  const double delta_prime = delta * gamma * gamma / (16.0 * n);
  const double threshold = gamma * gamma / 2.0;

  GlResult result;
  result.list_cap = static_cast<std::size_t>(4.0 / (gamma * gamma));

  const long long queries_before = oracle.query_count();
  std::vector<std::vector<std::uint8_t>> list(1);  // the all-wildcard prefix
  result.max_list_size = 1;

  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<std::vector<std::uint8_t>, double>> survivors;
    for (const auto& pre : list) {
      for (std::uint8_t sym = 0; sym < 4; ++sym) {
        std::vector<std::uint8_t> ext(pre);
        ext.push_back(sym);
        const auto est =
            oracle.estimate_weight(IndicatorString::prefix(n, ext), gamma, delta_prime);
        ++result.estimations;
        if (est.value >= threshold) survivors.emplace_back(std::move(ext), est.value);
      }
    }
    // The surviving sets are disjoint with true weight >= gamma^2/4 under
    // accurate estimates, so at most 4/gamma^2 of them fit; keep the
    // heaviest if sampling noise ever pushes past the cap.
    if (survivors.size() > result.list_cap) {
      std::sort(survivors.begin(), survivors.end(),
                [](const auto& a, const auto& b) { return a.second > b.second; });
      survivors.resize(result.list_cap);
      result.cap_enforced = true;
    }
    list.clear();
    for (auto& [ext, w] : survivors) list.push_back(std::move(ext));
    result.max_list_size = std::max(result.max_list_size, list.size());
    if (list.empty()) break;
  }

  const double eta = coefficient_eta.value_or(gamma / 4.0);
  const double cdelta = coefficient_delta.value_or(delta_prime);
  for (const auto& word : list) {
    const PauliString s{std::vector<std::uint8_t>(word)};
    result.coefficients.emplace_back(s, oracle.estimate_coefficient(s, eta, cdelta));
  }
  std::sort(result.coefficients.begin(), result.coefficients.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.queries = oracle.query_count() - queries_before;
  return result;
}

}  // namespace qbool
