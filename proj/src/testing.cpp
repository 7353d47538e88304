#include "qbool/testing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qbool/fourier.hpp"

namespace qbool {

namespace {

void require_unitary(const DenseOperator& f, double tol) {
  if (unitarity_error(f) > tol)
    throw std::invalid_argument("operator is not unitary within tolerance");
}

// Unique witness with |f_hat_s|^2 >= 1 - eps, eps = 1 - probability < 1/2.
// A tie at the threshold leaves the result empty (inconclusive).
std::optional<Witness> find_witness(const Spectrum& spec, double probability,
                                    bool require_low_support) {
  const double eps = 1.0 - probability;
  if (!(eps < 0.5)) return std::nullopt;
  std::optional<Witness> best;
  int hits = 0;
  for (const auto& [s, c] : spec) {
    const double w = std::norm(c);
    if (w >= 1.0 - eps) {
      ++hits;
      if (!require_low_support || s.weight() <= 1)
        best = Witness{s, w, std::arg(c)};
    }
  }
  if (hits != 1) return std::nullopt;
  return best;
}

}  // namespace

BellDistribution::BellDistribution(const Spectrum& spec) {
  words.reserve(spec.size());
  cumulative.reserve(spec.size());
  double acc = 0;
  for (const auto& [s, c] : spec) {
    words.push_back(s);
    acc += std::norm(c);
    cumulative.push_back(acc);
  }
  if (words.empty() || acc <= 0)
    throw std::invalid_argument("operator has an empty Bell distribution");
  for (auto& c : cumulative) c /= acc;
  cumulative.back() = 1.0;
}

const PauliString& BellDistribution::sample(Rng& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
  const std::size_t idx = std::min<std::size_t>(it - cumulative.begin(), words.size() - 1);
  return words[idx];
}

StabilizerResult stabilizer_test(const DenseOperator& f, double tol) {
  require_unitary(f, tol);
  const Spectrum spec = fourier_transform(f);
  StabilizerResult out;
  for (const auto& [s, c] : spec) out.probability += std::norm(c) * std::norm(c);
  out.witness = find_witness(spec, out.probability, /*require_low_support=*/false);
  return out;
}

double stabilizer_test_probability(const DenseOperator& f, double tol) {
  return stabilizer_test(f, tol).probability;
}

namespace {

SampleReport run_equality_sample(const DenseOperator& f, double delta, long long trials,
                                 std::uint64_t seed, double tol) {
  require_unitary(f, tol);
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  const Spectrum spec = fourier_transform(f);
  const BellDistribution bell(spec);

  SampleReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.exact_probability = 0;
  for (const auto& [s, c] : spec)
    rep.exact_probability +=
        std::pow(1.0 - delta, s.weight()) * std::norm(c) * std::norm(c);

  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long long t = 0; t < trials; ++t) {
    const PauliString& a = bell.sample(rng);
    const PauliString& b = bell.sample(rng);
    if (a != b) continue;
    if (delta == 0.0) {
      ++rep.accepted;
    } else {
      // Accept a matched weight-w pair with probability (1-delta)^w.
      if (unif(rng) <= std::pow(1.0 - delta, a.weight())) ++rep.accepted;
    }
  }
  if (delta == 0.0) {
    rep.witness = find_witness(spec, rep.exact_probability, false);
    const double eps = 1.0 - rep.exact_probability;
    if (eps < 0.5)
      rep.verdict = rep.witness ? Verdict::Accept : Verdict::Inconclusive;
    else
      rep.verdict = Verdict::Reject;
  }
  return rep;
}

}  // namespace

SampleReport stabilizer_test_sample(const DenseOperator& f, long long trials,
                                    std::uint64_t seed, double tol) {
  return run_equality_sample(f, 0.0, trials, seed, tol);
}

SampleReport hastad_test_sample(const DenseOperator& f, double delta, long long trials,
                                std::uint64_t seed, double tol) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must lie in [0,1]");
  return run_equality_sample(f, delta, trials, seed, tol);
}

double hastad_test_probability(const DenseOperator& f, double delta, double tol) {
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta must lie in [0,1]");
  require_unitary(f, tol);
  const Spectrum spec = fourier_transform(f);
  double p = 0;
  for (const auto& [s, c] : spec)
    p += std::pow(1.0 - delta, s.weight()) * std::norm(c) * std::norm(c);
  return p;
}

HastadReport hastad_verdict(const DenseOperator& f, double epsilon, double tol) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  HastadReport rep;
  rep.epsilon = epsilon;
  rep.delta = 0.75 * epsilon;
  rep.probability = hastad_test_probability(f, rep.delta, tol);
  if (epsilon > 0.01) {
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }
  if (rep.probability >= 1.0 - epsilon) {
    const Spectrum spec = fourier_transform(f);
    for (const auto& [s, c] : spec) {
      if (s.weight() <= 1 && std::norm(c) >= 1.0 - epsilon) {
        rep.witness = Witness{s, std::norm(c), std::arg(c)};
        break;
      }
    }
    rep.verdict = rep.witness ? Verdict::Accept : Verdict::Inconclusive;
  } else {
    rep.verdict = Verdict::Reject;
  }
  return rep;
}

double locality_test_probability(const DenseOperator& f, int max_qubits, double tol) {
  require_unitary(f, tol);
  const int n = f.n;
  if (n > max_qubits)
    throw std::invalid_argument("locality test exceeds the configured qubit ceiling");

  // In the product basis of per-pair maximally entangled states, the state
  // (f (x) I)|Phi> has amplitude f_hat_s at the digit word s, so reduced
  // purities are Gram computations on the coefficient tensor.
  Vector psi = coefficient_tensor(f.mat, n);
  const double nrm = psi.norm();
  if (nrm <= 0) throw std::invalid_argument("zero operator");
  psi /= nrm;

  const long digits = 1L << (2 * n);  // 4^n
  double total = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (mask == 0) {
      total += 1.0;  // tr(rho_empty^2) = 1 by convention
      continue;
    }
    const int kept = std::popcount(static_cast<unsigned long>(mask));
    const long rows = 1L << (2 * kept);
    const long cols = digits / rows;
    // Reshape: digits of qubits in the mask index rows, the rest columns.
    Matrix m(rows, cols);
    for (long p = 0; p < digits; ++p) {
      long r = 0, c = 0;
      for (int j = 0; j < n; ++j) {
        const long dj = (p >> (2 * (n - 1 - j))) & 3;
        if ((mask >> (n - 1 - j)) & 1)
          r = (r << 2) | dj;
        else
          c = (c << 2) | dj;
      }
      m(r, c) = psi[p];
    }
    const Matrix gram = m * m.adjoint();
    total += gram.squaredNorm();
  }
  return total / static_cast<double>(1L << n);
}

double discrimination_probability(const DenseOperator& f1, const DenseOperator& f2,
                                  double tol) {
  if (f1.n != f2.n) throw std::invalid_argument("operator dimensions differ");
  require_unitary(f1, tol);
  require_unitary(f2, tol);
  const double overlap = std::abs(inner_product(f1, f2));
  return 0.5 + 0.5 * std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

}  // namespace qbool
