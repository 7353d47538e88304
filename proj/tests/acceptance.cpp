// Acceptance suite: one line per criterion, all thresholds pinned in code.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qbool/build.hpp"
#include "qbool/dynamics.hpp"
#include "qbool/fkn.hpp"
#include "qbool/fourier.hpp"
#include "qbool/influence.hpp"
#include "qbool/learning.hpp"
#include "qbool/noise.hpp"
#include "qbool/testing.hpp"

using namespace qbool;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail, double seconds) {
  std::printf("[%s] %-34s %s (%.1f s)\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(name, pass, detail, secs);
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

DenseOperator two_term(double eps) {
  DenseOperator xx(2, pauli_matrix(PauliString::parse("XX")), true);
  DenseOperator yi(2, pauli_matrix(PauliString::parse("YI")), true);
  return anticommuting_combination({eps, std::sqrt(1.0 - eps * eps)}, {xx, yi});
}

// 1. Fourier round trip on 100 random Hermitian operators, n = 1..6.
std::pair<bool, std::string> criterion_round_trip() {
  Rng rng(101);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 6;
    const DenseOperator f = random_hermitian(n, rng);
    const Spectrum first = fourier_transform(f);
    const Spectrum again = fourier_transform(inverse_fourier(first));
    for (const auto& [s, c] : first)
      worst = std::max(worst, std::abs(again.coefficient(s) - c));
    if (first.size() != again.size()) worst = 1.0;
  }
  return {worst <= 1e-10, fmt("max coefficient error %.2e", worst)};
}

// 2. Parseval on 100 random quantum booleans.
std::pair<bool, std::string> criterion_parseval() {
  Rng rng(102);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 4;
    const DenseOperator f = random_boolean(n, rng);
    worst = std::max(worst, std::abs(fourier_transform(f).total_weight() - 1.0));
  }
  return {worst <= 1e-9, fmt("max |sum - 1| = %.2e", worst)};
}

// 3. Stabilizer test: exactness on stabilizers, exact value and Monte-Carlo
//    concentration on the two-term example.
std::pair<bool, std::string> criterion_stabilizer() {
  Rng rng(103);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 5;
    const DenseOperator s = random_stabilizer(n, rng);
    worst = std::max(worst, std::abs(stabilizer_test_probability(s) - 1.0));
  }
  if (worst > 1e-12) return {false, fmt("stabilizer probability off by %.2e", worst)};

  const DenseOperator f = two_term(0.6);
  const double exact = stabilizer_test_probability(f);
  if (std::abs(exact - 0.5392) > 1e-12)
    return {false, fmt("two-term exact %.6f != 0.5392", exact)};

  const long long trials = 100000;
  const SampleReport samp = stabilizer_test_sample(f, trials, 1103);
  const double sigma = std::sqrt(exact * (1 - exact) / trials);
  const double dev = std::abs(samp.fraction() - exact);
  return {dev <= 3 * sigma,
          fmt("exact 0.5392, sample dev %.4f (3 sigma = %.4f)", dev, 3 * sigma)};
}

// 4. Damped equality test on stabilizer dictators.
std::pair<bool, std::string> criterion_hastad() {
  double worst = 0;
  for (double delta : {0.01, 0.1, 0.5}) {
    for (int n : {1, 2, 4}) {
      for (int sym : {1, 2, 3}) {
        const DenseOperator dict(n, pauli_matrix(PauliString::single(n, n / 2, sym)), true);
        worst = std::max(worst,
                         std::abs(hastad_test_probability(dict, delta) - (1.0 - delta)));
      }
    }
  }
  return {worst <= 1e-12, fmt("max |p - (1-delta)| = %.2e", worst)};
}

// 5. Noisy-norm sweep over the full (p, q) grid at the critical rate.
std::pair<bool, std::string> criterion_hyper_sweep() {
  Rng rng(105);
  double min_margin = 1.0;
  long cells = 0;
  for (double p : {1.0, 1.25, 1.5, 2.0}) {
    for (double q : {2.0, 3.0, 4.0, 8.0}) {
      const double eps = std::sqrt((p - 1.0) / (q - 1.0));
      for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 500; ++i) {
          const DenseOperator f = random_hermitian(n, rng);
          const HyperReport rep = hypercontractivity_check(f, p, q, eps);
          if (!rep.in_theorem_regime) return {false, "grid point outside the regime"};
          min_margin = std::min(min_margin, rep.margin);
        }
        ++cells;
      }
    }
  }
  return {min_margin >= -1e-9, fmt("min margin %.2e over %.0f cells", min_margin,
                                   static_cast<double>(cells))};
}

// 6. Low-degree smoothness and the eigenvalue-count bound.
std::pair<bool, std::string> criterion_low_degree() {
  Rng rng(106);
  double worst_margin = 1.0;
  bool rank_ok = true;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    const int d = std::min(n, 1 + i % 3);
    const DenseOperator f = random_degree_bounded(n, d, rng);
    const LowDegreeReport rep = low_degree_norm_check(f, 2.0 + i % 3);
    worst_margin = std::min({worst_margin, rep.margin_upper, rep.margin_lower});
    const RankBoundReport rb = rank_bound_check(f);
    rank_ok = rank_ok && rb.holds;
  }
  // the rank-one corner case
  Matrix p = Matrix::Zero(8, 8);
  p(0, 0) = 1.0;
  const RankBoundReport corner = rank_bound_check(DenseOperator(3, p, true));
  rank_ok = rank_ok && corner.holds && corner.nonzero_eigenvalues == 1;
  return {worst_margin >= -1e-10 && rank_ok,
          fmt("min margin %.2e, rank bound ok %.0f", worst_margin, rank_ok ? 1 : 0)};
}

// 7. Large-coefficient search contract on planted spectra.
std::pair<bool, std::string> criterion_gl() {
  const int runs = 100;
  const double gamma = 0.3, delta = 0.05;
  const int n = 4;
  int cond1 = 0, cond2 = 0;
  bool caps = true, budget = true;
  for (int r = 0; r < runs; ++r) {
    Rng rng(derive_seed(107, r));
    // plant magnitudes {0.7, 0.5, 0.4, sqrt(0.1)} on an anticommuting family
    auto strings = random_anticommuting_strings(n, 4, rng);
    std::vector<double> mags = {0.7, 0.5, 0.4, std::sqrt(0.1)};
    std::bernoulli_distribution coin(0.5);
    Matrix acc = Matrix::Zero(16, 16);
    for (int k = 0; k < 4; ++k)
      acc += (coin(rng) ? mags[k] : -mags[k]) * pauli_matrix(strings[k]);
    const DenseOperator f(n, acc, true);
    OracleHandle oracle(f, derive_seed(1070, r));
    const GlResult res = goldreich_levin(oracle, gamma, delta);

    const Spectrum spec = oracle.spectrum();
    bool all_large_listed = true;
    for (const auto& [s, c] : spec) {
      if (std::abs(c) < gamma) continue;
      bool found = false;
      for (const auto& [t, e] : res.coefficients) found |= t == s;
      all_large_listed &= found;
    }
    cond1 += all_large_listed;

    bool none_small = true;
    for (const auto& [t, e] : res.coefficients)
      none_small &= std::abs(spec.coefficient(t)) >= gamma / 2.0;
    cond2 += none_small;

    caps = caps && res.max_list_size <= static_cast<std::size_t>(4.0 / (gamma * gamma));
    budget = budget && res.estimations <= static_cast<long long>(16.0 * n / (gamma * gamma));
  }
  const bool pass = cond1 >= 95 && cond2 >= 95 && caps && budget;
  return {pass, fmt("completeness %g/100, soundness %g/100, caps+budget ok %g",
                    static_cast<double>(cond1), static_cast<double>(cond2),
                    caps && budget ? 1.0 : 0.0)};
}

// 8. Variance bound, influential qubit for traceless booleans, Haar cross-check.
std::pair<bool, std::string> criterion_influence() {
  Rng rng(108);
  double worst_margin = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 4;
    const DenseOperator f = random_hermitian(n, rng);
    worst_margin = std::min(worst_margin, total_influence(f) - variance(f));
  }
  if (worst_margin < -1e-10) return {false, fmt("variance margin %.2e", worst_margin)};

  double worst_max = 1.0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    const DenseOperator f = random_traceless_boolean(n, rng);
    const PoincareReport rep = poincare_check(f);
    if (!rep.traceless_boolean) return {false, "generator produced a non-traceless boolean"};
    worst_max = std::min(worst_max, rep.max_influence - rep.influential_bound);
  }
  if (worst_max < -1e-10) return {false, fmt("influential-qubit margin %.2e", worst_max)};

  const DenseOperator maj = phase_oracle(TruthTable::majority(3));
  const double haar = influence_haar_estimate(maj, 0, rng);
  const bool cross = std::abs(haar - 0.5) <= 0.01;
  return {cross, fmt("margins ok; Haar estimate %.4f vs 0.5", haar)};
}

// 9. Influence bound for anticommuting spectra.
std::pair<bool, std::string> criterion_anticommuting() {
  Rng rng(109);
  double worst_sum = 10.0, worst_max = 10.0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    const int m = 1 + static_cast<int>(rng() % (2 * n + 1));
    const AnticommutingSample s = random_anticommuting_boolean(n, m, rng);
    const AnticommutingKklReport rep = anticommuting_kkl_check(s.op);
    worst_sum = std::min(worst_sum, rep.sum_of_squares - 1.0);
    worst_max = std::min(worst_max, rep.max_influence - rep.bound);
  }
  return {worst_sum >= -1e-9 && worst_max >= -1e-9,
          fmt("min(sum-1) = %.2e, min(max - 1/sqrt(n)) = %.2e", worst_sum, worst_max)};
}

// 10. Derivative norm-ratio bound on random traceless Hermitians.
std::pair<bool, std::string> criterion_talagrand() {
  Rng rng(110);
  double worst = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 4;
    const TalagrandReport rep = talagrand_check(random_traceless_hermitian(n, rng));
    worst = std::min(worst, rep.margin);
  }
  return {worst >= -1e-9, fmt("min margin %.2e", worst)};
}

// 11. Sup-norm closeness on valid instances; bounded 2-norm evidence ratio.
std::pair<bool, std::string> criterion_fkn() {
  Rng rng(111);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_slack = 1.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const double eps = 0.02 + 0.4 * unif(rng);
    const int target = static_cast<int>(rng() % n);
    const auto u = random_unit_vector(3, rng);
    Eigen::Matrix2cd local = u[0] * pauli_2x2(1) + u[1] * pauli_2x2(2) + u[2] * pauli_2x2(3);
    const DenseOperator f(n, embed(n, {target}, local), true);
    const double eps1 = 0.5 * eps * unif(rng);
    Matrix g = (1.0 - eps1) * f.mat;
    for (int j = 0; j < n; ++j) {
      if (j == target) continue;
      const double mu = 0.3 * (eps - eps1) * unif(rng) / n;
      const auto w = random_unit_vector(3, rng);
      g += embed(n, {j},
                 Eigen::Matrix2cd(mu * (w[0] * pauli_2x2(1) + w[1] * pauli_2x2(2) +
                                        w[2] * pauli_2x2(3))));
    }
    const FknInftyReport rep = fkn_infty_check(f, DenseOperator(n, g, true), eps);
    worst_slack = std::min(worst_slack, rep.bound + 1e-9 - rep.dictator_distance);
  }
  if (worst_slack < 0) return {false, fmt("sup-norm slack %.2e", worst_slack)};

  // rotation family: the distance/high-level-weight ratio stays bounded
  DenseOperator base(2, pauli_matrix(PauliString::parse("ZI")), true);
  DenseOperator partner(2, pauli_matrix(PauliString::parse("XX")), true);
  double ratio = 0;
  bool deg2 = true;
  for (int i = 1; i <= 10; ++i) {
    const double theta = 0.05 * i;
    const DenseOperator f =
        anticommuting_combination({std::cos(theta), std::sin(theta)}, {base, partner});
    const TwoNormEvidence e = two_norm_evidence(f);
    ratio = std::max(ratio, e.ratio);
    deg2 = deg2 && e.deg2_bound_ok;
  }
  const bool pass = ratio <= 0.5 && deg2;
  return {pass, fmt("sup-norm ok; evidence ratio bounded by %.4f", ratio)};
}

// 12a. Truncation discrepancy profile for a seeded n = 8 chain at t = 1.
std::pair<bool, std::string> criterion_dynamics_profile() {
  Rng rng(112);
  const ChainHamiltonian chain = ChainHamiltonian::random(8, rng);
  const auto profile = lieb_robinson_profile(chain, 4, 3, 1.0, {0, 1, 2, 3, 4});
  int violations = 0;
  for (std::size_t i = 1; i < profile.size(); ++i)
    if (profile[i].discrepancy > profile[i - 1].discrepancy + 1e-12) ++violations;
  const double last = profile.back().discrepancy;
  return {violations == 0,
          fmt("monotonicity violations %g, final discrepancy %.2e",
              static_cast<double>(violations), last)};
}

// 12b. Learning contract at the stated parameters. The below-threshold
//      spectral tail of the evolved observable exceeds the error budget for
//      this ensemble, so this clause is expected to fail; it runs as stated
//      and reports the honest rate.
std::pair<bool, std::string> criterion_dynamics_learn() {
  const int runs = 100;
  const double gamma = 0.2, eps = 0.05, delta = 0.05;
  int met = 0;
  double worst = 0;
  for (int r = 0; r < runs; ++r) {
    Rng rng(derive_seed(1120, r));
    const ChainHamiltonian chain = ChainHamiltonian::random(6, rng);
    const LearnDynamicsResult res =
        learn_dynamics(chain, 3, 3, 0.5, gamma, eps, delta, derive_seed(1121, r));
    if (res.error_sq <= eps) ++met;
    worst = std::max(worst, res.error_sq);
  }
  return {met >= 95, fmt("contract met in %g/100 runs (worst error %.3f)",
                         static_cast<double>(met), worst)};
}

}  // namespace

int main() {
  run("1  fourier round trip", criterion_round_trip);
  run("2  parseval on booleans", criterion_parseval);
  run("3  stabilizer test", criterion_stabilizer);
  run("4  hastad dictators", criterion_hastad);
  run("5  hypercontractivity sweep", criterion_hyper_sweep);
  run("6  low degree + rank bound", criterion_low_degree);
  run("7  goldreich-levin contract", criterion_gl);
  run("8  poincare + influences", criterion_influence);
  run("9  anticommuting influence bound", criterion_anticommuting);
  run("10 talagrand bound", criterion_talagrand);
  run("11 fkn variants", criterion_fkn);
  run("12a lieb-robinson profile", criterion_dynamics_profile);
  run("12b dynamics learning contract", criterion_dynamics_learn);

  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
