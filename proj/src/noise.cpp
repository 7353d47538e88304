#include "qbool/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qbool/fourier.hpp"

namespace qbool {

namespace {

bool in_regime(double p, double q, double epsilon) {
  if (!(1.0 <= p && p <= 2.0 && q >= 2.0)) return false;
  if (std::isinf(q)) return epsilon == 0.0;
  return std::abs(epsilon) <= std::sqrt((p - 1.0) / (q - 1.0)) + 1e-15;
}

}  // namespace

Spectrum apply_noise(const Spectrum& spec, double epsilon) {
  if (epsilon < -1.0 || epsilon > 1.0)
    throw std::invalid_argument("noise rate must lie in [-1, 1]");
  return spec.map_coefficients([epsilon](const PauliString& s, Complex c) {
    return c * std::pow(epsilon, s.weight());
  });
}

DenseOperator depolarize(const DenseOperator& f, double epsilon) {
  if (epsilon < kCompletelyPositiveFloor || epsilon > 1.0)
    throw std::invalid_argument("depolarizing channel rate must lie in [-1/3, 1]");
  Matrix m = f.mat;
  for (int j = 0; j < f.n; ++j)
    m = (1.0 - epsilon) * mean_over_qubits(f.n, m, {j}) + epsilon * m;
  return DenseOperator(f.n, std::move(m), f.hermitian);
}

HyperReport hypercontractivity_check(const DenseOperator& f, double p, double q,
                                     double epsilon, double tol) {
  if (hermiticity_error(f.mat) > tol)
    throw std::invalid_argument("hypercontractivity check needs a Hermitian operator");
  if (p < 1.0 || q < 1.0) throw std::invalid_argument("norms need p, q >= 1");
  HyperReport rep;
  rep.p = p;
  rep.q = q;
  rep.epsilon = epsilon;
  rep.in_theorem_regime = in_regime(p, q, epsilon);
  rep.input_norm = schatten_norm(f, p);
  const DenseOperator noisy = inverse_fourier(apply_noise(fourier_transform(f), epsilon));
  rep.noisy_norm = schatten_norm(noisy, q);
  rep.margin = rep.input_norm - rep.noisy_norm;
  return rep;
}

LowDegreeReport low_degree_norm_check(const DenseOperator& f, double q) {
  if (std::isinf(q)) throw std::invalid_argument("the bound is vacuous at q = infinity");
  if (q < 2.0) throw std::invalid_argument("low-degree bound needs q >= 2");
  LowDegreeReport rep;
  rep.q = q;
  rep.p_dual = q / (q - 1.0);
  const Spectrum spec = fourier_transform(f);
  rep.degree = std::max(spec.degree(), 0);
  rep.norm_2 = schatten_norm(f, 2.0);
  rep.norm_q = schatten_norm(f, q);
  rep.norm_p = schatten_norm(f, rep.p_dual);
  const double half_d = rep.degree / 2.0;
  rep.margin_upper = std::pow(q - 1.0, half_d) * rep.norm_2 - rep.norm_q;
  rep.margin_lower = rep.norm_p - std::pow(rep.p_dual - 1.0, half_d) * rep.norm_2;
  return rep;
}

RankBoundReport rank_bound_check(const DenseOperator& f, double rank_tol) {
  if (hermiticity_error(f.mat) > kDefaultTol)
    throw std::invalid_argument("rank bound needs a Hermitian operator");
  Eigen::SelfAdjointEigenSolver<Matrix> es((f.mat + f.mat.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top <= 0) throw std::invalid_argument("rank bound needs a non-zero operator");
  RankBoundReport rep;
  for (long i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > rank_tol * top) ++rep.nonzero_eigenvalues;
  rep.degree = std::max(fourier_transform(f).degree(), 0);
  const double exponent = f.n - 2.0 * std::log2(std::exp(1.0)) * rep.degree;
  rep.bound = std::pow(2.0, exponent);
  rep.holds = rep.nonzero_eigenvalues >= rep.bound - 1e-9;
  return rep;
}

ProjectorLevel1Report projector_level1_check(const DenseOperator& p, double q, double tol) {
  if (!(q > 1.0)) throw std::invalid_argument("projector level-1 bound needs q > 1");
  if (hermiticity_error(p.mat) > tol || operator_norm(p.mat * p.mat - p.mat) > tol)
    throw std::invalid_argument("input is not a projector within tolerance");
  ProjectorLevel1Report rep;
  rep.q = q;
  rep.p_dual = std::isinf(q) ? 1.0 : q / (q - 1.0);
  rep.level1_weight = fourier_transform(p).weight_per_level()[1];
  rep.bound = (q - 1.0) * std::pow(schatten_norm(p, 1.0), 2.0 / rep.p_dual);
  rep.margin = rep.bound - rep.level1_weight;
  return rep;
}

namespace {

double noisy_ratio(const Vector& coeffs, int n, double p, double q, double epsilon,
                   std::vector<int>& weights) {
  Vector damped = coeffs;
  for (long i = 0; i < damped.size(); ++i)
    damped[i] *= std::pow(epsilon, weights[i]);
  const Matrix f = matrix_from_coefficients(coeffs, n);
  const Matrix tf = matrix_from_coefficients(damped, n);
  const double denom = schatten_norm(f, p);
  if (denom <= 0) return 0;
  return schatten_norm(tf, q) / denom;
}

}  // namespace

SearchReport search_violation(double p, double q, double epsilon, int n, int restarts,
                              std::uint64_t seed) {
  if (p > q) throw std::invalid_argument("search needs p <= q");
  if (n < 1 || n > 6) throw std::invalid_argument("search qubit count out of range");
  SearchReport rep;
  rep.seed = seed;
  rep.restarts = restarts;
  rep.in_theorem_regime = in_regime(p, q, epsilon);

  const long total = 1L << (2 * n);
  std::vector<int> weights(total);
  for (long i = 0; i < total; ++i) weights[i] = word_from_index(i, n).weight();

  Vector best = Vector::Zero(total);
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, r));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<long> pick(0, total - 1);

    Vector c(total);
    for (long i = 0; i < total; ++i) c[i] = gauss(rng);
    c.normalize();
    double value = noisy_ratio(c, n, p, q, epsilon, weights);
    ++rep.evaluations;

    double step = 0.5;
    int stale = 0;
    while (step > 1e-4 && stale < 200) {
      Vector cand = c;
      cand[pick(rng)] += step * gauss(rng);
      cand.normalize();
      const double v = noisy_ratio(cand, n, p, q, epsilon, weights);
      ++rep.evaluations;
      if (v > value) {
        c = cand;
        value = v;
        stale = 0;
      } else if (++stale % 40 == 0) {
        step *= 0.5;
      }
    }
    if (value > rep.best_ratio) {
      rep.best_ratio = value;
      best = c;
    }
  }
  rep.best_spectrum = spectrum_from_tensor(best, n, true);
  return rep;
}

}  // namespace qbool
