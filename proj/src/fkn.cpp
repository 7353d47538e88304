#include "qbool/fkn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qbool/build.hpp"
#include "qbool/fourier.hpp"

namespace qbool {

namespace {

bool needs_balancing(const DenseOperator& f, double tol) {
  return std::abs(f.mat.trace()) / static_cast<double>(f.dim()) > tol;
}

// Per-qubit norms of the level-1 blocks: lambda_j = |(f_hat_{j:1..3})|.
std::vector<double> block_lambdas(const Spectrum& spec) {
  std::vector<double> lambdas(spec.qubits(), 0.0);
  for (const auto& [s, c] : spec) {
    if (s.weight() != 1) continue;
    const int j = s.support().front();
    lambdas[j] += std::norm(c);
  }
  for (auto& l : lambdas) l = std::sqrt(l);
  return lambdas;
}

// The block construction of balance() applied without the booleanity gate,
// used to lift the comparison operator g alongside f.
DenseOperator balance_lift(const DenseOperator& g) {
  const long dim = g.dim();
  Matrix out = Matrix::Zero(2 * dim, 2 * dim);
  out.topLeftCorner(dim, dim) = g.mat;
  out.bottomRightCorner(dim, dim) = -spin_flip_all(g).mat;
  return DenseOperator(g.n + 1, std::move(out), g.hermitian);
}

Eigen::VectorXd sorted_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  return ev;
}

}  // namespace

double high_level_weight(const Spectrum& spec) {
  double acc = 0;
  for (const auto& [s, c] : spec)
    if (s.weight() > 1) acc += std::norm(c);
  return acc;
}

double high_level_weight(const DenseOperator& f, double tol) {
  if (hermiticity_error(f.mat) > tol)
    throw std::invalid_argument("high level weight needs a Hermitian operator");
  return high_level_weight(fourier_transform(f));
}

DictatorSearch nearest_dictator(const DenseOperator& f, double tol) {
  if (!is_quantum_boolean(f, tol))
    throw std::invalid_argument("nearest_dictator needs a quantum boolean input");
  DictatorSearch out;
  DenseOperator analyzed = f;
  if (needs_balancing(f, tol)) {
    analyzed = balance(f, tol);
    out.balanced_first = true;
  }
  const Spectrum spec = fourier_transform(analyzed);
  std::vector<double> lambdas = block_lambdas(spec);
  out.qubit_weights.resize(lambdas.size());
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    out.qubit_weights[j] = lambdas[j] * lambdas[j];

  int best = -1;
  double best_w = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (out.qubit_weights[j] > best_w) {
      best_w = out.qubit_weights[j];
      best = static_cast<int>(j);
    }
  }
  if (best < 0 || best_w <= tol) return out;  // no single-qubit weight anywhere

  // Renormalize the coefficient triple to unit length; that is the unique
  // scaling making the single-qubit operator square to the identity.
  Eigen::Matrix2cd local = Eigen::Matrix2cd::Zero();
  for (int sym = 1; sym <= 3; ++sym) {
    const double c = spec.real_coefficient(PauliString::single(analyzed.n, best, sym));
    local += (c / lambdas[best]) * pauli_2x2(sym);
  }
  out.found = true;
  out.qubit = best;
  out.on_ancilla = out.balanced_first && best == 0;
  out.dictator = DenseOperator(analyzed.n, embed(analyzed.n, {best}, local), true);
  out.distance = (analyzed.mat - out.dictator.mat).squaredNorm() /
                 static_cast<double>(analyzed.dim()) / 4.0;
  return out;
}

ExactFknReport exact_fkn_check(const DenseOperator& f, double tol) {
  ExactFknReport rep;
  const double hlw = high_level_weight(f, tol);
  if (hlw > tol)
    throw std::invalid_argument("high-level weight " + std::to_string(hlw) +
                                " exceeds the exact-case tolerance");
  rep.high_level = hlw;
  if (!is_quantum_boolean(f, tol)) {
    rep.kind = ExactFknReport::Kind::Rejected;
    rep.reason = "not quantum boolean at the stated tolerance";
    const Spectrum spec = fourier_transform(f);
    rep.lambdas = block_lambdas(spec);
    for (double l : rep.lambdas) rep.lambda_sum += l;
    return rep;
  }
  DenseOperator analyzed = f;
  if (needs_balancing(f, tol)) {
    analyzed = balance(f, tol);
    rep.balanced_first = true;
  }
  const Spectrum spec = fourier_transform(analyzed);
  rep.lambdas = block_lambdas(spec);
  for (double l : rep.lambdas) rep.lambda_sum += l;

  const double lambda_tol = std::sqrt(tol);
  std::vector<int> blocks;
  for (std::size_t j = 0; j < rep.lambdas.size(); ++j)
    if (rep.lambdas[j] > lambda_tol) blocks.push_back(static_cast<int>(j));

  if (std::abs(rep.lambda_sum - 1.0) > lambda_tol || blocks.size() != 1) {
    rep.kind = ExactFknReport::Kind::Rejected;
    rep.reason = "level-1 blocks do not form a single unit block";
    return rep;
  }
  rep.qubit = blocks.front();
  if (rep.balanced_first && rep.qubit == 0) {
    rep.kind = ExactFknReport::Kind::Constant;
    rep.reason = "all weight sits on the balancing ancilla";
  } else {
    rep.kind = ExactFknReport::Kind::Dictator;
  }
  return rep;
}

FknInftyReport fkn_infty_check(const DenseOperator& f, const DenseOperator& g,
                               double epsilon, double tol) {
  if (!(epsilon > 0 && epsilon < 0.5))
    throw std::invalid_argument("the closeness argument needs epsilon in (0, 1/2)");
  if (f.n != g.n) throw std::invalid_argument("operator dimensions differ");
  if (hermiticity_error(g.mat) > tol)
    throw std::invalid_argument("comparison operator must be Hermitian");
  const Spectrum gspec = fourier_transform(g);
  for (const auto& [s, c] : gspec) {
    if (s.weight() != 1)
      throw std::invalid_argument("comparison operator must be supported on level 1");
  }
  if (!is_quantum_boolean(f, tol))
    throw std::invalid_argument("fkn check needs a quantum boolean input");

  FknInftyReport rep;
  rep.epsilon = epsilon;
  DenseOperator fa = f, ga = g;
  if (needs_balancing(f, tol)) {
    fa = balance(f, tol);
    ga = balance_lift(g);
    rep.balanced_first = true;
  }
  rep.input_distance = operator_norm(fa.mat - ga.mat);
  if (rep.input_distance > epsilon + 1e-12)
    throw std::invalid_argument("||f - g||_inf exceeds the declared epsilon");

  const DenseOperator h = sign_function(ga, tol);
  rep.dictator_distance = operator_norm(fa.mat - h.mat);
  rep.bound = 2.0 * epsilon;
  rep.holds = rep.dictator_distance <= rep.bound + 1e-9;

  const Eigen::VectorXd ef = sorted_eigenvalues(fa.mat);
  const Eigen::VectorXd eg = sorted_eigenvalues(ga.mat);
  rep.max_weyl_gap = (ef - eg).cwiseAbs().maxCoeff();
  return rep;
}

TwoNormEvidence two_norm_evidence(const DenseOperator& f, double tol) {
  TwoNormEvidence out;
  out.dictator = nearest_dictator(f, tol);
  DenseOperator analyzed = f;
  if (out.dictator.balanced_first) analyzed = balance(f, tol);
  const Spectrum spec = fourier_transform(analyzed);
  out.high_level = high_level_weight(spec);
  out.ratio = out.high_level > tol ? out.dictator.distance / out.high_level : 0.0;

  // q = l^2 - (1 - eps) I with l the level-1 part; degree <= 2, so its
  // 2-norm obeys the eigenvalue-spread bound wherever 1 - 9 sqrt(p) > 0.
  const DenseOperator l = inverse_fourier(spec.level_projection(1));
  const Matrix q =
      l.mat * l.mat - (1.0 - out.high_level) * Matrix::Identity(l.dim(), l.dim());
  out.q_norm2_sq = q.squaredNorm() / static_cast<double>(l.dim());
  const Eigen::VectorXd ev = sorted_eigenvalues(q).cwiseAbs();
  out.deg2_bound_ok = true;
  for (long i = 0; i < ev.size(); ++i) {
    const double delta = ev(i) + 1e-12;
    long above = 0;
    for (long k = 0; k < ev.size(); ++k)
      if (ev(k) > delta) ++above;
    const double p = static_cast<double>(above) / static_cast<double>(ev.size());
    const double denom = 1.0 - 9.0 * std::sqrt(p);
    if (denom <= 0) continue;
    const double bound = delta * delta * (1.0 - p) / denom;
    if (out.q_norm2_sq > bound + 1e-9) out.deg2_bound_ok = false;
  }
  return out;
}

}  // namespace qbool
