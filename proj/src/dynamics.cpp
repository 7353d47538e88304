#include "qbool/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qbool/fourier.hpp"

namespace qbool {

namespace {

constexpr int kDenseCeiling = 10;

Matrix evolution_operator(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((h + h.adjoint()) / 2.0);
  Vector phases(es.eigenvalues().size());
  const Complex i(0.0, 1.0);
  for (long k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(-i * t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix conjugate_evolution(const Matrix& h, const Matrix& obs, double t) {
  const Matrix u = evolution_operator(h, t);  // e^{-itH}
  return u * obs * u.adjoint();
}

}  // namespace

ChainHamiltonian::ChainHamiltonian(int n_, std::vector<Eigen::Matrix4cd> bonds_,
                                   double norm_cap_)
    : n(n_), bonds(std::move(bonds_)), norm_cap(norm_cap_) {
  if (n < 2 || n > kDenseCeiling)
    throw std::invalid_argument("chain length out of the dense range");
  if (static_cast<int>(bonds.size()) != n - 1)
    throw std::invalid_argument("a chain on n qubits needs n-1 bonds");
  for (const auto& b : bonds) {
    if (hermiticity_error(b) > kDefaultTol)
      throw std::invalid_argument("bond blocks must be Hermitian");
    if (operator_norm(b) > norm_cap + 1e-9)
      throw std::invalid_argument("bond block exceeds the norm cap");
  }
}

ChainHamiltonian ChainHamiltonian::random(int n, Rng& rng, double norm_cap) {
  std::vector<Eigen::Matrix4cd> bonds;
  bonds.reserve(n - 1);
  for (int k = 0; k + 1 < n; ++k) {
    const Matrix g = random_ginibre(4, 4, rng);
    Eigen::Matrix4cd b = (g + g.adjoint()) / 2.0;
    b *= norm_cap / operator_norm(b);
    bonds.push_back(b);
  }
  return ChainHamiltonian(n, std::move(bonds), norm_cap);
}

DenseOperator ChainHamiltonian::dense() const {
  std::vector<int> all(bonds.size());
  for (std::size_t k = 0; k < bonds.size(); ++k) all[k] = static_cast<int>(k);
  return dense_restricted(all);
}

DenseOperator ChainHamiltonian::dense_restricted(const std::vector<int>& bond_set) const {
  const long dim = 1L << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int k : bond_set) {
    if (k < 0 || k >= static_cast<int>(bonds.size()))
      throw std::invalid_argument("bond index out of range");
    h += embed(n, {k, k + 1}, bonds[k]);
  }
  return DenseOperator(n, std::move(h), true);
}

DenseOperator evolve_observable(const ChainHamiltonian& h, int qubit, int symbol, double t) {
  if (qubit < 0 || qubit >= h.n) throw std::invalid_argument("qubit index out of range");
  if (symbol < 1 || symbol > 3) throw std::invalid_argument("Pauli symbol must be 1, 2 or 3");
  const Matrix obs = pauli_matrix(PauliString::single(h.n, qubit, symbol));
  Matrix evolved = conjugate_evolution(h.dense().mat, obs, t);
  evolved = (evolved + evolved.adjoint()) / 2.0;
  return DenseOperator(h.n, std::move(evolved), true);
}

std::vector<int> bond_window(const ChainHamiltonian& h, int qubit, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<int> window;
  const int lo = std::max(0, qubit - radius);
  const int hi = std::min(h.n - 2, qubit + radius - 1);
  for (int k = lo; k <= hi; ++k) window.push_back(k);
  if (radius > 0 && window.empty())
    throw std::invalid_argument("window does not touch the observable qubit");
  return window;
}

std::vector<ProfilePoint> lieb_robinson_profile(const ChainHamiltonian& h, int qubit,
                                                int symbol, double t,
                                                const std::vector<int>& radii) {
  if (qubit < 0 || qubit >= h.n) throw std::invalid_argument("qubit index out of range");
  if (symbol < 1 || symbol > 3) throw std::invalid_argument("Pauli symbol must be 1, 2 or 3");
  const Matrix obs = pauli_matrix(PauliString::single(h.n, qubit, symbol));
  const Matrix full = conjugate_evolution(h.dense().mat, obs, t);
  const double dim = static_cast<double>(1L << h.n);

  std::vector<ProfilePoint> profile;
  profile.reserve(radii.size());
  for (int r : radii) {
    const std::vector<int> window = bond_window(h, qubit, r);
    const Matrix truncated =
        conjugate_evolution(h.dense_restricted(window).mat, obs, t);
    ProfilePoint point;
    point.radius = r;
    point.window_size = static_cast<int>(window.size());
    point.discrepancy = (full - truncated).squaredNorm() / dim;
    profile.push_back(point);
  }
  return profile;
}

DecayFit fit_light_cone(
    const std::vector<std::pair<double, std::vector<ProfilePoint>>>& profiles,
    double floor) {
  // Normal equations for log d = log c + k |t| - v |Lambda|.
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  int points = 0;
  for (const auto& [t, profile] : profiles) {
    for (const auto& p : profile) {
      if (p.discrepancy <= floor) continue;
      const Eigen::Vector3d row(1.0, std::abs(t), -static_cast<double>(p.window_size));
      ata += row * row.transpose();
      atb += row * std::log(p.discrepancy);
      ++points;
    }
  }
  DecayFit fit;
  fit.points = points;
  if (points >= 3) {
    const Eigen::Vector3d x = ata.ldlt().solve(atb);
    fit.c = std::exp(x(0));
    fit.k = x(1);
    fit.v = x(2);
  }
  return fit;
}

LearnDynamicsResult learn_dynamics(const ChainHamiltonian& h, int qubit, int symbol,
                                   double t, double gamma, double epsilon, double delta,
                                   std::uint64_t seed) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0,1)");
  const DenseOperator truth = evolve_observable(h, qubit, symbol, t);
  OracleHandle oracle(truth, seed);

  // Budget: half the confidence on the search, half on the re-estimation;
  // half the error budget on estimation noise, the rest absorbs the
  // below-threshold tail. The list never exceeds 4/gamma^2 entries.
  const double list_cap = 4.0 / (gamma * gamma);
  const double eta = std::sqrt(epsilon / (2.0 * list_cap));
  const double per_coeff_delta = delta / (2.0 * list_cap);

  LearnDynamicsResult out;
  out.coefficient_eta = eta;
  out.gl = goldreich_levin(oracle, gamma, delta / 2.0, eta, per_coeff_delta);

  std::vector<Spectrum::Entry> entries;
  entries.reserve(out.gl.coefficients.size());
  for (const auto& [s, c] : out.gl.coefficients) entries.emplace_back(s, Complex(c, 0.0));
  const Spectrum rebuilt = Spectrum::from_entries(h.n, true, std::move(entries));
  out.estimate = inverse_fourier(rebuilt);
  out.error_sq = (out.estimate.mat - truth.mat).squaredNorm() /
                 static_cast<double>(truth.dim());
  out.queries = oracle.query_count();
  return out;
}

}  // namespace qbool
