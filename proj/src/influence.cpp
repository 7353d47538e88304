#include "qbool/influence.hpp"

#include <cmath>
#include <stdexcept>

#include "qbool/fourier.hpp"

namespace qbool {

namespace {

void check_qubit(int n, int qubit) {
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("qubit index out of range");
}

void check_set(int n, const std::vector<int>& J) {
  for (int j : J) check_qubit(n, j);
}

}  // namespace

Spectrum derivative(const Spectrum& spec, int qubit) {
  check_qubit(spec.qubits(), qubit);
  return spec.map_coefficients([qubit](const PauliString& s, Complex c) {
    return s.symbol(qubit) != 0 ? c : Complex(0, 0);
  });
}

DenseOperator derivative(const DenseOperator& f, int qubit) {
  check_qubit(f.n, qubit);
  Matrix m = f.mat - mean_over_qubits(f.n, f.mat, {qubit});
  return DenseOperator(f.n, std::move(m), f.hermitian);
}

Spectrum derivative_set(const Spectrum& spec, const std::vector<int>& J) {
  check_set(spec.qubits(), J);
  return spec.map_coefficients([&J](const PauliString& s, Complex c) {
    for (int j : J)
      if (s.symbol(j) != 0) return c;
    return Complex(0, 0);
  });
}

DenseOperator derivative_set(const DenseOperator& f, const std::vector<int>& J) {
  check_set(f.n, J);
  if (J.empty()) return DenseOperator::zero(f.n);  // tr over nothing is the identity
  Matrix m = f.mat - mean_over_qubits(f.n, f.mat, J);
  return DenseOperator(f.n, std::move(m), f.hermitian);
}

double influence(const Spectrum& spec, int qubit) {
  check_qubit(spec.qubits(), qubit);
  double acc = 0;
  for (const auto& [s, c] : spec)
    if (s.symbol(qubit) != 0) acc += std::norm(c);
  return acc;
}

double influence(const DenseOperator& f, int qubit) {
  return influence(fourier_transform(f), qubit);
}

std::vector<double> influences(const Spectrum& spec) {
  std::vector<double> out(spec.qubits(), 0.0);
  for (const auto& [s, c] : spec) {
    const double w = std::norm(c);
    for (int j = 0; j < spec.qubits(); ++j)
      if (s.symbol(j) != 0) out[j] += w;
  }
  return out;
}

double total_influence(const Spectrum& spec) {
  double acc = 0;
  for (const auto& [s, c] : spec) acc += s.weight() * std::norm(c);
  return acc;
}

double total_influence(const DenseOperator& f) {
  return total_influence(fourier_transform(f));
}

double influence_set(const Spectrum& spec, const std::vector<int>& J) {
  check_set(spec.qubits(), J);
  double acc = 0;
  for (const auto& [s, c] : spec) {
    for (int j : J) {
      if (s.symbol(j) != 0) {
        acc += std::norm(c);
        break;
      }
    }
  }
  return acc;
}

double influence_haar_estimate(const DenseOperator& f, int qubit, Rng& rng, int samples) {
  check_qubit(f.n, qubit);
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  double acc = 0;
  for (int i = 0; i < samples; ++i) {
    const Matrix u = embed(f.n, {qubit}, random_u2(rng));
    const Matrix comm = u * f.mat - f.mat * u;
    acc += 0.5 * comm.squaredNorm() / static_cast<double>(f.dim());
  }
  return acc / samples;
}

double variance(const DenseOperator& f, double tol) {
  if (hermiticity_error(f.mat) > tol)
    throw std::invalid_argument("variance needs a Hermitian operator");
  const double d = static_cast<double>(f.dim());
  const double mean_sq = f.mat.squaredNorm() / d;  // 2^-n tr(f^2) for Hermitian f
  const double mean = f.mat.trace().real() / d;
  return mean_sq - mean * mean;
}

PoincareReport poincare_check(const DenseOperator& f, double tol) {
  PoincareReport rep;
  rep.variance = variance(f, tol);
  const Spectrum spec = fourier_transform(f);
  rep.total_influence = total_influence(spec);
  rep.margin = rep.total_influence - rep.variance;
  rep.influences = influences(spec);
  for (int j = 0; j < f.n; ++j) {
    if (rep.influences[j] > rep.max_influence) {
      rep.max_influence = rep.influences[j];
      rep.max_qubit = j;
    }
  }
  rep.traceless_boolean =
      std::abs(f.mat.trace()) / static_cast<double>(f.dim()) <= tol &&
      is_quantum_boolean(f, tol);
  rep.influential_bound = 1.0 / f.n;
  return rep;
}

TalagrandReport talagrand_check(const DenseOperator& f, double tol, double log_base) {
  if (hermiticity_error(f.mat) > tol)
    throw std::invalid_argument("talagrand check needs a Hermitian operator");
  if (std::abs(f.mat.trace()) / static_cast<double>(f.dim()) > tol)
    throw std::invalid_argument("talagrand check needs a traceless operator");
  TalagrandReport rep;
  rep.lhs = f.mat.squaredNorm() / static_cast<double>(f.dim());
  rep.terms.resize(f.n, 0.0);
  for (int j = 0; j < f.n; ++j) {
    const DenseOperator d = derivative(f, j);
    const double n2 = schatten_norm(d, 2.0);
    if (n2 <= 1e-15) continue;
    const double n1 = schatten_norm(d, 1.0);
    const double denom = (2.0 / 3.0) * std::log(n2 / n1) / std::log(log_base) + 1.0;
    rep.terms[j] = 10.0 * n2 * n2 / denom;
    rep.rhs += rep.terms[j];
  }
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

BadInfluenceReport bad_influence_detect(const DenseOperator& f, const std::vector<int>& J,
                                        double tol) {
  if (!is_quantum_boolean(f, tol))
    throw std::invalid_argument("bad influence detection needs a quantum boolean input");
  check_set(f.n, J);
  BadInfluenceReport rep;
  const DenseOperator d = derivative_set(f, J);
  rep.norm_2 = schatten_norm(d, 2.0);
  rep.norm_1 = schatten_norm(d, 1.0);
  rep.alpha_sq = rep.norm_2 * rep.norm_2;
  if (rep.norm_2 <= tol) {
    rep.degenerate = true;
    return rep;
  }
  rep.bad = std::abs(rep.norm_2 - rep.norm_1) <= tol;
  if (!rep.bad) return rep;

  // f = sqrt(1 - alpha^2) f' (x) I_J + alpha g with g = d_J(f)/alpha;
  // both parts boolean and mutually anticommuting.
  const double alpha = rep.norm_2;
  const Matrix g = d.mat / alpha;
  const Matrix rest = f.mat - d.mat;  // sqrt(1-alpha^2) f' (x) I_J
  const Matrix eye = Matrix::Identity(f.dim(), f.dim());
  const double g_err = operator_norm(g * g - eye);
  const double anti_err = operator_norm(rest * g + g * rest);
  rep.structure_error = std::max(g_err, anti_err);
  rep.structure_verified = rep.structure_error <= std::sqrt(tol);
  return rep;
}

AnticommutingKklReport anticommuting_kkl_check(const DenseOperator& f, double tol) {
  if (!is_quantum_boolean(f, tol))
    throw std::invalid_argument("anticommuting bound needs a quantum boolean input");
  const Spectrum spec = fourier_transform(f);
  const auto& entries = spec.entries();
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (!entries[a].first.anticommutes_with(entries[b].first))
        throw std::invalid_argument("spectrum words " + entries[a].first.str() + " and " +
                                    entries[b].first.str() + " do not anticommute");
    }
  }
  AnticommutingKklReport rep;
  rep.influences = influences(spec);
  for (int j = 0; j < f.n; ++j) {
    rep.sum_of_squares += rep.influences[j] * rep.influences[j];
    if (rep.influences[j] > rep.max_influence) {
      rep.max_influence = rep.influences[j];
      rep.max_qubit = j;
    }
  }
  rep.bound = 1.0 / std::sqrt(static_cast<double>(f.n));
  rep.holds = rep.sum_of_squares >= 1.0 - 1e-9 && rep.max_influence >= rep.bound - 1e-9;
  return rep;
}

}  // namespace qbool
