#pragma once

#include <vector>

#include "qbool/operators.hpp"
#include "qbool/random.hpp"
#include "qbool/spectrum.hpp"

namespace qbool {

/// Derivative with respect to qubit j: zeroes every coefficient with s_j = 0.
Spectrum derivative(const Spectrum& spec, int qubit);
/// Matrix form f - tr_j(f) (x) I_j/2; agrees with the spectral form.
DenseOperator derivative(const DenseOperator& f, int qubit);

/// Set derivative d_J: keeps exactly the coefficients whose support meets J.
/// The empty set yields the zero operator.
Spectrum derivative_set(const Spectrum& spec, const std::vector<int>& J);
DenseOperator derivative_set(const DenseOperator& f, const std::vector<int>& J);

/// I_j(f) = ||d_j f||_2^2 = sum over s_j != 0 of |f_hat_s|^2.
double influence(const Spectrum& spec, int qubit);
double influence(const DenseOperator& f, int qubit);
std::vector<double> influences(const Spectrum& spec);

/// I(f) = sum_s |s| |f_hat_s|^2.
double total_influence(const Spectrum& spec);
double total_influence(const DenseOperator& f);

/// I_J(f) = ||d_J f||_2^2.
double influence_set(const Spectrum& spec, const std::vector<int>& J);

/// Monte-Carlo cross-check I_j = (1/2) E_U ||[U_j, f]||_2^2 over Haar U(2).
double influence_haar_estimate(const DenseOperator& f, int qubit, Rng& rng,
                               int samples = 10000);

/// var(f) = 2^-n tr(f^2) - (2^-n tr f)^2.
double variance(const DenseOperator& f, double tol = kDefaultTol);

struct PoincareReport {
  double variance = 0;
  double total_influence = 0;
  double margin = 0;  // total_influence - variance, nonnegative
  std::vector<double> influences;
  int max_qubit = -1;
  double max_influence = 0;
  bool traceless_boolean = false;
  double influential_bound = 0;  // 1/n, applies to traceless booleans
};

/// var(f) <= I(f); for traceless quantum boolean f additionally
/// max_j I_j >= 1/n.
PoincareReport poincare_check(const DenseOperator& f, double tol = kDefaultTol);

struct TalagrandReport {
  double lhs = 0;  // ||f||_2^2
  double rhs = 0;  // sum_i 10 ||d_i f||_2^2 / ((2/3) log2(||d_i f||_2 / ||d_i f||_1) + 1)
  double margin = 0;
  std::vector<double> terms;
};

/// Variance bound through derivative norm ratios for traceless Hermitian
/// operators; logarithm base 2 by default. Vanishing derivatives contribute
/// zero.
TalagrandReport talagrand_check(const DenseOperator& f, double tol = kDefaultTol,
                                double log_base = 2.0);

struct BadInfluenceReport {
  bool bad = false;
  double norm_2 = 0;
  double norm_1 = 0;
  double alpha_sq = 0;  // I_J(f)
  bool degenerate = false;        // d_J(f) = 0, structure skipped
  bool structure_verified = false;
  double structure_error = 0;  // worst of g^2 - I and the anticommutator norm
};

/// J has bad influence when ||d_J f||_2 = ||d_J f||_1. When it does, verifies
/// the decomposition f = sqrt(1-alpha^2) f' (x) I_J + alpha g with
/// g = d_J(f)/alpha squaring to the identity and anticommuting with the rest.
BadInfluenceReport bad_influence_detect(const DenseOperator& f, const std::vector<int>& J,
                                        double tol = kDefaultTol);

struct AnticommutingKklReport {
  std::vector<double> influences;
  double sum_of_squares = 0;  // >= 1
  double max_influence = 0;
  int max_qubit = -1;
  double bound = 0;  // 1/sqrt(n)
  bool holds = false;
};

/// For quantum boolean f whose retained words pairwise anticommute:
/// sum_j I_j^2 >= 1, hence max_j I_j >= 1/sqrt(n). Throws when the words do
/// not pairwise anticommute.
AnticommutingKklReport anticommuting_kkl_check(const DenseOperator& f,
                                               double tol = kDefaultTol);

}  // namespace qbool
