#pragma once

#include <utility>
#include <vector>

#include "qbool/pauli.hpp"

namespace qbool {

/// Sparse Pauli-basis Fourier spectrum: coefficients f_hat_s = 2^-n tr(sigma^s f)
/// keyed by Pauli word, sorted lexicographically (so a fixed prefix over the
/// leading qubits is a contiguous range). Coefficients with magnitude at or
/// below the sparsity threshold are absent. Coefficients are real when the
/// source operator is Hermitian; the flag records which case applies.
class Spectrum {
 public:
  using Entry = std::pair<PauliString, Complex>;

  static constexpr double kSparsityThreshold = 1e-12;

  Spectrum() = default;
  Spectrum(int n, bool real_coefficients);

  /// Sorts, merges duplicates, and drops sub-threshold coefficients.
  static Spectrum from_entries(int n, bool real_coefficients, std::vector<Entry> entries);

  int qubits() const { return n_; }
  bool real_coefficients() const { return real_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Coefficient at s, zero if absent.
  Complex coefficient(const PauliString& s) const;
  double real_coefficient(const PauliString& s) const;

  /// Sum of |coefficient|^2 over all retained entries.
  double total_weight() const;

  /// Max weight |s| over retained entries; -1 for the empty spectrum.
  int degree() const;
  /// Union of supports, 0-based sorted qubit list.
  std::vector<int> support() const;
  /// weight_per_level()[k] = sum of |f_hat_s|^2 over |s| = k, k = 0..n.
  std::vector<double> weight_per_level() const;
  /// Restriction to weight-k words.
  Spectrum level_projection(int k) const;
  /// Restriction to weight >= k words.
  Spectrum high_level_projection(int k) const;

  /// Sum of |f_hat_t|^2 over words t starting with the given prefix on the
  /// leading qubits (contiguous range scan).
  double prefix_weight(const std::vector<std::uint8_t>& prefix) const;

  /// Applies fn to every coefficient and re-filters against the threshold.
  template <typename Fn>
  Spectrum map_coefficients(Fn&& fn) const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [s, c] : entries_) out.emplace_back(s, fn(s, c));
    return from_entries(n_, real_, std::move(out));
  }

 private:
  int n_ = 0;
  bool real_ = true;
  std::vector<Entry> entries_;
};

}  // namespace qbool
