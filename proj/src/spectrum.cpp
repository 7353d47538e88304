#include "qbool/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbool {

Spectrum::Spectrum(int n, bool real_coefficients) : n_(n), real_(real_coefficients) {}

Spectrum Spectrum::from_entries(int n, bool real_coefficients, std::vector<Entry> entries) {
  for (const auto& [s, c] : entries) {
    if (s.size() != n) throw std::invalid_argument("spectrum key length does not match qubit count");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Spectrum out(n, real_coefficients);
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(out.entries_,
                [](const Entry& e) { return std::abs(e.second) <= kSparsityThreshold; });
  return out;
}

Complex Spectrum::coefficient(const PauliString& s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, const PauliString& k) { return e.first < k; });
  if (it != entries_.end() && it->first == s) return it->second;
  return Complex(0, 0);
}

double Spectrum::real_coefficient(const PauliString& s) const {
  return coefficient(s).real();
}

double Spectrum::total_weight() const {
  double w = 0;
  for (const auto& [s, c] : entries_) w += std::norm(c);
  return w;
}

int Spectrum::degree() const {
  int d = -1;
  for (const auto& [s, c] : entries_) d = std::max(d, s.weight());
  return d;
}

std::vector<int> Spectrum::support() const {
  std::vector<bool> hit(n_, false);
  for (const auto& [s, c] : entries_)
    for (int j : s.support()) hit[j] = true;
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (hit[j]) out.push_back(j);
  return out;
}

std::vector<double> Spectrum::weight_per_level() const {
  std::vector<double> w(n_ + 1, 0.0);
  for (const auto& [s, c] : entries_) w[s.weight()] += std::norm(c);
  return w;
}

Spectrum Spectrum::level_projection(int k) const {
  std::vector<Entry> out;
  for (const auto& e : entries_)
    if (e.first.weight() == k) out.push_back(e);
  return from_entries(n_, real_, std::move(out));
}

Spectrum Spectrum::high_level_projection(int k) const {
  std::vector<Entry> out;
  for (const auto& e : entries_)
    if (e.first.weight() >= k) out.push_back(e);
  return from_entries(n_, real_, std::move(out));
}

double Spectrum::prefix_weight(const std::vector<std::uint8_t>& prefix) const {
  if (static_cast<int>(prefix.size()) > n_)
    throw std::invalid_argument("prefix longer than word length");
  std::vector<std::uint8_t> lo(prefix);
  lo.resize(n_, 0);
  const PauliString low(std::move(lo));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), low,
                             [](const Entry& e, const PauliString& k) { return e.first < k; });
  double w = 0;
  for (; it != entries_.end(); ++it) {
    const auto& word = it->first.word();
    if (!std::equal(prefix.begin(), prefix.end(), word.begin())) break;
    w += std::norm(it->second);
  }
  return w;
}

}  // namespace qbool
