#include "qbool/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace qbool {

namespace {

// Inserts a zero bit after every bit of x: bit j of x moves to bit 2j.
long spread_bits(long x, int n) {
  long out = 0;
  for (int j = 0; j < n; ++j) out |= ((x >> j) & 1L) << (2 * j);
  return out;
}

void check_power_of_two(const Matrix& m) {
  long d = m.rows();
  if (d < 2 || m.cols() != d) throw std::invalid_argument("operator matrix must be square");
  while (d > 1) {
    if (d % 2 != 0)
      throw std::invalid_argument("operator dimension is not a power of two");
    d /= 2;
  }
}

}  // namespace

long tensor_index(const PauliString& s) {
  long p = 0;
  for (int j = 0; j < s.size(); ++j) p = (p << 2) | s.symbol(j);
  return p;
}

PauliString word_from_index(long index, int n) {
  std::vector<std::uint8_t> w(n);
  for (int j = n - 1; j >= 0; --j) {
    w[j] = static_cast<std::uint8_t>(index & 3);
    index >>= 2;
  }
  return PauliString(std::move(w));
}

Vector coefficient_tensor(const Matrix& m, int n) {
  check_power_of_two(m);
  const long dim = 1L << n;
  if (m.rows() != dim) throw std::invalid_argument("matrix dimension does not match qubit count");

  // Pack entry (row, col) at digit word 2*row_bit + col_bit per qubit.
  Vector a(dim * dim);
  std::vector<long> spread(dim);
  for (long x = 0; x < dim; ++x) spread[x] = spread_bits(x, n);
  for (long r = 0; r < dim; ++r) {
    const long base = 2 * spread[r];
    for (long c = 0; c < dim; ++c) a[base + spread[c]] = m(r, c);
  }

  // One radix-4 pass per qubit turns the (row bit, col bit) digit into the
  // Pauli component index.
  const Complex i(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    const long stride = 1L << (2 * (n - 1 - q));
    for (long block = 0; block < dim * dim; block += 4 * stride) {
      for (long off = 0; off < stride; ++off) {
        const long i0 = block + off;
        const Complex m00 = a[i0];
        const Complex m01 = a[i0 + stride];
        const Complex m10 = a[i0 + 2 * stride];
        const Complex m11 = a[i0 + 3 * stride];
        a[i0] = 0.5 * (m00 + m11);
        a[i0 + stride] = 0.5 * (m01 + m10);
        a[i0 + 2 * stride] = 0.5 * i * (m01 - m10);
        a[i0 + 3 * stride] = 0.5 * (m00 - m11);
      }
    }
  }
  return a;
}

Matrix matrix_from_coefficients(const Vector& coeffs, int n) {
  const long dim = 1L << n;
  if (coeffs.size() != dim * dim)
    throw std::invalid_argument("coefficient tensor size does not match qubit count");
  Vector a = coeffs;
  const Complex i(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    const long stride = 1L << (2 * (n - 1 - q));
    for (long block = 0; block < dim * dim; block += 4 * stride) {
      for (long off = 0; off < stride; ++off) {
        const long i0 = block + off;
        const Complex cI = a[i0];
        const Complex cX = a[i0 + stride];
        const Complex cY = a[i0 + 2 * stride];
        const Complex cZ = a[i0 + 3 * stride];
        a[i0] = cI + cZ;
        a[i0 + stride] = cX - i * cY;
        a[i0 + 2 * stride] = cX + i * cY;
        a[i0 + 3 * stride] = cI - cZ;
      }
    }
  }
  Matrix m(dim, dim);
  std::vector<long> spread(dim);
  for (long x = 0; x < dim; ++x) spread[x] = spread_bits(x, n);
  for (long r = 0; r < dim; ++r) {
    const long base = 2 * spread[r];
    for (long c = 0; c < dim; ++c) m(r, c) = a[base + spread[c]];
  }
  return m;
}

Spectrum spectrum_from_tensor(const Vector& coeffs, int n, bool real_coefficients) {
  std::vector<Spectrum::Entry> entries;
  for (long p = 0; p < coeffs.size(); ++p) {
    if (std::abs(coeffs[p]) > Spectrum::kSparsityThreshold)
      entries.emplace_back(word_from_index(p, n), coeffs[p]);
  }
  return Spectrum::from_entries(n, real_coefficients, std::move(entries));
}

Spectrum fourier_transform(const DenseOperator& f, double hermitian_tol) {
  const bool real = is_hermitian(f.mat, hermitian_tol);
  return spectrum_from_tensor(coefficient_tensor(f.mat, f.n), f.n, real);
}

Complex fourier_coefficient(const DenseOperator& f, const PauliString& s) {
  if (s.size() != f.n) throw std::invalid_argument("Pauli word length does not match operator");
  const int n = f.n;
  long flip = 0;
  for (int j = 0; j < n; ++j)
    if (s.symbol(j) == 1 || s.symbol(j) == 2) flip |= 1L << (n - 1 - j);
  const Complex i(0.0, 1.0);
  Complex acc(0, 0);
  for (long row = 0; row < f.dim(); ++row) {
    Complex v(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const int bit = static_cast<int>((row >> (n - 1 - j)) & 1);
      switch (s.symbol(j)) {
        case 2: v *= bit ? i : -i; break;
        case 3: v *= bit ? -1.0 : 1.0; break;
        default: break;
      }
    }
    acc += v * f.mat(row ^ flip, row);
  }
  return acc / static_cast<double>(f.dim());
}

Spectrum fourier_transform_direct(const DenseOperator& f, double hermitian_tol) {
  const bool real = is_hermitian(f.mat, hermitian_tol);
  const long total = 1L << (2 * f.n);
  std::vector<Spectrum::Entry> entries;
  for (long p = 0; p < total; ++p) {
    const PauliString s = word_from_index(p, f.n);
    const Complex c = fourier_coefficient(f, s);
    if (std::abs(c) > Spectrum::kSparsityThreshold) entries.emplace_back(s, c);
  }
  return Spectrum::from_entries(f.n, real, std::move(entries));
}

DenseOperator inverse_fourier(const Spectrum& spec) {
  const int n = spec.qubits();
  const long dim = 1L << n;
  Vector coeffs = Vector::Zero(dim * dim);
  for (const auto& [s, c] : spec) coeffs[tensor_index(s)] = c;
  Matrix m = matrix_from_coefficients(coeffs, n);
  return DenseOperator(n, std::move(m), spec.real_coefficients());
}

}  // namespace qbool
