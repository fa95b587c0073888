// Copyright 2026 The qdgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <sstream>

#include "qdgate/errors.hpp"

namespace qdgate {

using Complex = std::complex<double>;

/// Basis labels of the rotating-frame Hilbert space {|0>, |1>, |X>}.
enum Level : std::size_t { kZero = 0, kOne = 1, kTrion = 2 };

inline constexpr std::size_t kDim = 3;

/// Tolerances for density-matrix health checks at trajectory checkpoints and
/// for operators assembled in closed form.
inline constexpr double kDensityTol = 1e-8;
inline constexpr double kConstructedTol = 1e-12;

/// Dense 3x3 complex operator, row-major. Used for Hamiltonians, jump
/// operators and density matrices alike.
class OperatorMatrix {
 public:
  constexpr OperatorMatrix() = default;

  static constexpr OperatorMatrix identity() {
    OperatorMatrix m;
    for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// |row><col|
  static constexpr OperatorMatrix ket_bra(std::size_t row, std::size_t col) {
    OperatorMatrix m;
    m(row, col) = 1.0;
    return m;
  }

  static constexpr OperatorMatrix diagonal(double a, double b, double c) {
    OperatorMatrix m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }

  /// |psi><psi| for a (not necessarily normalized) state vector.
  static OperatorMatrix projector(const std::array<Complex, kDim>& psi) {
    OperatorMatrix m;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return m;
  }

  constexpr Complex& operator()(std::size_t row, std::size_t col) { return data_[row * kDim + col]; }
  constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kDim + col];
  }

  constexpr std::array<Complex, kDim * kDim>& data() { return data_; }
  constexpr const std::array<Complex, kDim * kDim>& data() const { return data_; }

  OperatorMatrix& operator+=(const OperatorMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  OperatorMatrix& operator-=(const OperatorMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  OperatorMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(OperatorMatrix a, Complex s) { return a *= s; }
  friend OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
  friend OperatorMatrix operator*(OperatorMatrix a, double s) { return a *= s; }
  friend OperatorMatrix operator*(double s, OperatorMatrix a) { return a *= s; }

  /// Matrix product.
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    OperatorMatrix c;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t k = 0; k < kDim; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < kDim; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::array<Complex, kDim * kDim> data_{};
};

inline OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b; }

/// Conjugate transpose.
inline OperatorMatrix dagger(const OperatorMatrix& a) {
  OperatorMatrix r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Complex trace(const OperatorMatrix& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

/// Largest entrywise modulus.
inline double max_abs(const OperatorMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

/// max |a_ij - conj(a_ji)|
inline double hermiticity_error(const OperatorMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i; j < kDim; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline bool all_finite(const OperatorMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

/// Eigenvalues of a Hermitian 3x3 matrix in ascending order, by cyclic
/// complex Jacobi rotations. The input is symmetrized before iterating;
/// inputs whose anti-Hermitian part exceeds tol (relative to max(1, |a|))
/// are rejected.
inline std::array<double, kDim> eigvals_hermitian(const OperatorMatrix& a, double tol = kDensityTol) {
  const double scale = std::max(1.0, max_abs(a));
  if (!all_finite(a) || hermiticity_error(a) > tol * scale) {
    std::ostringstream os;
    os << "eigvals_hermitian: matrix is not Hermitian (max |A - A^dagger| = " << hermiticity_error(a) << ")";
    throw InvalidOperatorError(os.str());
  }
  OperatorMatrix m = (a + dagger(a)) * 0.5;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i + 1; j < kDim; ++j) off += std::norm(m(i, j));
    if (off <= 1e-34 * scale * scale) break;

    for (std::size_t p = 0; p < kDim; ++p) {
      for (std::size_t q = p + 1; q < kDim; ++q) {
        const double mod = std::abs(m(p, q));
        if (mod == 0.0) continue;
        const Complex phase = m(p, q) / mod;  // e^{i phi}
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double angle = 0.5 * std::atan2(2.0 * mod, aqq - app);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        // V = D R, D = diag(.., 1 at p, e^{-i phi} at q, ..), R the real rotation.
        OperatorMatrix v = OperatorMatrix::identity();
        v(p, p) = c;
        v(p, q) = s;
        v(q, p) = -s * std::conj(phase);
        v(q, q) = c * std::conj(phase);
        m = dagger(v) * m * v;
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
    }
  }
  std::array<double, kDim> ev{m(0, 0).real(), m(1, 1).real(), m(2, 2).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Deviation of a matrix from the density-matrix contract.
struct DensityHealth {
  double trace_error = 0.0;        // |tr rho - 1|
  double hermiticity_error = 0.0;  // max |rho - rho^dagger|
  double min_eigenvalue = 0.0;

  bool ok(double tol = kDensityTol) const {
    return trace_error < tol && hermiticity_error < tol && min_eigenvalue > -tol;
  }
};

inline DensityHealth density_health(const OperatorMatrix& rho) {
  DensityHealth h;
  h.trace_error = std::abs(trace(rho) - 1.0);
  h.hermiticity_error = hermiticity_error(rho);
  if (!all_finite(rho)) {
    h.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return h;
  }
  // Skip the Hermiticity gate here so the check can report, not throw.
  h.min_eigenvalue = eigvals_hermitian((rho + dagger(rho)) * 0.5, 1.0)[0];
  return h;
}

/// Throws InvalidOperatorError unless rho is Hermitian with unit trace.
inline void require_hermitian_unit_trace(const OperatorMatrix& rho, const char* who, double tol = kDensityTol) {
  const double herm = hermiticity_error(rho);
  const double tr = std::abs(trace(rho) - 1.0);
  if (!all_finite(rho) || herm > tol || tr > tol) {
    std::ostringstream os;
    os << who << ": not a density matrix (hermiticity error " << herm << ", trace error " << tr << ")";
    throw InvalidOperatorError(os.str());
  }
}

/// tr(rho^2).
inline double purity(const OperatorMatrix& rho) {
  require_hermitian_unit_trace(rho, "purity");
  double p = 0.0;
  for (const auto& x : rho.data()) p += std::norm(x);
  return p;
}

}  // namespace qdgate
