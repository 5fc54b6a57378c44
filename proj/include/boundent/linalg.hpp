// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundent::linalg {

using Complex = std::complex<double>;
using VectorC = std::vector<Complex>;

/// Joint index of a bipartite basis state |m>_A |mu>_B.
///
/// The first-subsystem index varies fastest: i = m + dA * mu, so a 3x3
/// vector is listed as 00, 10, 20; 01, 11, 21; 02, 12, 22. Every module uses
/// this convention; nothing else in the library computes joint indices.
constexpr std::size_t joint_index(std::size_t m, std::size_t mu, std::size_t dA = 3) noexcept {
  return m + dA * mu;
}

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix.
class MatrixC {
 public:
  MatrixC() = default;
  MatrixC(std::size_t rows, std::size_t cols);

  static MatrixC identity(std::size_t n);
  static MatrixC diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  MatrixC adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// Column j as a vector.
  VectorC column(std::size_t j) const;

  MatrixC& operator+=(const MatrixC& other);
  MatrixC& operator-=(const MatrixC& other);
  MatrixC& operator*=(Complex scale);

  friend bool operator==(const MatrixC&, const MatrixC&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

MatrixC operator+(MatrixC lhs, const MatrixC& rhs);
MatrixC operator-(MatrixC lhs, const MatrixC& rhs);
MatrixC operator*(MatrixC lhs, Complex scale);
MatrixC operator*(const MatrixC& lhs, const MatrixC& rhs);
VectorC operator*(const MatrixC& lhs, const VectorC& rhs);

/// <u|v>, antilinear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
/// |u><v|
MatrixC outer(std::span<const Complex> u, std::span<const Complex> v);

/// max_ij |M_ij - conj(M_ji)|
double hermitian_deviation(const MatrixC& m);

/// Standard Kronecker product: (A (x) B)[i*rB + k][j*cB + l] = A[i][j] * B[k][l].
MatrixC kron(const MatrixC& a, const MatrixC& b);

/// Transpose on the first subsystem: out[(m,mu),(n,nu)] = in[(n,mu),(m,nu)],
/// with joint indices from joint_index(). An involution that only permutes
/// entries.
MatrixC partial_transpose_first(const MatrixC& m, std::size_t dA, std::size_t dB);

struct EigenOptions {
  double hermitian_tol = 1e-12;
  double convergence_tol = 1e-14;
  int max_sweeps = 100;
};

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  ///< descending
  MatrixC eigenvectors;             ///< column k pairs with eigenvalues[k]

  VectorC eigenvector(std::size_t k) const { return eigenvectors.column(k); }
};

/// Cyclic Jacobi diagonalization with complex Givens rotations.
///
/// The input is symmetrized as (M + M^dagger)/2 first. Throws LinalgError if
/// M is not Hermitian within tolerance or the sweep limit is hit.
HermitianEigenResult hermitian_eigen(const MatrixC& m, const EigenOptions& options = {});

struct Eigenpair3 {
  double value = 0.0;
  std::array<Complex, 3> vector{};
};

/// Lowest eigenpair of a row-major 3x3 Hermitian matrix. Same Jacobi
/// iteration as hermitian_eigen, without heap allocation; used in hot loops.
Eigenpair3 lowest_eigenpair3(const std::array<Complex, 9>& m, const EigenOptions& options = {});

/// Orthogonal projector onto span(vs).
///
/// Modified Gram-Schmidt with one re-orthogonalization pass; inputs whose
/// norm (or residual after orthogonalization) falls below drop_tol are
/// skipped. An empty span yields the zero matrix of the vectors' dimension.
MatrixC projector_from_vectors(std::span<const VectorC> vs, double drop_tol = 1e-12);

}  // namespace boundent::linalg
