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

#include "boundent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boundent::linalg {

MatrixC::MatrixC(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

MatrixC MatrixC::identity(std::size_t n) {
  MatrixC out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

MatrixC MatrixC::diagonal(std::span<const Complex> diag) {
  MatrixC out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

MatrixC MatrixC::adjoint() const {
  MatrixC out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex MatrixC::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double MatrixC::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double MatrixC::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

VectorC MatrixC::column(std::size_t j) const {
  VectorC v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MatrixC& MatrixC::operator+=(const MatrixC& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

MatrixC& MatrixC::operator-=(const MatrixC& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

MatrixC& MatrixC::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

MatrixC operator+(MatrixC lhs, const MatrixC& rhs) { return lhs += rhs; }
MatrixC operator-(MatrixC lhs, const MatrixC& rhs) { return lhs -= rhs; }
MatrixC operator*(MatrixC lhs, Complex scale) { return lhs *= scale; }

MatrixC operator*(const MatrixC& lhs, const MatrixC& rhs) {
  if (lhs.cols() != rhs.rows()) throw LinalgError("matrix product: shape mismatch");
  MatrixC out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

VectorC operator*(const MatrixC& lhs, const VectorC& rhs) {
  if (lhs.cols() != rhs.size()) throw LinalgError("matrix-vector product: shape mismatch");
  VectorC out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < lhs.cols(); ++j) acc += lhs(i, j) * rhs[j];
    out[i] = acc;
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw LinalgError("inner product: length mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

MatrixC outer(std::span<const Complex> u, std::span<const Complex> v) {
  MatrixC out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

double hermitian_deviation(const MatrixC& m) {
  if (!m.is_square()) throw LinalgError("hermitian_deviation: matrix is not square");
  double dev = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

MatrixC kron(const MatrixC& a, const MatrixC& b) {
  MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

MatrixC partial_transpose_first(const MatrixC& m, std::size_t dA, std::size_t dB) {
  if (dA == 0 || dB == 0) throw LinalgError("partial_transpose_first: subsystem dimensions must be positive");
  if (m.rows() != dA * dB || m.cols() != dA * dB)
    throw LinalgError("partial_transpose_first: matrix is not (dA*dB)-square");
  MatrixC out(m.rows(), m.cols());
  for (std::size_t mu = 0; mu < dB; ++mu)
    for (std::size_t nu = 0; nu < dB; ++nu)
      for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t b = 0; b < dA; ++b)
          out(joint_index(a, mu, dA), joint_index(b, nu, dA)) = m(joint_index(b, mu, dA), joint_index(a, nu, dA));
  return out;
}

namespace {

// Row-major fixed 3x3 storage with the accessor shape of MatrixC.
struct Fixed3 {
  std::array<Complex, 9> a{};
  std::size_t rows() const noexcept { return 3; }
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * 3 + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * 3 + j]; }
};

template <class M>
double off_diagonal_norm(const M& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with J = diag-phase * real rotation; applies A <- J^H A J
// and V <- V J.
template <class M>
void jacobi_rotate(M& a, M& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

// Cyclic sweeps until the off-diagonal norm drops to `target`.
template <class M>
bool jacobi_sweeps(M& a, M& v, double target, int max_sweeps) {
  const std::size_t n = a.rows();
  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  return converged;
}

}  // namespace

HermitianEigenResult hermitian_eigen(const MatrixC& m, const EigenOptions& options) {
  if (!m.is_square()) throw LinalgError("hermitian_eigen: matrix is not square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (hermitian_deviation(m) > options.hermitian_tol * scale)
    throw LinalgError("hermitian_eigen: matrix is not Hermitian within tolerance");

  MatrixC a = (m + m.adjoint()) * Complex{0.5, 0.0};
  MatrixC v = MatrixC::identity(n);
  const double target = options.convergence_tol * a.frobenius_norm();

  if (!jacobi_sweeps(a, v, target, options.max_sweeps)) throw LinalgError("hermitian_eigen: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = MatrixC(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

Eigenpair3 lowest_eigenpair3(const std::array<Complex, 9>& m, const EigenOptions& options) {
  Fixed3 a;
  double scale = 1.0;
  double fro = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      scale = std::max(scale, std::abs(m[i * 3 + j]));
      a(i, j) = 0.5 * (m[i * 3 + j] + std::conj(m[j * 3 + i]));
      fro += std::norm(a(i, j));
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(m[i * 3 + j] - std::conj(m[j * 3 + i])) > options.hermitian_tol * scale)
        throw LinalgError("lowest_eigenpair3: matrix is not Hermitian within tolerance");

  Fixed3 v;
  v(0, 0) = v(1, 1) = v(2, 2) = 1.0;
  if (!jacobi_sweeps(a, v, options.convergence_tol * std::sqrt(fro), options.max_sweeps))
    throw LinalgError("lowest_eigenpair3: Jacobi iteration did not converge");

  // Last index among ties, matching the descending stable order of hermitian_eigen.
  std::size_t lo = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (a(k, k).real() <= a(lo, lo).real()) lo = k;
  Eigenpair3 out;
  out.value = a(lo, lo).real();
  for (std::size_t i = 0; i < 3; ++i) out.vector[i] = v(i, lo);
  return out;
}

MatrixC projector_from_vectors(std::span<const VectorC> vs, double drop_tol) {
  if (vs.empty()) return {};
  const std::size_t dim = vs.front().size();
  std::vector<VectorC> basis;
  for (const auto& input : vs) {
    if (input.size() != dim) throw LinalgError("projector_from_vectors: vectors differ in dimension");
    const double input_norm = norm(input);
    if (input_norm < drop_tol) continue;
    VectorC u = input;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const Complex overlap = inner(b, u);
        for (std::size_t i = 0; i < dim; ++i) u[i] -= overlap * b[i];
      }
    const double residual = norm(u);
    if (residual < drop_tol * std::max(1.0, input_norm)) continue;
    for (auto& z : u) z /= residual;
    basis.push_back(std::move(u));
  }
  MatrixC p(dim, dim);
  for (const auto& b : basis) p += outer(b, b);
  return p;
}

}  // namespace boundent::linalg
