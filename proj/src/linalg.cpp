// Copyright 2026 The slocc authors
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

#include "slocc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "eigen_bridge.hpp"

namespace slocc {

using detail::from_eigen;
using detail::to_eigen;

SvdResult svd(const ComplexTensor& m) {
  if (!m.is_matrix()) throw InvalidInput("svd: needs a matrix");
  Eigen::MatrixXcd em = to_eigen(m);
  // Jacobi is the accuracy workhorse for small blocks; divide-and-conquer
  // takes over for the larger realignment matrices.
  Eigen::MatrixXcd u, v;
  Eigen::VectorXd s;
  if (std::max(em.rows(), em.cols()) <= 32) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(
        em, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = solver.matrixU();
    v = solver.matrixV();
    s = solver.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXcd> solver(
        em, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = solver.matrixU();
    v = solver.matrixV();
    s = solver.singularValues();
  }
  SvdResult out;
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.left = from_eigen(u);
  out.right = from_eigen(v);

  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(em.rows(), em.cols());
  for (Eigen::Index k = 0; k < s.size(); ++k) sigma(k, k) = s(k);
  Eigen::MatrixXcd recon = u * sigma * v.adjoint();
  double scale = std::max(1.0, em.norm());
  if ((recon - em).norm() > 1e-12 * scale)
    throw NumericalFailure("svd: reconstruction residual above 1e-12");
  return out;
}

std::size_t rank_from_singular_values(std::span<const double> s, double tol) {
  double smax = 0.0;
  for (double v : s) smax = std::max(smax, v);
  if (smax == 0.0) return 0;
  std::size_t r = 0;
  for (double v : s)
    if (v > tol * smax) ++r;
  return r;
}

HermitianEig eig_hermitian(const ComplexTensor& m) {
  if (!m.is_square_matrix()) throw InvalidInput("eig_hermitian: needs a square matrix");
  Eigen::MatrixXcd em = to_eigen(m);
  double scale = std::max(1.0, em.norm());
  if ((em - em.adjoint()).norm() > 1e-10 * scale)
    throw InvalidInput("eig_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eig_hermitian: eigensolver did not converge");
  HermitianEig out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + em.rows());
  out.eigenvectors = from_eigen(solver.eigenvectors());
  return out;
}

double Rng::uniform() {
  // Top 53 bits of a raw draw — exactly representable, uniform on [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u clamped away from zero so the log is finite.
  double u = 0.0;
  while (u <= 0.0) u = uniform();
  double v = uniform();
  double r = std::sqrt(-2.0 * std::log(u));
  double angle = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

Complex Rng::normal_complex() {
  double re = normal();
  double im = normal();
  return {re, im};
}

ComplexTensor ginibre(std::size_t dim, Rng& rng) {
  ComplexTensor g({dim, dim});
  for (std::size_t i = 0; i < dim * dim; ++i) g[i] = rng.normal_complex();
  return g;
}

ComplexTensor haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw InvalidInput("haar_random_unitary: dim must be positive");
  Rng rng(seed);
  Eigen::MatrixXcd g = to_eigen(ginibre(dim, rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Absorb R's diagonal phases so the factorization has positive-real R
  // diagonal — the unique convention under which Q is Haar-distributed.
  for (std::size_t j = 0; j < dim; ++j) {
    Complex d = r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
    double a = std::abs(d);
    if (a == 0.0) throw NumericalFailure("haar_random_unitary: singular sample");
    q.col(static_cast<Eigen::Index>(j)) *= d / a;
  }
  return from_eigen(q);
}

ComplexTensor haar_random_state(std::size_t dim, Rng& rng) {
  ComplexTensor v({dim});
  double n2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = rng.normal_complex();
    n2 += std::norm(v[i]);
  }
  if (n2 == 0.0) throw NumericalFailure("haar_random_state: zero sample");
  v *= Complex{1.0 / std::sqrt(n2), 0.0};
  return v;
}

ComplexTensor random_density_matrix(std::size_t dim, Rng& rng) {
  ComplexTensor g = ginibre(dim, rng);
  ComplexTensor rho = matmul(g, g.dagger());
  Complex tr = rho.trace();
  rho *= Complex{1.0 / tr.real(), 0.0};
  return rho;
}

ComplexTensor random_invertible(std::size_t dim, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    ComplexTensor g = ginibre(dim, rng);
    Eigen::MatrixXcd eg = to_eigen(g);
    Eigen::JacobiSVD<Eigen::MatrixXcd> s(eg);
    double cond = s.singularValues()(0) /
                  s.singularValues()(static_cast<Eigen::Index>(dim) - 1);
    if (std::isfinite(cond) && cond < 1e4) return g;
  }
  throw NumericalFailure("random_invertible: no well-conditioned sample");
}

Complex determinant(const ComplexTensor& m) {
  if (!m.is_square_matrix()) throw InvalidInput("determinant: needs a square matrix");
  return to_eigen(m).determinant();
}

ComplexTensor expm_hermitian(const ComplexTensor& h, Complex scale) {
  HermitianEig eig = eig_hermitian(h);
  std::size_t n = h.rows();
  ComplexTensor d({n, n});
  for (std::size_t i = 0; i < n; ++i)
    d[i * n + i] = std::exp(scale * eig.eigenvalues[i]);
  return matmul(matmul(eig.eigenvectors, d), eig.eigenvectors.dagger());
}

double fidelity(const ComplexTensor& rho, const ComplexTensor& sigma) {
  if (!rho.is_square_matrix() || rho.shape() != sigma.shape())
    throw InvalidInput("fidelity: shape mismatch");
  HermitianEig er = eig_hermitian(rho);
  std::size_t n = rho.rows();
  ComplexTensor sq({n, n});
  for (std::size_t i = 0; i < n; ++i)
    sq[i * n + i] = std::sqrt(std::max(0.0, er.eigenvalues[i]));
  ComplexTensor sqrt_rho =
      matmul(matmul(er.eigenvectors, sq), er.eigenvectors.dagger());
  ComplexTensor inner = matmul(matmul(sqrt_rho, sigma), sqrt_rho);
  // inner is PSD up to rounding; sum the square roots of its eigenvalues.
  HermitianEig ei = eig_hermitian(inner);
  double tr = 0.0;
  for (double v : ei.eigenvalues) tr += std::sqrt(std::max(0.0, v));
  return tr * tr;
}

bool is_unitary(const ComplexTensor& m, double tol) {
  if (!m.is_square_matrix()) return false;
  ComplexTensor gram = matmul(m.dagger(), m);
  return max_abs_diff(gram, ComplexTensor::identity(m.rows())) <= tol;
}

}  // namespace slocc
