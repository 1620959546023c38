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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "slocc/tensor.hpp"

namespace slocc {

/// m = left * diag(singular_values) * right^dagger, singular values sorted
/// descending, left/right with orthonormal columns (full square factors).
struct SvdResult {
  std::vector<double> singular_values;
  ComplexTensor left;
  ComplexTensor right;
};

/// Full SVD.  Post: reconstruction residual below 1e-12 relative (Frobenius).
SvdResult svd(const ComplexTensor& m);

/// Number of singular values s_i with s_i > tol * s_max (0 for all-zero s).
std::size_t rank_from_singular_values(std::span<const double> s, double tol);

/// m = eigenvectors * diag(eigenvalues) * eigenvectors^dagger, eigenvalues
/// ascending.  Requires Hermitian input (validated within 1e-10).
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexTensor eigenvectors;
};
HermitianEig eig_hermitian(const ComplexTensor& m);

/// Deterministic random stream: raw 64-bit mt19937_64 draws mapped to
/// uniforms, normals via Box-Muller.  Identical seed => identical stream on
/// every platform (mt19937_64 output is fully standard-specified and the
/// distributions are implemented here rather than via std:: distribution
/// objects, whose output the standard leaves implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // [0, 1)
  double normal();   // standard normal
  Complex normal_complex();  // independent N(0,1) real and imaginary parts

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// dim x dim matrix of iid standard complex normal entries.
ComplexTensor ginibre(std::size_t dim, Rng& rng);

/// Haar-distributed unitary, bit-for-bit reproducible per seed: Ginibre
/// matrix, QR factorization, R-diagonal phases absorbed into Q (the unique
/// QR normalization with positive-real R diagonal makes Q Haar).
ComplexTensor haar_random_unitary(std::size_t dim, std::uint64_t seed);

/// Haar-distributed pure state vector (normalized Ginibre column).
ComplexTensor haar_random_state(std::size_t dim, Rng& rng);

/// Random full-rank density operator G G^dagger / tr (G Ginibre).
ComplexTensor random_density_matrix(std::size_t dim, Rng& rng);

/// Random invertible matrix (Ginibre, redrawn until well-conditioned).
ComplexTensor random_invertible(std::size_t dim, Rng& rng);

Complex determinant(const ComplexTensor& m);

/// exp(scale * H) for Hermitian H, via eigendecomposition.
ComplexTensor expm_hermitian(const ComplexTensor& h, Complex scale);

/// Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const ComplexTensor& rho, const ComplexTensor& sigma);

bool is_unitary(const ComplexTensor& m, double tol = kUnitarityTol);

}  // namespace slocc
