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

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "slocc/gates.hpp"
#include "slocc/linalg.hpp"

using namespace slocc;
using slocc_test::check_close;
using slocc_test::naive_matmul;

namespace {

ComplexTensor random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  ComplexTensor m({r, c});
  for (std::size_t i = 0; i < r * c; ++i) m[i] = rng.normal_complex();
  return m;
}

// U diag(s) V^dagger rebuilt with plain loops.
ComplexTensor rebuild_svd(const SvdResult& s, std::size_t rows,
                          std::size_t cols) {
  ComplexTensor out({rows, cols});
  std::size_t k = s.singular_values.size();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < k; ++l)
        acc += s.left[i * s.left.cols() + l] * s.singular_values[l] *
               std::conj(s.right[j * s.right.cols() + l]);
      out[i * cols + j] = acc;
    }
  return out;
}

}  // namespace

TEST_CASE("svd reconstructs rectangular matrices in both orientations") {
  for (auto [r, c, seed] : {std::array<std::size_t, 3>{5, 3, 101},
                            std::array<std::size_t, 3>{3, 5, 102},
                            std::array<std::size_t, 3>{16, 16, 103}}) {
    ComplexTensor m = random_matrix(r, c, seed);
    SvdResult s = svd(m);
    REQUIRE(s.singular_values.size() == std::min(r, c));
    CHECK(std::is_sorted(s.singular_values.rbegin(),
                         s.singular_values.rend()));
    for (double sv : s.singular_values) CHECK(sv >= 0.0);

    ComplexTensor rebuilt = rebuild_svd(s, r, c);
    CHECK(max_abs_diff(rebuilt, m) / m.norm() < 1e-12);

    // Orthonormal columns of both factors.
    ComplexTensor ltl = naive_matmul(s.left.dagger(), s.left);
    check_close(ltl, ComplexTensor::identity(ltl.rows()), 1e-12);
    ComplexTensor rtr = naive_matmul(s.right.dagger(), s.right);
    check_close(rtr, ComplexTensor::identity(rtr.rows()), 1e-12);
  }
}

TEST_CASE("svd of a known diagonal matrix") {
  ComplexTensor m({2, 2}, {Complex(3, 0), 0.0, 0.0, Complex(0, -2)});
  SvdResult s = svd(m);
  CHECK(s.singular_values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(s.singular_values[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("rank_from_singular_values uses the relative rule") {
  std::vector<double> s{1.0, 0.5, 1e-9, 0.0};
  CHECK(rank_from_singular_values(s, 1e-8) == 2);
  CHECK(rank_from_singular_values(s, 1e-10) == 3);
  std::vector<double> zero{0.0, 0.0};
  CHECK(rank_from_singular_values(zero, 1e-8) == 0);
  // Scale invariance: the rule only compares against the largest value.
  std::vector<double> scaled{1e-120, 0.5e-120, 1e-129, 0.0};
  CHECK(rank_from_singular_values(scaled, 1e-8) == 2);
}

TEST_CASE("eig_hermitian reconstructs and orders ascending") {
  ComplexTensor a = random_matrix(6, 6, 111);
  ComplexTensor h = a + a.dagger();
  HermitianEig e = eig_hermitian(h);
  CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));

  ComplexTensor rebuilt({6, 6});
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < 6; ++l)
        acc += e.eigenvectors[i * 6 + l] * e.eigenvalues[l] *
               std::conj(e.eigenvectors[j * 6 + l]);
      rebuilt[i * 6 + j] = acc;
    }
  check_close(rebuilt, h, 1e-11);

  CHECK_THROWS_AS(eig_hermitian(random_matrix(4, 4, 112)), InvalidInput);
}

TEST_CASE("Rng is seed-deterministic and standard-pinned") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());

  // mt19937_64's first output for seed 5489 is pinned by the standard; our
  // uniform maps x -> (x >> 11) * 2^-53.
  std::mt19937_64 reference(5489);
  double expected = double(reference() >> 11) * 0x1.0p-53;
  Rng pinned(5489);
  CHECK(pinned.uniform() == expected);

  // Uniforms stay in [0, 1); normals have plausible spread.
  Rng c(7);
  double acc = 0.0;
  for (int i = 0; i < 2000; ++i) {
    double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    acc += u;
  }
  CHECK(std::abs(acc / 2000 - 0.5) < 0.05);
}

TEST_CASE("haar_random_unitary is unitary up to dim 16 and reproducible") {
  for (std::size_t dim : {2, 3, 4, 8, 16}) {
    ComplexTensor u = haar_random_unitary(dim, 1000 + dim);
    ComplexTensor utu = naive_matmul(u.dagger(), u);
    CHECK(max_abs_diff(utu, ComplexTensor::identity(dim)) < 1e-11);
  }
  ComplexTensor u1 = haar_random_unitary(4, 77);
  ComplexTensor u2 = haar_random_unitary(4, 77);
  for (std::size_t i = 0; i < 16; ++i) CHECK(u1[i] == u2[i]);
  ComplexTensor u3 = haar_random_unitary(4, 78);
  CHECK(max_abs_diff(u1, u3) > 1e-3);
}

TEST_CASE("haar ensemble has flat second moments") {
  // E |u_ij|^2 = 1/dim for Haar; a fixed-seed average over 400 draws must
  // land near it.
  double acc00 = 0.0, acc11 = 0.0;
  const int n = 400;
  for (int s = 0; s < n; ++s) {
    ComplexTensor u = haar_random_unitary(4, 5000 + s);
    acc00 += std::norm(u[0]);
    acc11 += std::norm(u[1 * 4 + 1]);
  }
  CHECK(std::abs(acc00 / n - 0.25) < 0.03);
  CHECK(std::abs(acc11 / n - 0.25) < 0.03);
}

TEST_CASE("haar_random_state and random_density_matrix are well-formed") {
  Rng rng(313);
  ComplexTensor psi = haar_random_state(8, rng);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  ComplexTensor rho = random_density_matrix(4, rng);
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
  check_close(rho, rho.dagger(), 1e-14);
  HermitianEig e = eig_hermitian(rho);
  for (double ev : e.eigenvalues) CHECK(ev > -1e-12);
}

TEST_CASE("determinant on hand examples and unitaries") {
  ComplexTensor m({2, 2}, {Complex(1, 0), Complex(2, 0),  //
                           Complex(3, 0), Complex(4, 0)});
  CHECK(std::abs(determinant(m) - Complex(-2.0)) < 1e-14);

  ComplexTensor t({3, 3}, {Complex(2, 0), 0.0, 0.0,  //
                           0.0, Complex(0, 1), 0.0,  //
                           0.0, 0.0, Complex(1, 1)});
  CHECK(std::abs(determinant(t) - Complex(0, 2) * Complex(1, 1)) < 1e-14);

  CHECK(std::abs(std::abs(determinant(haar_random_unitary(5, 99))) - 1.0) <
        1e-12);
}

TEST_CASE("expm_hermitian matches closed forms") {
  // Diagonal case.
  ComplexTensor d({2, 2}, {Complex(1.5, 0), 0.0, 0.0, Complex(-0.5, 0)});
  ComplexTensor e = expm_hermitian(d, Complex(0, -2.0));
  CHECK(std::abs(e[0] - std::exp(Complex(0, -3.0))) < 1e-13);
  CHECK(std::abs(e[3] - std::exp(Complex(0, 1.0))) < 1e-13);
  CHECK(std::abs(e[1]) < 1e-14);

  // exp(-i theta sigma_x) = cos(theta) I - i sin(theta) sigma_x.
  double theta = 0.7;
  ComplexTensor got = expm_hermitian(gates::pauli(1), Complex(0, -theta));
  ComplexTensor want = ComplexTensor::identity(2);
  want *= std::cos(theta);
  ComplexTensor xs = gates::pauli(1);
  xs *= Complex(0, -std::sin(theta));
  want += xs;
  check_close(got, want, 1e-13);

  CHECK_THROWS_AS(expm_hermitian(random_matrix(3, 3, 131), Complex(1, 0)),
                  InvalidInput);
}

TEST_CASE("fidelity on known pairs") {
  ComplexTensor zero({2, 2});
  zero[0] = 1.0;  // |0><0|
  ComplexTensor one({2, 2});
  one[3] = 1.0;  // |1><1|
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-12));

  // Pure states: F = |<a|b>|^2.
  Rng rng(141);
  ComplexTensor a = haar_random_state(3, rng);
  ComplexTensor b = haar_random_state(3, rng);
  Complex ov = 0.0;
  for (std::size_t i = 0; i < 3; ++i) ov += std::conj(a[i]) * b[i];
  // The eigendecomposition route carries a few extra roundings.
  CHECK(fidelity(outer(a, a), outer(b, b)) ==
        doctest::Approx(std::norm(ov)).epsilon(1e-7));

  // Mixed states: F(rho, I/2) for rho = diag(p, 1-p) has the closed form
  // (sqrt(p/2) + sqrt((1-p)/2))^2.
  double p = 0.3;
  ComplexTensor rho({2, 2});
  rho[0] = p;
  rho[3] = 1 - p;
  ComplexTensor mixed = ComplexTensor::identity(2);
  mixed *= 0.5;
  double want = std::pow(std::sqrt(p / 2) + std::sqrt((1 - p) / 2), 2.0);
  CHECK(fidelity(rho, mixed) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("random_invertible and is_unitary") {
  Rng rng(151);
  ComplexTensor m = random_invertible(4, rng);
  CHECK(std::abs(determinant(m)) > 1e-8);
  CHECK_FALSE(is_unitary(m));
  CHECK(is_unitary(haar_random_unitary(4, 152)));
}
