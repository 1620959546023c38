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
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "helpers.hpp"
#include "slocc/cartan.hpp"
#include "slocc/choi.hpp"
#include "slocc/gates.hpp"
#include "slocc/linalg.hpp"
#include "slocc/schmidt.hpp"

using namespace slocc;
using slocc_test::check_close;
using slocc_test::det2;
using slocc_test::haar1;
using slocc_test::naive_matmul;

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

void check_mu(const std::array<double, 3>& got,
              const std::array<double, 3>& want, double tol = 1e-9) {
  for (int k = 0; k < 3; ++k) CHECK(std::abs(got[k] - want[k]) < tol);
}

bool in_chamber(const std::array<double, 3>& mu) {
  bool ordered = kPi4 + 1e-12 >= mu[0] && mu[0] + 1e-12 >= mu[1] &&
                 mu[1] + 1e-12 >= std::abs(mu[2]);
  bool wall = std::abs(mu[0] - kPi4) > 1e-12 || mu[2] >= -1e-12;
  return ordered && wall;
}

}  // namespace

TEST_CASE("mu invariants of the reference gates (frozen values)") {
  check_mu(mu_invariants(gates::identity_gate().matrix), {0.0, 0.0, 0.0});
  check_mu(mu_invariants(gates::cnot().matrix), {kPi4, 0.0, 0.0});
  check_mu(mu_invariants(gates::swap_gate().matrix), {kPi4, kPi4, kPi4});
  check_mu(mu_invariants(gates::xx(0.3).matrix), {0.3, 0.0, 0.0});
  check_mu(mu_invariants(gates::xxyy(0.2).matrix), {0.2, 0.2, 0.0});
  check_mu(mu_invariants(gates::xxyy(kPi4).matrix), {kPi4, kPi4, 0.0});
}

TEST_CASE("mu_invariants is idempotent on canonical gates") {
  for (std::array<double, 3> mu :
       {std::array<double, 3>{0.7, 0.5, 0.3},
        std::array<double, 3>{0.7, 0.5, -0.3},
        std::array<double, 3>{0.4, 0.4, 0.1},
        std::array<double, 3>{kPi4, 0.3, 0.2}}) {
    check_mu(mu_invariants(canonical_gate(mu)), mu);
  }
}

TEST_CASE("cartan_decompose reconstructs random unitaries") {
  for (std::uint64_t s = 401; s < 451; ++s) {
    ComplexTensor u = haar_random_unitary(4, s);
    CartanParams p = cartan_decompose(u);
    CHECK(max_abs_diff(reconstruct(p), u) < 1e-8);
    CHECK(in_chamber(p.mu));
    // Local factors are special unitaries.
    for (const ComplexTensor* f :
         {&p.left_a, &p.left_b, &p.right_a, &p.right_b}) {
      CHECK(is_unitary(*f, 1e-9));
      CHECK(std::abs(det2(*f) - Complex(1.0)) < 1e-9);
    }
    CHECK(std::abs(std::abs(p.global_phase) - 1.0) < 1e-10);
  }
}

TEST_CASE("mu_invariants equals the decomposition's mu bit for bit") {
  // The invariants routine must replay exactly the canonicalization choices
  // the full decomposition makes.
  for (std::uint64_t s = 461; s < 481; ++s) {
    ComplexTensor u = haar_random_unitary(4, s);
    std::array<double, 3> fast = mu_invariants(u);
    std::array<double, 3> full = cartan_decompose(u).mu;
    CHECK(fast[0] == full[0]);
    CHECK(fast[1] == full[1]);
    CHECK(fast[2] == full[2]);
  }
}

TEST_CASE("mu is invariant under local dressing and global phase") {
  for (std::uint64_t s : {491, 492, 493, 494, 495}) {
    ComplexTensor u = haar_random_unitary(4, s);
    std::array<double, 3> base = mu_invariants(u);

    ComplexTensor dressed = naive_matmul(
        kron(haar1(s + 100), haar1(s + 200)),
        naive_matmul(u, kron(haar1(s + 300), haar1(s + 400))));
    check_mu(mu_invariants(dressed), base, 1e-9);

    ComplexTensor phased = u;
    phased *= std::exp(Complex(0, 0.7));
    check_mu(mu_invariants(phased), base, 1e-9);
  }
}

TEST_CASE("choi_coefficients against a direct Bell-projection oracle") {
  // Project the dual state of canonical_gate(mu) onto |Phi_k>|Phi_k> by
  // hand and compare with the closed form.
  for (std::array<double, 3> mu :
       {std::array<double, 3>{0.5, 0.3, 0.1},
        std::array<double, 3>{kPi4, kPi4, kPi4},
        std::array<double, 3>{0.2, 0.0, 0.0}}) {
    GateDescriptor g(canonical_gate(mu), PartyStructure::qudits(2, 2));
    ChoiState c = choi_state(g);
    std::array<Complex, 4> a = choi_coefficients(mu);
    for (std::size_t k = 0; k < 4; ++k) {
      // <Phi_k|_A <Phi_k|_B  psi: party A holds slots 0,1 and party B holds
      // slots 2,3 of the dual state.
      PureState phi = bell_state(k);
      Complex amp = 0.0;
      for (std::size_t ia = 0; ia < 4; ++ia)
        for (std::size_t ib = 0; ib < 4; ++ib)
          amp += std::conj(phi.vector[ia]) * std::conj(phi.vector[ib]) *
                 c.vector[ia * 4 + ib];
      CHECK(std::abs(amp - a[k]) < 1e-12);
    }
    double total = 0.0;
    for (const Complex& ak : a) total += std::norm(ak);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("|choi_coefficients|^2 are the dual state's Schmidt weights") {
  std::vector<std::size_t> rows{0, 1};
  for (std::uint64_t s : {501, 502, 503, 504}) {
    ComplexTensor u = haar_random_unitary(4, s);
    std::array<double, 3> mu = mu_invariants(u);
    std::array<Complex, 4> a = choi_coefficients(mu);
    std::vector<double> weights;
    for (const Complex& ak : a) weights.push_back(std::norm(ak));
    std::sort(weights.rbegin(), weights.rend());

    GateDescriptor g(u, PartyStructure::qudits(2, 2));
    SchmidtData sd = schmidt_decompose(choi_state(g).normalized_state(), rows);
    REQUIRE(sd.coefficients.size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(weights[k] - sd.coefficients[k]) < 1e-8);
  }
}

TEST_CASE("rank_from_mu equals the canonical gate's realignment rank") {
  for (std::array<double, 3> mu :
       {std::array<double, 3>{0.0, 0.0, 0.0},
        std::array<double, 3>{kPi4, 0.0, 0.0},
        std::array<double, 3>{0.3, 0.0, 0.0},
        std::array<double, 3>{0.5, 0.2, 0.0},
        std::array<double, 3>{kPi4, kPi4, kPi4},
        std::array<double, 3>{0.6, 0.4, 0.2}}) {
    GateDescriptor g(canonical_gate(mu), PartyStructure::qudits(2, 2));
    CHECK(rank_from_mu(mu) == operator_schmidt_rank(g));
  }
}

TEST_CASE("two_qubit_class on the reference gates") {
  CHECK(two_qubit_class(gates::identity_gate().matrix) ==
        TwoQubitClass::Local);
  CHECK(two_qubit_class(kron(haar1(511), haar1(512))) ==
        TwoQubitClass::Local);
  CHECK(two_qubit_class(gates::cnot().matrix) == TwoQubitClass::CnotClass);
  CHECK(two_qubit_class(gates::xx(0.3).matrix) == TwoQubitClass::CnotClass);
  CHECK(two_qubit_class(gates::swap_gate().matrix) == TwoQubitClass::SwapClass);
  CHECK(two_qubit_class(gates::xxyy(0.2).matrix) == TwoQubitClass::SwapClass);
  CHECK(std::string(to_string(TwoQubitClass::CnotClass)) == "CnotClass");
}

TEST_CASE("no mu triple yields exactly three dual coefficients") {
  // Fine grid over the chamber: the number of (near-)vanishing coefficients
  // is never exactly one, i.e. no configuration has exactly three nonzero
  // coefficients.  (Since sum |a_k|^2 = 1, the largest coefficient is at
  // least 1/2, so an absolute cutoff is safe.)
  const int n = 14;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = -j; k <= j; ++k) {
        std::array<double, 3> mu{kPi4 * i / n, kPi4 * j / n, kPi4 * k / n};
        std::array<Complex, 4> a = choi_coefficients(mu);
        int tiny = 0;
        for (const Complex& ak : a)
          if (std::abs(ak) < 1e-9) ++tiny;
        CHECK(tiny != 1);
        CHECK(rank_from_mu(mu) != 3);
      }
}

TEST_CASE("cartan_decompose validates its input") {
  CHECK_THROWS_AS(cartan_decompose(haar_random_unitary(3, 521)), InvalidInput);
  ComplexTensor nonunitary({4, 4});
  nonunitary[0] = 2.0;
  CHECK_THROWS_AS(cartan_decompose(nonunitary), InvalidInput);
}
