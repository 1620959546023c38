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

#include <array>
#include <string>

#include "slocc/state.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

/// Canonical form of a two-qubit unitary:
///
///   U = global_phase * (left_a (x) left_b)
///         * exp(-i sum_k mu[k] sigma_{k+1} (x) sigma_{k+1})
///         * (right_a (x) right_b)
///
/// with sigma_1..3 the Pauli matrices, the four local factors in SU(2), and
/// mu in the canonical chamber pi/4 >= mu[0] >= mu[1] >= |mu[2]| >= 0 (plus
/// mu[2] >= 0 whenever mu[0] = pi/4, which quotients the residual symmetry
/// of the chamber wall and makes mu unique).
struct CartanParams {
  std::array<double, 3> mu{};
  ComplexTensor left_a, left_b, right_a, right_b;
  Complex global_phase{1.0, 0.0};
};

/// Full canonical decomposition of a 4x4 unitary (two qubits).  The result
/// is validated internally: reconstruct(params) must match the input to
/// 1e-8 max-entrywise (NumericalFailure otherwise).
CartanParams cartan_decompose(const ComplexTensor& u4);
CartanParams cartan_decompose(const GateDescriptor& g);

/// Canonical interaction content mu only — the same values
/// cartan_decompose would produce, skipping local-factor extraction.
std::array<double, 3> mu_invariants(const ComplexTensor& u4);

/// exp(-i sum_k mu[k] sigma_{k+1} (x) sigma_{k+1})  (closed form).
ComplexTensor canonical_gate(const std::array<double, 3>& mu);

/// (left_a (x) left_b) * canonical_gate(mu) * (right_a (x) right_b) * phase.
ComplexTensor reconstruct(const CartanParams& p);

/// Bell-basis coefficients of the dual state of canonical_gate(mu):
/// the dual state is sum_k a_k |Phi_k>_A |Phi_k>_B with (writing
/// c_k = cos mu[k-1], s_k = sin mu[k-1])
///
///   a_0 = c1 c2 c3 - i s1 s2 s3      a_1 = c1 s2 s3 - i s1 c2 c3
///   a_2 = s1 c2 s3 - i c1 s2 c3      a_3 = s1 s2 c3 - i c1 c2 s3
///
/// sum |a_k|^2 = 1.  The |a_k| are the dual state's Schmidt coefficients.
std::array<Complex, 4> choi_coefficients(const std::array<double, 3>& mu);

/// Number of coefficients with |a_k| > tol * max |a_k|.  Takes only the
/// values 1, 2 and 4: a short algebraic argument from the coefficient
/// formulas shows that no real mu triple makes exactly three of them
/// nonzero.
std::size_t rank_from_mu(const std::array<double, 3>& mu,
                         double tol = kDefaultRankTol);

/// The three two-qubit interaction classes, keyed by dual-state Schmidt
/// rank: 1 (local, no entangling power), 2 (controlled-NOT class) and
/// 4 (SWAP class).
enum class TwoQubitClass { Local, CnotClass, SwapClass };

const char* to_string(TwoQubitClass c);

/// Classify a two-qubit unitary by its canonical mu.  NumericalFailure if
/// the coefficient count lands on the impossible value 3 (only possible
/// through a tolerance glitch).
TwoQubitClass two_qubit_class(const ComplexTensor& u4,
                              double tol = kDefaultRankTol);

}  // namespace slocc
