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
#include <span>

#include "slocc/choi.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Schmidt decomposition data across a bipartition.  `coefficients` are the
/// squared singular values (they sum to 1 for a normalized state), sorted
/// descending; the state equals sum_i sqrt(coefficients[i]) |left_i>|right_i>
/// with |left_i>/|right_i> the columns of the two bases.
///
/// `rank` counts coefficients by the relative singular-value rule:
/// sqrt(lambda_i) > tolerance_used * sqrt(lambda_max).
struct SchmidtData {
  std::vector<double> coefficients;
  ComplexTensor left_basis;
  ComplexTensor right_basis;
  std::size_t rank = 0;
  double tolerance_used = kDefaultRankTol;
};

/// Schmidt decomposition of `psi` across row_slots | complement.
SchmidtData schmidt_decompose(const PureState& psi,
                              std::span<const std::size_t> row_slots,
                              double tol = kDefaultRankTol);

/// Schmidt rank across the bipartition (see SchmidtData for the rule).
std::size_t schmidt_number(const PureState& psi,
                           std::span<const std::size_t> row_slots,
                           double tol = kDefaultRankTol);

/// Entanglement entropy -sum lambda_i log2 lambda_i across the bipartition.
double entanglement_entropy(const PureState& psi,
                            std::span<const std::size_t> row_slots);

/// Convenience: the slots belonging to the structure's first party — the
/// natural bipartition for two-party states and dual states.
std::vector<std::size_t> first_party_slots(const PartyStructure& s);

/// Operator Schmidt rank of a two-party operator: the rank of its
/// row/column realignment.  Always equals the Schmidt rank of the operator's
/// dual state across the A|B cut (the two computations are independent
/// routes to the same invariant; tests enforce the equality).
std::size_t operator_schmidt_rank(const GateDescriptor& g,
                                  double tol = kDefaultRankTol);

/// The two-party gate g (x) g (x) ... (copies times), regrouped so each
/// party holds all its copy slots contiguously: parties A, B with local
/// dimension d^copies.  Supported for small copy counts (dense).
GateDescriptor gate_tensor_power(const GateDescriptor& g, unsigned copies);

/// Schmidt rank of the dual state of g^(x copies).  The rank is exactly
/// multiplicative, so this is rank(g)^copies; for copies <= 2 the value is
/// additionally verified against an explicit construction of the tensor
/// power's dual state (NumericalFailure on mismatch).  Errors on overflow
/// past the uint64 range.
std::uint64_t multicopy_schmidt_number(const GateDescriptor& g,
                                       unsigned copies,
                                       double tol = kDefaultRankTol);

}  // namespace slocc
