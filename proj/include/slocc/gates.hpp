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

#include <optional>
#include <string>

#include "slocc/state.hpp"
#include "slocc/tensor.hpp"

namespace slocc::gates {

/// Pauli matrices; index 0 is the identity.
ComplexTensor pauli(std::size_t k);

/// exp(-i theta sigma_k) = cos(theta) - i sin(theta) sigma_k,  k in 1..3.
ComplexTensor pauli_rotation(std::size_t k, double theta);

// Named two-qubit gates (parties A, B).
GateDescriptor identity_gate();
GateDescriptor cnot();
GateDescriptor swap_gate();
/// exp(-i t sigma_x (x) sigma_x)
GateDescriptor xx(double t);
/// exp(-i t (sigma_x sigma_x + sigma_y sigma_y))
GateDescriptor xxyy(double t);

// Named three-qubit gates (parties A, B, C).
/// exp(-i t sigma_x (x) sigma_x (x) sigma_x)
GateDescriptor xxx(double t);
/// 1 + (e^{-it} - 1) |W><W|
GateDescriptor uw(double t);

// Named states.
PureState ghz3();
PureState w3();
PureState ghz4();
/// Computational basis state from a bit/dit string over the structure.
PureState basis_state(const PartyStructure& s,
                      std::span<const std::size_t> digits);

/// Parse a named gate spec: "identity", "cnot", "swap", "xx(0.3)",
/// "xxyy(0.1)", "xxx(0.25)", "uw(0.3)", "family4(0.2)".  Empty when the
/// name is unknown; InvalidInput on malformed parameters.
std::optional<GateDescriptor> named_gate(const std::string& spec);

/// Parse a named state spec: "mes(3)", "bell(1)", "ghz3", "w3", "ghz4".
std::optional<PureState> named_state(const std::string& spec);

}  // namespace slocc::gates
