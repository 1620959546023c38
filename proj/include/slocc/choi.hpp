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

#include "slocc/state.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

/// Maximally entangled state (1/sqrt(d)) sum_i |i>|i> held by a single party
/// "A" as the slot pair (A1, A2).  Requires d >= 2.
PureState mes(std::size_t d);

/// Qubit Bell basis |Phi_i> = (sigma_i (x) I) |Phi_0>, i in 0..3, with
/// |Phi_0> = (|00> + |11>)/sqrt(2).
PureState bell_state(std::size_t i);

/// The dual state of a multi-party operator: apply the operator to the first
/// slot of one maximally entangled pair per party.  For an operator on
/// parties A, B, ... (one d-level slot each) the result lives on the doubled
/// structure with slot order [A1 A2 B1 B2 ...]; the operator acts on the
/// "1" slots.  The vector keeps its natural norm: unit for unitaries,
/// sqrt(tr(O^dagger O)) / d^(N/2) in general.
struct ChoiState {
  ComplexTensor vector;
  PartyStructure structure;
  double norm;

  /// The same vector rescaled to unit norm (errors if norm is ~0).
  PureState normalized_state() const;
};

ChoiState choi_state(const GateDescriptor& g);

/// Probabilistic gate application by entanglement swapping.  Wiring, per
/// party X (all slots d-dimensional):
///
///       X1 ----------------------- output (gate already applied here)
///             |Psi> (dual state)
///       X2 ---------.
///                    >-- projected onto |Phi_0><Phi_0|  (Bell measurement)
///       X3 ---------'
///             rho_in (input state, one X3 slot per party)
///
/// Full slot order [A1 A2 A3 B1 B2 B3 ...].  Projecting every (X2, X3) pair
/// onto the maximally entangled state teleports the input into the gate's
/// dual state; the surviving X1 slots carry (O rho O^dagger)/tr(...).
/// The contraction is exact (dense algebra, no sampling).
///
/// Returns the normalized output state on the X1 slots and the success
/// probability p = tr(O rho_in O^dagger) / d^(2N)  (= 1/d^(2N) for unitary
/// O and normalized rho_in).
struct ImplementResult {
  ComplexTensor rho_out;
  double probability;
};

ImplementResult implement_via_state(const ChoiState& psi,
                                    const ComplexTensor& rho_in);

}  // namespace slocc
