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

#include <string>

#include "slocc/tensor.hpp"

namespace slocc {

/// A normalized pure state over a declared party structure.  The vector is a
/// rank-1 tensor of length structure.total_dim(); its flat index decomposes
/// over the slot dimensions in declared order.
struct PureState {
  ComplexTensor vector;
  PartyStructure structure;

  /// Validates length and normalization (within kStateNormTol).
  PureState(ComplexTensor v, PartyStructure s);

  /// Rescales to unit norm, then constructs; errors on (near-)zero vectors.
  static PureState normalized(ComplexTensor v, PartyStructure s);
};

/// A multi-party operator: a square matrix over the structure's total
/// dimension, acting on one slot per party.  `unitary` is a promise checked
/// at construction (within kUnitarityTol); pass false for general operators.
struct GateDescriptor {
  ComplexTensor matrix;
  PartyStructure structure;
  bool unitary = true;

  GateDescriptor(ComplexTensor m, PartyStructure s, bool unitary_flag = true);
};

}  // namespace slocc
