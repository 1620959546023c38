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

#include "slocc/state.hpp"

#include <cmath>

#include "slocc/linalg.hpp"

namespace slocc {

PureState::PureState(ComplexTensor v, PartyStructure s)
    : vector(std::move(v)), structure(std::move(s)) {
  if (vector.ndim() != 1 || vector.size() != structure.total_dim())
    throw InvalidInput("PureState: vector length does not match structure");
  if (std::abs(vector.norm() - 1.0) > kStateNormTol)
    throw InvalidInput("PureState: vector is not normalized");
}

PureState PureState::normalized(ComplexTensor v, PartyStructure s) {
  double n = v.norm();
  if (n < 1e-14) throw InvalidInput("PureState: cannot normalize a zero vector");
  v *= Complex{1.0 / n, 0.0};
  return PureState(std::move(v), std::move(s));
}

GateDescriptor::GateDescriptor(ComplexTensor m, PartyStructure s,
                               bool unitary_flag)
    : matrix(std::move(m)), structure(std::move(s)), unitary(unitary_flag) {
  std::size_t d = structure.total_dim();
  if (!matrix.is_square_matrix() || matrix.rows() != d)
    throw InvalidInput("GateDescriptor: matrix does not match structure");
  for (std::size_t slot = 0; slot < structure.num_slots(); ++slot)
    if (structure.slot_party(slot) != slot)
      throw InvalidInput("GateDescriptor: structure must have one slot per party");
  if (unitary && !is_unitary(matrix, kUnitarityTol))
    throw InvalidInput("GateDescriptor: matrix flagged unitary is not unitary");
}

}  // namespace slocc
