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

#include "slocc/choi.hpp"

#include <cmath>

#include "slocc/gates.hpp"
#include "slocc/linalg.hpp"

namespace slocc {

PureState mes(std::size_t d) {
  if (d < 2) throw InvalidInput("mes: local dimension must be at least 2");
  ComplexTensor v({d * d});
  double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = a;
  return {std::move(v), PartyStructure({"A"}, {{d, d}})};
}

PureState bell_state(std::size_t i) {
  if (i > 3) throw InvalidInput("bell_state: index must be 0..3");
  PureState phi = mes(2);
  if (i == 0) return phi;
  std::size_t slots[] = {0};
  ComplexTensor v =
      apply_to_slots(gates::pauli(i), slots, phi.vector, phi.structure.slot_dims());
  return {std::move(v), phi.structure};
}

ChoiState choi_state(const GateDescriptor& g) {
  PartyStructure doubled = g.structure.choi_doubled();
  std::size_t n = g.structure.num_parties();

  // Product of one maximally entangled pair per party, slots [X1 X2 ...].
  ComplexTensor v({1});
  v[0] = 1.0;
  double norm_factor = 1.0;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t d = g.structure.slot_dims()[p];
    ComplexTensor pair({d * d});
    for (std::size_t i = 0; i < d; ++i) pair[i * d + i] = 1.0;
    norm_factor *= std::sqrt(static_cast<double>(d));
    v = kron(v.reshaped({v.size(), 1}), pair.reshaped({d * d, 1}))
            .reshaped({v.size() * d * d});
  }
  v *= Complex{1.0 / norm_factor, 0.0};

  // Apply the operator to the X1 slots (slots 0, 2, 4, ...).
  std::vector<std::size_t> act_slots;
  for (std::size_t p = 0; p < n; ++p) act_slots.push_back(2 * p);
  ComplexTensor applied =
      apply_to_slots(g.matrix, act_slots, v, doubled.slot_dims());

  ChoiState out{std::move(applied), std::move(doubled), 0.0};
  out.norm = out.vector.norm();
  return out;
}

PureState ChoiState::normalized_state() const {
  return PureState::normalized(vector, structure);
}

ImplementResult implement_via_state(const ChoiState& psi,
                                    const ComplexTensor& rho_in) {
  const PartyStructure& doubled = psi.structure;
  std::size_t n = doubled.num_parties();

  // Per-party local dimension (the doubled structure has the pair (X1, X2)
  // with equal dims).
  std::vector<std::size_t> local(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto slots = doubled.slots_of_party(p);
    if (slots.size() != 2 ||
        doubled.slot_dims()[slots[0]] != doubled.slot_dims()[slots[1]])
      throw InvalidInput("implement_via_state: not a dual-state structure");
    local[p] = doubled.slot_dims()[slots[0]];
  }

  std::size_t dim_in = 1;
  for (std::size_t d : local) dim_in *= d;
  if (!rho_in.is_square_matrix() || rho_in.rows() != dim_in)
    throw InvalidInput("implement_via_state: input state has wrong dimension");

  // Full wiring [X1 X2 X3] per party, flat order [A1 A2 A3 B1 B2 B3 ...].
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p < n; ++p) {
    dims.push_back(local[p]);
    dims.push_back(local[p]);
    dims.push_back(local[p]);
  }
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;

  // Omega = |Psi><Psi| on the (X1, X2) slots  (x)  rho_in on the X3 slots,
  // assembled entry by entry in the interleaved slot order.
  std::vector<std::size_t> psi_dims = doubled.slot_dims();
  std::vector<std::size_t> in_dims(local);
  ComplexTensor omega({total, total});
  std::vector<std::size_t> fr(dims.size()), fc(dims.size());
  std::vector<std::size_t> pr(2 * n), pc(2 * n), ir(n), ic(n);
  for (std::size_t r = 0; r < total; ++r) {
    unflatten_index(r, dims, fr);
    for (std::size_t p = 0; p < n; ++p) {
      pr[2 * p] = fr[3 * p];
      pr[2 * p + 1] = fr[3 * p + 1];
      ir[p] = fr[3 * p + 2];
    }
    Complex psi_r = psi.vector[flatten_index(pr, psi_dims)];
    std::size_t in_r = flatten_index(ir, in_dims);
    if (psi_r == Complex{}) continue;  // whole row vanishes
    for (std::size_t c = 0; c < total; ++c) {
      unflatten_index(c, dims, fc);
      for (std::size_t p = 0; p < n; ++p) {
        pc[2 * p] = fc[3 * p];
        pc[2 * p + 1] = fc[3 * p + 1];
        ic[p] = fc[3 * p + 2];
      }
      Complex val = psi_r * std::conj(psi.vector[flatten_index(pc, psi_dims)]) *
                    rho_in[in_r * dim_in + flatten_index(ic, in_dims)];
      omega[r * total + c] = val;
    }
  }

  // Projector: per party, identity on X1 and the maximally entangled
  // projector on (X2, X3); kron respects the flat slot order.
  ComplexTensor proj({1, 1});
  proj[0] = 1.0;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t d = local[p];
    ComplexTensor pair({d * d});
    double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) pair[i * d + i] = a;
    ComplexTensor p_mes = outer(pair, pair);
    proj = kron(proj, kron(ComplexTensor::identity(d), p_mes));
  }

  ComplexTensor projected = matmul(matmul(proj, omega), proj);
  Complex tr = projected.trace();
  double p_success = tr.real();
  if (p_success <= 1e-300)
    throw NumericalFailure("implement_via_state: success probability is zero");

  // Keep the X1 slots (0, 3, 6, ...), trace out the measured pairs.
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < n; ++p) keep.push_back(3 * p);
  ComplexTensor rho_out = partial_trace(projected, keep, dims);
  Complex tr_out = rho_out.trace();
  rho_out *= Complex{1.0 / tr_out.real(), 0.0};
  return {std::move(rho_out), p_success};
}

}  // namespace slocc
