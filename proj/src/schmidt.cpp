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

#include "slocc/schmidt.hpp"

#include <cmath>

#include "slocc/linalg.hpp"

namespace slocc {

SchmidtData schmidt_decompose(const PureState& psi,
                              std::span<const std::size_t> row_slots,
                              double tol) {
  ComplexTensor m =
      bipartition_matrix(psi.vector, row_slots, psi.structure.slot_dims());
  SvdResult s = svd(m);

  SchmidtData out;
  out.tolerance_used = tol;
  out.rank = rank_from_singular_values(s.singular_values, tol);
  std::size_t k = s.singular_values.size();
  out.coefficients.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    out.coefficients[i] = s.singular_values[i] * s.singular_values[i];
  out.left_basis = s.left;
  // psi = sum_i s_i |u_i>|conj(v_i)>: the right kets are the conjugated
  // columns of the SVD's right factor.
  out.right_basis = s.right.conjugate();
  return out;
}

std::size_t schmidt_number(const PureState& psi,
                           std::span<const std::size_t> row_slots, double tol) {
  ComplexTensor m =
      bipartition_matrix(psi.vector, row_slots, psi.structure.slot_dims());
  return rank_from_singular_values(svd(m).singular_values, tol);
}

double entanglement_entropy(const PureState& psi,
                            std::span<const std::size_t> row_slots) {
  SchmidtData s = schmidt_decompose(psi, row_slots);
  double h = 0.0;
  for (double lam : s.coefficients)
    if (lam > 1e-15) h -= lam * std::log2(lam);
  return h;
}

std::vector<std::size_t> first_party_slots(const PartyStructure& s) {
  return s.slots_of_party(0);
}

std::size_t operator_schmidt_rank(const GateDescriptor& g, double tol) {
  ComplexTensor r = reshuffle_operator(g.matrix, g.structure);
  return rank_from_singular_values(svd(r).singular_values, tol);
}

GateDescriptor gate_tensor_power(const GateDescriptor& g, unsigned copies) {
  if (g.structure.num_parties() != 2)
    throw InvalidInput("gate_tensor_power: needs a two-party gate");
  if (copies == 0 || copies > 4)
    throw InvalidInput("gate_tensor_power: dense construction supports 1..4 copies");
  std::size_t da = g.structure.slot_dims()[0];
  std::size_t db = g.structure.slot_dims()[1];

  ComplexTensor m = g.matrix;
  for (unsigned c = 1; c < copies; ++c) m = kron(m, g.matrix);

  // kron orders slots copy-major [A B A' B' ...]; regroup party-major
  // [A A' ... B B' ...] so each party holds its copies contiguously.
  std::vector<std::size_t> dims, perm;
  for (unsigned c = 0; c < copies; ++c) {
    dims.push_back(da);
    dims.push_back(db);
  }
  for (unsigned c = 0; c < copies; ++c) perm.push_back(2 * c);
  for (unsigned c = 0; c < copies; ++c) perm.push_back(2 * c + 1);
  m = operator_permute_slots(m, perm, dims);

  std::size_t da_total = 1, db_total = 1;
  for (unsigned c = 0; c < copies; ++c) da_total *= da, db_total *= db;
  PartyStructure s({"A", "B"}, {{da_total}, {db_total}});
  return {std::move(m), std::move(s), g.unitary};
}

std::uint64_t multicopy_schmidt_number(const GateDescriptor& g, unsigned copies,
                                       double tol) {
  if (g.structure.num_parties() != 2)
    throw InvalidInput("multicopy_schmidt_number: needs a two-party gate");
  if (copies == 0)
    throw InvalidInput("multicopy_schmidt_number: copies must be positive");

  std::uint64_t r = operator_schmidt_rank(g, tol);
  std::uint64_t result = 1;
  for (unsigned c = 0; c < copies; ++c) {
    if (r != 0 && result > UINT64_MAX / r)
      throw Error("multicopy_schmidt_number: rank overflows 64-bit range");
    result *= r;
  }

  // The rank is multiplicative across copies; for small copy counts confirm
  // against the explicitly constructed tensor power's dual state.
  if (copies <= 2) {
    GateDescriptor power = gate_tensor_power(g, copies);
    ChoiState dual = choi_state(power);
    PureState normalized = dual.normalized_state();
    auto rows = first_party_slots(normalized.structure);
    std::uint64_t direct = schmidt_number(normalized, rows, tol);
    if (direct != result)
      throw NumericalFailure(
          "multicopy_schmidt_number: explicit construction disagrees with "
          "the multiplicative rank");
  }
  return result;
}

}  // namespace slocc
