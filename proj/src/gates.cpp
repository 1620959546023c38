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

#include "slocc/gates.hpp"

#include <cmath>
#include <numbers>

#include "slocc/classify.hpp"

namespace slocc::gates {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexTensor two_qubit(const std::array<Complex, 16>& entries) {
  return ComplexTensor({4, 4}, std::vector<Complex>(entries.begin(), entries.end()));
}

}  // namespace

ComplexTensor pauli(std::size_t k) {
  switch (k) {
    case 0:
      return ComplexTensor::identity(2);
    case 1:
      return ComplexTensor({2, 2}, {0, 1, 1, 0});
    case 2:
      return ComplexTensor({2, 2}, {0, -kI, kI, 0});
    case 3:
      return ComplexTensor({2, 2}, {1, 0, 0, -1});
    default:
      throw InvalidInput("pauli: index must be 0..3");
  }
}

ComplexTensor pauli_rotation(std::size_t k, double theta) {
  if (k < 1 || k > 3) throw InvalidInput("pauli_rotation: index must be 1..3");
  ComplexTensor out = ComplexTensor::identity(2);
  out *= Complex{std::cos(theta), 0.0};
  ComplexTensor s = pauli(k);
  s *= -kI * std::sin(theta);
  out += s;
  return out;
}

GateDescriptor identity_gate() {
  return {ComplexTensor::identity(4), PartyStructure::qudits(2, 2)};
}

GateDescriptor cnot() {
  return {two_qubit({1, 0, 0, 0,  //
                     0, 1, 0, 0,  //
                     0, 0, 0, 1,  //
                     0, 0, 1, 0}),
          PartyStructure::qudits(2, 2)};
}

GateDescriptor swap_gate() {
  return {two_qubit({1, 0, 0, 0,  //
                     0, 0, 1, 0,  //
                     0, 1, 0, 0,  //
                     0, 0, 0, 1}),
          PartyStructure::qudits(2, 2)};
}

namespace {

// exp(-i t P (x) P ... ) for an N-fold Pauli product: P^2 = 1 termwise, so
// the exponential is cos(t) - i sin(t) * (P (x) P ...).
ComplexTensor pauli_product_exponential(std::size_t k, std::size_t n_factors,
                                        double t) {
  ComplexTensor prod = pauli(k);
  for (std::size_t f = 1; f < n_factors; ++f) prod = kron(prod, pauli(k));
  ComplexTensor out = ComplexTensor::identity(prod.rows());
  out *= Complex{std::cos(t), 0.0};
  prod *= -kI * std::sin(t);
  out += prod;
  return out;
}

}  // namespace

GateDescriptor xx(double t) {
  return {pauli_product_exponential(1, 2, t), PartyStructure::qudits(2, 2)};
}

GateDescriptor xxyy(double t) {
  // sigma_x sigma_x and sigma_y sigma_y commute, so the exponential factors.
  ComplexTensor m = matmul(pauli_product_exponential(1, 2, t),
                           pauli_product_exponential(2, 2, t));
  return {std::move(m), PartyStructure::qudits(2, 2)};
}

GateDescriptor xxx(double t) {
  return {pauli_product_exponential(1, 3, t), PartyStructure::qudits(3, 2)};
}

GateDescriptor uw(double t) {
  ComplexTensor w = w3().vector;
  Complex gamma = std::exp(-kI * t) - 1.0;
  ComplexTensor m = outer(w, w);
  m *= gamma;
  m += ComplexTensor::identity(8);
  return {std::move(m), PartyStructure::qudits(3, 2)};
}

PureState ghz3() {
  ComplexTensor v({8});
  v[0] = v[7] = 1.0 / std::numbers::sqrt2;
  return {std::move(v), PartyStructure::qudits(3, 2)};
}

PureState w3() {
  ComplexTensor v({8});
  double a = 1.0 / std::sqrt(3.0);
  v[0b001] = v[0b010] = v[0b100] = a;
  return {std::move(v), PartyStructure::qudits(3, 2)};
}

PureState ghz4() {
  ComplexTensor v({16});
  v[0] = v[15] = 1.0 / std::numbers::sqrt2;
  return {std::move(v), PartyStructure::qudits(4, 2)};
}

PureState basis_state(const PartyStructure& s,
                      std::span<const std::size_t> digits) {
  ComplexTensor v({s.total_dim()});
  v[flatten_index(digits, s.slot_dims())] = 1.0;
  return {std::move(v), s};
}

namespace {

// "name" or "name(number)".
bool parse_call(const std::string& spec, std::string& name, double& arg,
                bool& has_arg) {
  auto open = spec.find('(');
  if (open == std::string::npos) {
    name = spec;
    has_arg = false;
    return true;
  }
  if (spec.back() != ')') return false;
  name = spec.substr(0, open);
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  try {
    std::size_t used = 0;
    arg = std::stod(inner, &used);
    if (used != inner.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  has_arg = true;
  return true;
}

}  // namespace

std::optional<GateDescriptor> named_gate(const std::string& spec) {
  std::string name;
  double arg = 0.0;
  bool has_arg = false;
  if (!parse_call(spec, name, arg, has_arg))
    throw InvalidInput("named_gate: malformed spec '" + spec + "'");

  if (name == "identity" || name == "cnot" || name == "swap") {
    if (has_arg)
      throw InvalidInput("named_gate: '" + name + "' takes no parameter");
    if (name == "identity") return identity_gate();
    if (name == "cnot") return cnot();
    return swap_gate();
  }
  if (name == "xx" || name == "xxyy" || name == "xxx" || name == "uw" ||
      name == "family4") {
    if (!has_arg)
      throw InvalidInput("named_gate: '" + name + "' needs a parameter, e.g. '" +
                         name + "(0.3)'");
    if (name == "xx") return xx(arg);
    if (name == "xxyy") return xxyy(arg);
    if (name == "xxx") return xxx(arg);
    if (name == "uw") return uw(arg);
    return four_qubit_family_gate(arg);
  }
  return std::nullopt;
}

std::optional<PureState> named_state(const std::string& spec) {
  std::string name;
  double arg = 0.0;
  bool has_arg = false;
  if (!parse_call(spec, name, arg, has_arg))
    throw InvalidInput("named_state: malformed spec '" + spec + "'");

  if (name == "ghz3" || name == "w3" || name == "ghz4") {
    if (has_arg)
      throw InvalidInput("named_state: '" + name + "' takes no parameter");
    if (name == "ghz3") return ghz3();
    if (name == "w3") return w3();
    return ghz4();
  }
  if (name == "mes" || name == "bell") {
    if (!has_arg || arg != std::floor(arg) || arg < 0)
      throw InvalidInput("named_state: '" + name + "' needs an integer parameter");
    auto k = static_cast<std::size_t>(arg);
    if (name == "mes") return mes(k);
    return bell_state(k);
  }
  return std::nullopt;
}

}  // namespace slocc::gates
