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

#include "slocc/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace slocc {

namespace {

nlohmann::json entries_to_json(const ComplexTensor& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Complex& z : t.data())
    entries.push_back({z.real(), z.imag()});
  return entries;
}

void structure_to_json(const PartyStructure& s, nlohmann::json& j) {
  std::vector<std::string> parties;
  for (std::size_t slot = 0; slot < s.num_slots(); ++slot)
    parties.push_back(s.parties()[s.slot_party(slot)]);
  j["parties"] = parties;
  j["local_dims"] = s.slot_dims();
}

PartyStructure structure_from_json(const nlohmann::json& j) {
  auto parties = j.at("parties").get<std::vector<std::string>>();
  auto dims = j.at("local_dims").get<std::vector<std::size_t>>();
  if (parties.size() != dims.size())
    throw InvalidInput("json: parties and local_dims disagree in length");
  if (parties.empty()) throw InvalidInput("json: empty party list");

  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> dims_by_party;
  for (std::size_t slot = 0; slot < parties.size(); ++slot) {
    if (labels.empty() || labels.back() != parties[slot]) {
      for (const std::string& seen : labels)
        if (seen == parties[slot])
          throw InvalidInput("json: party \"" + parties[slot] +
                             "\" owns non-adjacent slots");
      labels.push_back(parties[slot]);
      dims_by_party.emplace_back();
    }
    dims_by_party.back().push_back(dims[slot]);
  }
  return {std::move(labels), std::move(dims_by_party)};
}

}  // namespace

nlohmann::json tensor_to_json(const ComplexTensor& t) {
  return {{"shape", t.shape()}, {"entries", entries_to_json(t)}};
}

ComplexTensor tensor_from_json(const nlohmann::json& j) {
  try {
    auto shape = j.at("shape").get<std::vector<std::size_t>>();
    const nlohmann::json& entries = j.at("entries");
    if (!entries.is_array()) throw InvalidInput("json: entries must be a list");
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const nlohmann::json& e : entries) {
      if (!e.is_array() || e.size() != 2)
        throw InvalidInput("json: each entry must be a [re, im] pair");
      data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return {std::move(shape), std::move(data)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("json: malformed tensor: ") + e.what());
  }
}

nlohmann::json gate_to_json(const GateDescriptor& g) {
  nlohmann::json j = tensor_to_json(g.matrix);
  structure_to_json(g.structure, j);
  j["unitary"] = g.unitary;
  return j;
}

GateDescriptor gate_from_json(const nlohmann::json& j) {
  try {
    ComplexTensor m = tensor_from_json(j);
    PartyStructure s = structure_from_json(j);
    bool unitary = j.value("unitary", true);
    if (m.ndim() == 1) {
      // Accept flat entry lists for square matrices.
      std::size_t d = s.total_dim();
      m = m.reshaped({d, d});
    }
    return {std::move(m), std::move(s), unitary};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("json: malformed gate: ") + e.what());
  }
}

nlohmann::json state_to_json(const PureState& s) {
  nlohmann::json j = tensor_to_json(s.vector);
  structure_to_json(s.structure, j);
  return j;
}

PureState state_from_json(const nlohmann::json& j) {
  try {
    ComplexTensor v = tensor_from_json(j);
    PartyStructure s = structure_from_json(j);
    return {std::move(v), std::move(s)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("json: malformed state: ") + e.what());
  }
}

nlohmann::json choi_to_json(const ChoiState& c) {
  nlohmann::json j = tensor_to_json(c.vector);
  structure_to_json(c.structure, j);
  j["norm"] = c.norm;
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path);
}

}  // namespace slocc
