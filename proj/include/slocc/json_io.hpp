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

#include <nlohmann/json.hpp>

#include "slocc/choi.hpp"
#include "slocc/state.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

// JSON interchange.  A tensor is
//   { "shape": [..], "entries": [[re, im], ...] }        (row-major)
// Gates and states add party metadata:
//   { ..., "parties": ["A", "B"], "local_dims": [2, 2] }
// where local_dims lists one dimension per slot in declared slot order and
// parties lists the owner label of each slot (repeated for multi-slot
// parties).  Gates also carry "unitary": true/false.

nlohmann::json tensor_to_json(const ComplexTensor& t);
ComplexTensor tensor_from_json(const nlohmann::json& j);

nlohmann::json gate_to_json(const GateDescriptor& g);
GateDescriptor gate_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j);

nlohmann::json choi_to_json(const ChoiState& c);

/// Parse a file as JSON; InvalidInput with a readable message on failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace slocc
