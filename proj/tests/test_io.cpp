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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "slocc/choi.hpp"
#include "slocc/gates.hpp"
#include "slocc/json_io.hpp"
#include "slocc/linalg.hpp"

using namespace slocc;
using nlohmann::json;
using slocc_test::check_close;

TEST_CASE("tensor JSON roundtrip is exact") {
  Rng rng(701);
  ComplexTensor t({3, 2});
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  ComplexTensor back = tensor_from_json(tensor_to_json(t));
  REQUIRE(back.shape() == t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(back[i] == t[i]);
}

TEST_CASE("gate JSON roundtrip preserves structure and flags") {
  GateDescriptor g = gates::xx(0.4);
  json j = gate_to_json(g);
  CHECK(j["unitary"] == true);
  CHECK(j["parties"] == json::array({"A", "B"}));
  CHECK(j["local_dims"] == json::array({2, 2}));
  GateDescriptor back = gate_from_json(j);
  check_close(back.matrix, g.matrix, 0.0);
  CHECK(back.structure.same_dims(g.structure));
  CHECK(back.unitary);

  // Non-unitary operators carry unitary=false and skip the unitarity check.
  ComplexTensor proj({4, 4});
  proj[0] = 1.0;
  json pj = gate_to_json(GateDescriptor(proj, PartyStructure::qudits(2, 2),
                                        false));
  CHECK(pj["unitary"] == false);
  GateDescriptor pback = gate_from_json(pj);
  CHECK_FALSE(pback.unitary);
}

TEST_CASE("gate entries may be given flat") {
  json j = {{"shape", json::array({4, 4})},
            {"parties", {"A", "B"}},
            {"local_dims", {2, 2}}};
  json entries = json::array();
  GateDescriptor cnot = gates::cnot();
  for (std::size_t i = 0; i < 16; ++i)
    entries.push_back({cnot.matrix[i].real(), cnot.matrix[i].imag()});
  j["entries"] = entries;
  GateDescriptor g = gate_from_json(j);
  check_close(g.matrix, cnot.matrix, 0.0);
  CHECK(g.unitary);  // defaults to true
}

TEST_CASE("state JSON roundtrip") {
  PureState s = gates::ghz3();
  json j = state_to_json(s);
  CHECK(j["parties"] == json::array({"A", "B", "C"}));
  PureState back = state_from_json(j);
  check_close(back.vector, s.vector, 0.0);
  CHECK(back.structure.same_dims(s.structure));

  // Multi-slot parties serialize as repeated labels.
  PureState dual = choi_state(gates::cnot()).normalized_state();
  json dj = state_to_json(dual);
  CHECK(dj["parties"] == json::array({"A", "A", "B", "B"}));
  PureState dback = state_from_json(dj);
  CHECK(dback.structure.num_parties() == 2);
  CHECK(dback.structure.slots_of_party(0) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("choi_to_json records the dual state and its norm") {
  ChoiState c = choi_state(gates::cnot());
  json j = choi_to_json(c);
  CHECK(j["norm"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["parties"].size() == 4);
  CHECK(j["entries"].size() == 16);
}

TEST_CASE("malformed JSON inputs raise InvalidInput") {
  // Missing fields.
  CHECK_THROWS_AS(tensor_from_json(json{{"shape", {2, 2}}}), InvalidInput);
  CHECK_THROWS_AS(tensor_from_json(json{{"entries", json::array()}}),
                  InvalidInput);

  // Entry arity: entries must be [re, im] pairs.
  json bad = {{"shape", {2}}, {"entries", {{1.0}, {0.0}}}};
  CHECK_THROWS_AS(tensor_from_json(bad), InvalidInput);

  // Shape/entry count mismatch.
  json mismatch = {{"shape", {3}}, {"entries", {{1.0, 0.0}, {0.0, 0.0}}}};
  CHECK_THROWS_AS(tensor_from_json(mismatch), InvalidInput);

  // Unnormalized state.
  json unnorm = {{"shape", {2}},
                 {"entries", {{2.0, 0.0}, {0.0, 0.0}}},
                 {"parties", {"A"}},
                 {"local_dims", {2}}};
  CHECK_THROWS_AS(state_from_json(unnorm), InvalidInput);

  // parties/local_dims length mismatch.
  json lenmix = {{"shape", {4}},
                 {"entries", {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}},
                 {"parties", {"A", "B"}},
                 {"local_dims", {2, 2, 2}}};
  CHECK_THROWS_AS(state_from_json(lenmix), InvalidInput);

  // A party's slots must be adjacent.
  json split = {{"shape", {8}},
                {"entries",
                 {{1.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0},
                  {0.0, 0.0}}},
                {"parties", {"A", "B", "A"}},
                {"local_dims", {2, 2, 2}}};
  CHECK_THROWS_AS(state_from_json(split), InvalidInput);

  // A non-unitary matrix with unitary=true must be rejected.
  ComplexTensor notu({4, 4});
  notu[0] = 2.0;
  json badgate = gate_to_json(
      GateDescriptor(notu, PartyStructure::qudits(2, 2), false));
  badgate["unitary"] = true;
  CHECK_THROWS_AS(gate_from_json(badgate), InvalidInput);
}

TEST_CASE("load_json_file reports missing and unparseable files") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/nowhere.json"), InvalidInput);

  std::string path =
      (std::filesystem::temp_directory_path() / "slocc_bad.json").string();
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_json_file(path), InvalidInput);
  std::remove(path.c_str());
}

TEST_CASE("save/load roundtrip through a temporary file") {
  std::string path =
      (std::filesystem::temp_directory_path() / "slocc_gate.json").string();
  GateDescriptor g = gates::cnot();
  save_json_file(path, gate_to_json(g));
  GateDescriptor back = gate_from_json(load_json_file(path));
  check_close(back.matrix, g.matrix, 0.0);
  std::remove(path.c_str());
}
