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

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "slocc/choi.hpp"
#include "slocc/state.hpp"

namespace slocc {

// --- three-qubit pure-state classification ----------------------------------

/// The six invertible-local-operation classes of three qubits.
enum class ThreeQubitLabel { Product, BisepA, BisepB, BisepC, W, GHZ };

const char* to_string(ThreeQubitLabel l);

struct ThreeQubitClass {
  ThreeQubitLabel label;
  std::array<std::size_t, 3> local_ranks;  // Schmidt rank across each 1|2 cut
  double tangle;                           // 4 |hyperdeterminant|
};

/// 4 |Det(psi)| with Det the 2x2x2 hyperdeterminant: 1 on the GHZ state,
/// 0 on the W state and on every biseparable or product state; invariant
/// under local unitaries.
double three_tangle(const PureState& psi);

/// Classify a three-qubit pure state: local Schmidt ranks split off the
/// Product and biseparable classes; among fully entangled states the tangle
/// separates GHZ (tangle > tangle_tol) from W.
ThreeQubitClass classify_three_qubit(const PureState& psi,
                                     double tol = kDefaultRankTol,
                                     double tangle_tol = kTangleTol);

/// Whether a state of class `from` can be mapped to one of class `to` by
/// local operations (possibly lowering the class; never raising it, and
/// never crossing between GHZ and W).
bool three_qubit_reachable(ThreeQubitLabel from, ThreeQubitLabel to);

// --- verdicts ---------------------------------------------------------------

enum class VerdictMethod {
  BipartiteRank,       // dual-state Schmidt rank comparison
  ThreeQubitClasses,   // effective three-qubit class comparison
  FourQubitInvariant,  // invariant-ratio separation
  Identical,           // operands equal up to a global phase
  Undecidable,         // outside the implemented decision criteria
};

const char* to_string(VerdictMethod m);

/// Outcome of a simulability / generation query.  `decision` is empty when
/// the question falls outside the implemented criteria (multipartite cases
/// with no separating invariant); `witness` records the quantities the
/// decision rests on (ranks, class labels, invariant values).
struct SloccVerdict {
  std::optional<bool> decision;
  VerdictMethod method = VerdictMethod::Undecidable;
  nlohmann::json witness;
};

/// Can gate u simulate gate v under stochastic local operations with
/// classical communication, given u's dual state as the resource?
/// Bipartite gates: decided exactly by dual-state Schmidt ranks
/// (u simulates v iff rank(u) >= rank(v)).  Three-qubit gates whose dual
/// states fit in one effective qubit per party: decided by three-qubit
/// class reachability.  Four-qubit gates: refuted when the invariant ratio
/// separates the (fully entangling) dual states; otherwise undecided.
SloccVerdict can_simulate(const GateDescriptor& u, const GateDescriptor& v,
                          double tol = kDefaultRankTol);

/// Multicopy variant for bipartite gates: n copies of u against m copies of
/// v, decided by the multiplicative dual-state ranks.
SloccVerdict can_simulate_multicopy(const GateDescriptor& u, unsigned n,
                                    const GateDescriptor& v, unsigned m,
                                    double tol = kDefaultRankTol);

/// Can gate u create the target entangled state (applied once to a local
/// input, with local pre/post-processing)?  Bipartite: target Schmidt rank
/// <= dual-state rank.  Three-qubit targets: class reachability from the
/// dual state's effective class.
SloccVerdict can_generate(const GateDescriptor& u, const PureState& target,
                          double tol = kDefaultRankTol);

// --- structure reductions ---------------------------------------------------

/// If every party's marginal of the dual state has rank <= 2, rewrite the
/// state in per-party orthonormal support bases as an N-qubit state
/// (deterministic basis choice).  Empty when any marginal rank exceeds 2.
std::optional<PureState> effective_qubit_state(const ChoiState& psi,
                                               double tol = kDefaultRankTol);

/// Fixed change of local basis |Phi_0> -> |0>, |Phi_1> -> |1> applied to
/// every party's slot pair of a qubit dual state.  Errors if the state has
/// support outside those two-dimensional local subspaces.
PureState bell_subspace_state(const ChoiState& psi, double tol = 1e-9);

// --- worked demonstrations --------------------------------------------------

/// Class of the dual state of exp(-i t sigma_x^(x3)) as an effective
/// three-qubit state; GHZ for all t in (0, pi/4).  Also returns through the
/// ThreeQubitClass fields the tangle sin^2(2t).
ThreeQubitClass xxx_choi_class(double t, double tol = kDefaultRankTol);

/// The three-qubit gate 1 + (e^{-it} - 1) |W><W| applied to |001> and to
/// (|001> + |011>)/sqrt(2): one application produces a W-class state, the
/// other a GHZ-class state (for generic t), showing a single gate reaching
/// inequivalent entanglement classes.
std::pair<ThreeQubitClass, ThreeQubitClass> uw_generation_demo(double t);

// --- the four-qubit two-pair interaction family -----------------------------

/// H = sigma_x^(x4) + sigma_x sigma_x (x) 1 1 + 1 1 (x) sigma_x sigma_x
/// on qubits A, B, C, D.  H^2 = 2H + 3, so exp(-iHt) = alpha(t) + beta(t) H.
ComplexTensor four_qubit_family_hamiltonian();

/// alpha(t) = (e^{-3it} + 3 e^{it})/4,  beta(t) = (e^{-3it} - e^{it})/4.
std::pair<Complex, Complex> four_qubit_family_coefficients(double t);

/// exp(-i H t) as a four-party gate.
GateDescriptor four_qubit_family_gate(double t);

/// The gate's dual state reduced to one effective qubit per party:
/// alpha|0000> + beta(|1111> + |0011> + |1100>), normalized
/// (|alpha|^2 + 3|beta|^2 = 1 identically).
PureState four_qubit_family(double t);

/// Which 2+2 grouping of the four parties indexes the 4x4 reshape.
enum class ReshapePairing { AB_CD, AC_BD, AD_BC };

/// Degree-4 local invariants of a four-qubit state psi:
///   h_inv      = psi^T (sigma_y^(x4)) psi           (squared below)
///   reshape_det = det of the 4x4 matrix pairing two parties against the
///                 other two (default AC | BD)
///   ratio      = h_inv^2 / reshape_det
/// The ratio is invariant under all invertible local operations (both
/// quantities pick up the same product of squared local determinants), so
/// differing ratios certify inequivalent states.  When |reshape_det| falls
/// below det_tol the ratio is undefined and left empty.
struct InvariantRatio {
  Complex h_inv{};
  Complex reshape_det{};
  std::optional<Complex> ratio;
};

InvariantRatio four_qubit_invariant_ratio(
    const PureState& psi, ReshapePairing pairing = ReshapePairing::AC_BD,
    double det_tol = 1e-12);

/// Pairwise inequivalence of the family states at the given times:
/// result[i][j] is true when |ratio(t_i) - ratio(t_j)| > separation_tol.
/// Every distinct pair in (0, pi/4) separates — a one-parameter family of
/// mutually inequivalent four-party gates.  Errors if any ratio in the grid
/// is undefined.
std::vector<std::vector<bool>> pairwise_inequivalence_demo(
    std::span<const double> ts, double separation_tol = 1e-6);

// --- general operators ------------------------------------------------------

/// Equivalence class of a (not necessarily unitary) two-party operator
/// under invertible local operators: the Schmidt rank of its dual state,
/// an integer in 1..d_A*d_B.  Every rank is realized, e.g. by Bell-diagonal
/// operators sum_k b_k sigma_k (x) sigma_k with the wanted number of nonzero
/// b_k.  Errors on (near-)zero operators.
std::size_t operator_class(const GateDescriptor& o,
                           double tol = kDefaultRankTol);

}  // namespace slocc
