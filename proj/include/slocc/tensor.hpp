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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slocc {

using Complex = std::complex<double>;

/// Base class for all slocc errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad shapes, dimension mismatch,
/// unparseable fixtures, preconditions violated).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A numerical contract could not be met (reconstruction residual too large,
/// tolerance-ambiguous rank, diverging iteration).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Default tolerances used across the library.  Rank decisions are relative on
// singular values: sigma_i counts when sigma_i > tol * sigma_max.
inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kStateNormTol = 1e-8;
inline constexpr double kTangleTol = 1e-9;

/// Dense complex tensor with an explicit shape, stored row-major.
///
/// INDEX CONVENTION (used consistently everywhere in this library):
/// entries are stored row-major over the declared axes, i.e. the LAST axis
/// varies fastest.  A multi-index (i_0, ..., i_{k-1}) over shape
/// (n_0, ..., n_{k-1}) maps to the flat offset
///
///     flat = ((i_0 * n_1 + i_1) * n_2 + i_2) ... + i_{k-1}.
///
/// Matrices are rank-2 tensors with shape {rows, cols}; column vectors are
/// rank-1 tensors.  Multi-slot state vectors are rank-1 tensors of length
/// prod(d_s) whose flat index decomposes over the slot dimensions in declared
/// slot order (see PartyStructure).
class ComplexTensor {
 public:
  ComplexTensor() = default;

  /// Zero-filled tensor of the given shape.
  explicit ComplexTensor(std::vector<std::size_t> shape);

  /// Tensor with explicit entries (row-major); sizes must agree.
  ComplexTensor(std::vector<std::size_t> shape, std::vector<Complex> entries);

  static ComplexTensor identity(std::size_t n);
  static ComplexTensor matrix(std::size_t rows, std::size_t cols);
  static ComplexTensor column(std::vector<Complex> entries);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t ndim() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  bool is_matrix() const { return shape_.size() == 2; }
  bool is_square_matrix() const {
    return is_matrix() && shape_[0] == shape_[1];
  }
  std::size_t rows() const;
  std::size_t cols() const;

  Complex& operator[](std::size_t flat) { return data_[flat]; }
  const Complex& operator[](std::size_t flat) const { return data_[flat]; }

  /// Element access by multi-index (bounds- and arity-checked).
  Complex& at(std::span<const std::size_t> idx);
  const Complex& at(std::span<const std::size_t> idx) const;
  Complex& at(std::initializer_list<std::size_t> idx);
  const Complex& at(std::initializer_list<std::size_t> idx) const;

  /// Same data, new shape (total size must match).
  ComplexTensor reshaped(std::vector<std::size_t> new_shape) const;

  ComplexTensor conjugate() const;
  ComplexTensor transpose() const;  // matrices only
  ComplexTensor dagger() const;     // matrices only
  Complex trace() const;            // square matrices only

  double norm() const;  // Frobenius / l2
  double max_abs() const;

  ComplexTensor& operator+=(const ComplexTensor& other);
  ComplexTensor& operator-=(const ComplexTensor& other);
  ComplexTensor& operator*=(Complex scalar);
  friend ComplexTensor operator+(ComplexTensor a, const ComplexTensor& b) {
    a += b;
    return a;
  }
  friend ComplexTensor operator-(ComplexTensor a, const ComplexTensor& b) {
    a -= b;
    return a;
  }
  friend ComplexTensor operator*(Complex s, ComplexTensor t) {
    t *= s;
    return t;
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<Complex> data_;
};

/// Kronecker product of two matrices.  Row-major and slot-order consistent:
/// kron(a, b)[(i*rb + k), (j*cb + l)] = a[i,j] * b[k,l], so the axes of `a`
/// precede the axes of `b` in the combined multi-index.
ComplexTensor kron(const ComplexTensor& a, const ComplexTensor& b);

/// Matrix product a * b.
ComplexTensor matmul(const ComplexTensor& a, const ComplexTensor& b);

/// Matrix times column vector.
ComplexTensor apply_matrix(const ComplexTensor& m, const ComplexTensor& v);

/// Outer product |a><b| of two column vectors.
ComplexTensor outer(const ComplexTensor& a, const ComplexTensor& b);

/// Largest entrywise absolute difference (shapes must match).
double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b);

/// True when a == phase * b for some unit scalar, within tol (entrywise).
bool equal_up_to_phase(const ComplexTensor& a, const ComplexTensor& b,
                       double tol);

/// Declares who holds which subsystem: an ordered list of parties, each with
/// an ordered list of local subsystem slots.  Flat slot order is party-major:
/// all of party 0's slots, then party 1's, and so on.  A state vector over
/// the structure decomposes its flat index over `slot_dims()` in this order
/// (row-major, per the ComplexTensor convention), and operators act on
/// row/column multi-indices the same way.
class PartyStructure {
 public:
  PartyStructure(std::vector<std::string> parties,
                 std::vector<std::vector<std::size_t>> dims_by_party);

  /// n parties named "A", "B", ... each holding one d-level slot.
  static PartyStructure qudits(std::size_t n_parties, std::size_t local_dim);

  std::size_t num_parties() const { return parties_.size(); }
  std::size_t num_slots() const { return slot_dims_.size(); }
  const std::vector<std::string>& parties() const { return parties_; }
  const std::vector<std::size_t>& slot_dims() const { return slot_dims_; }
  std::size_t slot_party(std::size_t slot) const { return slot_party_[slot]; }
  std::vector<std::size_t> slots_of_party(std::size_t party) const;
  /// "A1", "A2", ... (1-based within the party).
  std::string slot_name(std::size_t slot) const;
  std::size_t total_dim() const;

  /// Same party count and same per-slot dimensions (labels ignored).
  bool same_dims(const PartyStructure& other) const;

  /// Structure for the dual state of a gate on this structure: every party's
  /// single slot X becomes the pair (X1, X2) with the same local dimension.
  /// Requires exactly one slot per party.
  PartyStructure choi_doubled() const;

 private:
  std::vector<std::string> parties_;
  std::vector<std::size_t> slot_dims_;
  std::vector<std::size_t> slot_party_;
  std::vector<std::size_t> slot_index_in_party_;
};

// --- slot-indexed operations -----------------------------------------------
//
// `dims` is the per-slot dimension list; states are rank-1 tensors of length
// prod(dims) and operators are square matrices of that size, both decomposing
// indices over `dims` row-major.

/// Partial trace of a density operator, keeping the listed slots (in their
/// original relative order) and tracing out the rest.
ComplexTensor partial_trace(const ComplexTensor& rho,
                            std::span<const std::size_t> keep,
                            std::span<const std::size_t> dims);
ComplexTensor partial_trace(const ComplexTensor& rho,
                            std::span<const std::size_t> keep,
                            const PartyStructure& structure);

/// Apply an operator that acts on the listed slots (in the listed order) to a
/// full state vector, leaving the other slots untouched.
ComplexTensor apply_to_slots(const ComplexTensor& op,
                             std::span<const std::size_t> slots,
                             const ComplexTensor& state,
                             std::span<const std::size_t> dims);

/// Reshape a state vector into the matrix M[r, c] whose rows run over the
/// listed slots (in their original relative order) and whose columns run over
/// the complementary slots.
ComplexTensor bipartition_matrix(const ComplexTensor& state,
                                 std::span<const std::size_t> row_slots,
                                 std::span<const std::size_t> dims);

/// Row/column realignment of a two-party operator: for U acting on parties A
/// and B (one slot each), returns R with R[(a,a'), (b,b')] = U[(a,b), (a',b')]
/// — rows indexed by the party-A operator indices, columns by party-B's.  The
/// singular values of R are the operator Schmidt coefficients of U across
/// the A|B split.  Errors on structures with more than two slots.
ComplexTensor reshuffle_operator(const ComplexTensor& op,
                                 const PartyStructure& structure);

/// Conjugate an operator by the slot permutation that sends slot s of the
/// result to slot perm[s] of the input (both rows and columns move together).
ComplexTensor operator_permute_slots(const ComplexTensor& op,
                                     std::span<const std::size_t> perm,
                                     std::span<const std::size_t> dims);

// --- flat-index utilities ---------------------------------------------------

/// Row-major strides for a dimension list.
std::vector<std::size_t> row_major_strides(std::span<const std::size_t> dims);

/// Decompose a flat index over `dims` (row-major).
void unflatten_index(std::size_t flat, std::span<const std::size_t> dims,
                     std::span<std::size_t> out);

/// Recompose a multi-index over `dims` (row-major).
std::size_t flatten_index(std::span<const std::size_t> idx,
                          std::span<const std::size_t> dims);

}  // namespace slocc
