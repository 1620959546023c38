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

#include "slocc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace slocc {

namespace {

std::size_t checked_product(std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw InvalidInput("tensor: zero-sized axis");
    if (total > (std::size_t(1) << 40) / d)
      throw InvalidInput("tensor: total dimension too large");
    total *= d;
  }
  return total;
}

using EigenRowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMat> as_eigen(const ComplexTensor& m) {
  return {m.data().data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

}  // namespace

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_product(shape_)) {}

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape,
                             std::vector<Complex> entries)
    : shape_(std::move(shape)), data_(std::move(entries)) {
  if (checked_product(shape_) != data_.size())
    throw InvalidInput("tensor: entry count does not match shape");
}

ComplexTensor ComplexTensor::identity(std::size_t n) {
  ComplexTensor t({n, n});
  for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
  return t;
}

ComplexTensor ComplexTensor::matrix(std::size_t rows, std::size_t cols) {
  return ComplexTensor({rows, cols});
}

ComplexTensor ComplexTensor::column(std::vector<Complex> entries) {
  std::size_t n = entries.size();
  return ComplexTensor({n}, std::move(entries));
}

std::size_t ComplexTensor::rows() const {
  if (!is_matrix()) throw InvalidInput("tensor: rows() on a non-matrix");
  return shape_[0];
}

std::size_t ComplexTensor::cols() const {
  if (!is_matrix()) throw InvalidInput("tensor: cols() on a non-matrix");
  return shape_[1];
}

Complex& ComplexTensor::at(std::span<const std::size_t> idx) {
  return data_[flatten_index(idx, shape_)];
}

const Complex& ComplexTensor::at(std::span<const std::size_t> idx) const {
  return data_[flatten_index(idx, shape_)];
}

Complex& ComplexTensor::at(std::initializer_list<std::size_t> idx) {
  return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

const Complex& ComplexTensor::at(std::initializer_list<std::size_t> idx) const {
  return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

ComplexTensor ComplexTensor::reshaped(std::vector<std::size_t> new_shape) const {
  if (checked_product(new_shape) != data_.size())
    throw InvalidInput("tensor: reshape changes total size");
  return ComplexTensor(std::move(new_shape), data_);
}

ComplexTensor ComplexTensor::conjugate() const {
  ComplexTensor out(shape_, data_);
  for (Complex& z : out.data_) z = std::conj(z);
  return out;
}

ComplexTensor ComplexTensor::transpose() const {
  std::size_t r = rows(), c = cols();
  ComplexTensor out({c, r});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out.data_[j * r + i] = data_[i * c + j];
  return out;
}

ComplexTensor ComplexTensor::dagger() const {
  std::size_t r = rows(), c = cols();
  ComplexTensor out({c, r});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      out.data_[j * r + i] = std::conj(data_[i * c + j]);
  return out;
}

Complex ComplexTensor::trace() const {
  if (!is_square_matrix()) throw InvalidInput("tensor: trace needs a square matrix");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows(); ++i) sum += data_[i * cols() + i];
  return sum;
}

double ComplexTensor::norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexTensor& ComplexTensor::operator+=(const ComplexTensor& other) {
  if (shape_ != other.shape_) throw InvalidInput("tensor: shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexTensor& ComplexTensor::operator-=(const ComplexTensor& other) {
  if (shape_ != other.shape_) throw InvalidInput("tensor: shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexTensor& ComplexTensor::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

ComplexTensor kron(const ComplexTensor& a, const ComplexTensor& b) {
  std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  ComplexTensor out({ra * rb, ca * cb});
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j) {
      Complex aij = a[i * ca + j];
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          out[(i * rb + k) * (ca * cb) + (j * cb + l)] = aij * b[k * cb + l];
    }
  return out;
}

ComplexTensor matmul(const ComplexTensor& a, const ComplexTensor& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matmul: inner dimensions differ");
  ComplexTensor out({a.rows(), b.cols()});
  Eigen::Map<EigenRowMat> result(out.data().data(),
                                 static_cast<Eigen::Index>(a.rows()),
                                 static_cast<Eigen::Index>(b.cols()));
  result = as_eigen(a) * as_eigen(b);
  return out;
}

ComplexTensor apply_matrix(const ComplexTensor& m, const ComplexTensor& v) {
  if (v.ndim() != 1 || m.cols() != v.size())
    throw InvalidInput("apply_matrix: shape mismatch");
  ComplexTensor out({m.rows()});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m[i * m.cols() + j] * v[j];
    out[i] = sum;
  }
  return out;
}

ComplexTensor outer(const ComplexTensor& a, const ComplexTensor& b) {
  if (a.ndim() != 1 || b.ndim() != 1)
    throw InvalidInput("outer: needs two vectors");
  ComplexTensor out({a.size(), b.size()});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a[i] * std::conj(b[j]);
  return out;
}

double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b) {
  if (a.shape() != b.shape())
    throw InvalidInput("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool equal_up_to_phase(const ComplexTensor& a, const ComplexTensor& b,
                       double tol) {
  if (a.shape() != b.shape()) return false;
  // Fix the phase on b's largest entry, then compare entrywise.
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::abs(b[i]) > best) best = std::abs(b[i]), ref = i;
  if (best <= tol) return a.max_abs() <= tol;
  if (std::abs(a[ref]) < best * 1e-3) return false;
  Complex phase = a[ref] / b[ref];
  double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) return false;
  phase /= mag;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - phase * b[i]) > tol) return false;
  return true;
}

PartyStructure::PartyStructure(
    std::vector<std::string> parties,
    std::vector<std::vector<std::size_t>> dims_by_party)
    : parties_(std::move(parties)) {
  if (parties_.empty()) throw InvalidInput("PartyStructure: no parties");
  if (dims_by_party.size() != parties_.size())
    throw InvalidInput("PartyStructure: party/dims count mismatch");
  // Names must be unique: serialization identifies a party's slots by its
  // label, so two parties sharing one could not round-trip.
  for (std::size_t p = 0; p < parties_.size(); ++p)
    for (std::size_t q = p + 1; q < parties_.size(); ++q)
      if (parties_[p] == parties_[q])
        throw InvalidInput("PartyStructure: duplicate party name \"" +
                           parties_[p] + "\"");
  for (std::size_t p = 0; p < dims_by_party.size(); ++p) {
    if (dims_by_party[p].empty())
      throw InvalidInput("PartyStructure: party with no slots");
    for (std::size_t k = 0; k < dims_by_party[p].size(); ++k) {
      std::size_t d = dims_by_party[p][k];
      if (d < 1) throw InvalidInput("PartyStructure: slot dimension < 1");
      slot_dims_.push_back(d);
      slot_party_.push_back(p);
      slot_index_in_party_.push_back(k);
    }
  }
  checked_product(slot_dims_);
}

PartyStructure PartyStructure::qudits(std::size_t n_parties,
                                      std::size_t local_dim) {
  if (n_parties == 0 || n_parties > 26)
    throw InvalidInput("PartyStructure: unsupported party count");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> dims;
  for (std::size_t p = 0; p < n_parties; ++p) {
    names.emplace_back(1, static_cast<char>('A' + p));
    dims.push_back({local_dim});
  }
  return PartyStructure(std::move(names), std::move(dims));
}

std::vector<std::size_t> PartyStructure::slots_of_party(std::size_t party) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < slot_party_.size(); ++s)
    if (slot_party_[s] == party) out.push_back(s);
  return out;
}

std::string PartyStructure::slot_name(std::size_t slot) const {
  return parties_[slot_party_[slot]] +
         std::to_string(slot_index_in_party_[slot] + 1);
}

std::size_t PartyStructure::total_dim() const {
  return checked_product(slot_dims_);
}

bool PartyStructure::same_dims(const PartyStructure& other) const {
  return slot_dims_ == other.slot_dims_ && slot_party_ == other.slot_party_;
}

PartyStructure PartyStructure::choi_doubled() const {
  std::vector<std::vector<std::size_t>> dims(parties_.size());
  for (std::size_t s = 0; s < slot_dims_.size(); ++s) {
    if (slot_index_in_party_[s] != 0)
      throw InvalidInput("choi_doubled: structure must have one slot per party");
    dims[slot_party_[s]] = {slot_dims_[s], slot_dims_[s]};
  }
  return PartyStructure(parties_, std::move(dims));
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = acc;
    acc *= dims[k];
  }
  return strides;
}

void unflatten_index(std::size_t flat, std::span<const std::size_t> dims,
                     std::span<std::size_t> out) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = flat % dims[k];
    flat /= dims[k];
  }
}

std::size_t flatten_index(std::span<const std::size_t> idx,
                          std::span<const std::size_t> dims) {
  if (idx.size() != dims.size())
    throw InvalidInput("flatten_index: arity mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (idx[k] >= dims[k]) throw InvalidInput("flatten_index: index out of range");
    flat = flat * dims[k] + idx[k];
  }
  return flat;
}

namespace {

void check_slots(std::span<const std::size_t> slots, std::size_t n_slots,
                 const char* who) {
  std::vector<bool> seen(n_slots, false);
  for (std::size_t s : slots) {
    if (s >= n_slots) throw InvalidInput(std::string(who) + ": slot out of range");
    if (seen[s]) throw InvalidInput(std::string(who) + ": repeated slot");
    seen[s] = true;
  }
}

std::vector<std::size_t> complement_slots(std::span<const std::size_t> slots,
                                          std::size_t n_slots) {
  std::vector<bool> in(n_slots, false);
  for (std::size_t s : slots) in[s] = true;
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < n_slots; ++s)
    if (!in[s]) out.push_back(s);
  return out;
}

}  // namespace

ComplexTensor partial_trace(const ComplexTensor& rho,
                            std::span<const std::size_t> keep,
                            std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (!rho.is_square_matrix() || rho.rows() != total)
    throw InvalidInput("partial_trace: operator does not match slot dims");
  check_slots(keep, dims.size(), "partial_trace");

  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<std::size_t> traced = complement_slots(kept, dims.size());

  auto strides = row_major_strides(dims);
  std::size_t dim_keep = 1, dim_trace = 1;
  for (std::size_t s : kept) dim_keep *= dims[s];
  for (std::size_t s : traced) dim_trace *= dims[s];

  // Flat offsets contributed by the kept (resp. traced) sub-multi-index.
  auto offsets = [&](const std::vector<std::size_t>& slots, std::size_t dim) {
    std::vector<std::size_t> sub_dims;
    for (std::size_t s : slots) sub_dims.push_back(dims[s]);
    std::vector<std::size_t> off(dim);
    std::vector<std::size_t> idx(slots.size());
    for (std::size_t f = 0; f < dim; ++f) {
      unflatten_index(f, sub_dims, idx);
      std::size_t o = 0;
      for (std::size_t k = 0; k < slots.size(); ++k)
        o += idx[k] * strides[slots[k]];
      off[f] = o;
    }
    return off;
  };
  auto keep_off = offsets(kept, dim_keep);
  auto trace_off = offsets(traced, dim_trace);

  ComplexTensor out({dim_keep, dim_keep});
  for (std::size_t r = 0; r < dim_keep; ++r)
    for (std::size_t c = 0; c < dim_keep; ++c) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < dim_trace; ++t)
        sum += rho[(keep_off[r] + trace_off[t]) * total + keep_off[c] +
                   trace_off[t]];
      out[r * dim_keep + c] = sum;
    }
  return out;
}

ComplexTensor partial_trace(const ComplexTensor& rho,
                            std::span<const std::size_t> keep,
                            const PartyStructure& structure) {
  return partial_trace(rho, keep, structure.slot_dims());
}

ComplexTensor apply_to_slots(const ComplexTensor& op,
                             std::span<const std::size_t> slots,
                             const ComplexTensor& state,
                             std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (state.ndim() != 1 || state.size() != total)
    throw InvalidInput("apply_to_slots: state does not match slot dims");
  check_slots(slots, dims.size(), "apply_to_slots");
  std::size_t dim_op = 1;
  for (std::size_t s : slots) dim_op *= dims[s];
  if (!op.is_square_matrix() || op.rows() != dim_op)
    throw InvalidInput("apply_to_slots: operator does not match selected slots");

  auto strides = row_major_strides(dims);
  std::vector<std::size_t> sub_dims;
  for (std::size_t s : slots) sub_dims.push_back(dims[s]);
  // Offset table: flat offset contributed by each operator sub-index.
  std::vector<std::size_t> off(dim_op);
  {
    std::vector<std::size_t> idx(slots.size());
    for (std::size_t f = 0; f < dim_op; ++f) {
      unflatten_index(f, sub_dims, idx);
      std::size_t o = 0;
      for (std::size_t k = 0; k < slots.size(); ++k)
        o += idx[k] * strides[slots[k]];
      off[f] = o;
    }
  }

  ComplexTensor out({total});
  std::vector<std::size_t> full(dims.size());
  for (std::size_t j = 0; j < total; ++j) {
    unflatten_index(j, dims, full);
    std::vector<std::size_t> sub(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) sub[k] = full[slots[k]];
    std::size_t row = flatten_index(sub, sub_dims);
    std::size_t base = j - off[row];
    Complex sum = 0.0;
    for (std::size_t ccol = 0; ccol < dim_op; ++ccol) {
      Complex w = op[row * dim_op + ccol];
      if (w != Complex{}) sum += w * state[base + off[ccol]];
    }
    out[j] = sum;
  }
  return out;
}

ComplexTensor bipartition_matrix(const ComplexTensor& state,
                                 std::span<const std::size_t> row_slots,
                                 std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (state.ndim() != 1 || state.size() != total)
    throw InvalidInput("bipartition_matrix: state does not match slot dims");
  check_slots(row_slots, dims.size(), "bipartition_matrix");
  std::vector<std::size_t> rows(row_slots.begin(), row_slots.end());
  std::sort(rows.begin(), rows.end());
  std::vector<std::size_t> cols = complement_slots(rows, dims.size());
  if (rows.empty() || cols.empty())
    throw InvalidInput("bipartition_matrix: bipartition must be proper");

  std::size_t dim_r = 1, dim_c = 1;
  for (std::size_t s : rows) dim_r *= dims[s];
  for (std::size_t s : cols) dim_c *= dims[s];

  std::vector<std::size_t> row_dims, col_dims;
  for (std::size_t s : rows) row_dims.push_back(dims[s]);
  for (std::size_t s : cols) col_dims.push_back(dims[s]);

  ComplexTensor out({dim_r, dim_c});
  std::vector<std::size_t> full(dims.size());
  for (std::size_t j = 0; j < total; ++j) {
    unflatten_index(j, dims, full);
    std::vector<std::size_t> ri(rows.size()), ci(cols.size());
    for (std::size_t k = 0; k < rows.size(); ++k) ri[k] = full[rows[k]];
    for (std::size_t k = 0; k < cols.size(); ++k) ci[k] = full[cols[k]];
    out[flatten_index(ri, row_dims) * dim_c + flatten_index(ci, col_dims)] =
        state[j];
  }
  return out;
}

ComplexTensor reshuffle_operator(const ComplexTensor& op,
                                 const PartyStructure& structure) {
  if (structure.num_slots() != 2 || structure.num_parties() != 2)
    throw InvalidInput(
        "reshuffle_operator: needs exactly two parties with one slot each");
  std::size_t da = structure.slot_dims()[0], db = structure.slot_dims()[1];
  if (!op.is_square_matrix() || op.rows() != da * db)
    throw InvalidInput("reshuffle_operator: operator does not match structure");
  ComplexTensor out({da * da, db * db});
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t ap = 0; ap < da; ++ap)
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t bp = 0; bp < db; ++bp)
          out[(a * da + ap) * (db * db) + (b * db + bp)] =
              op[(a * db + b) * (da * db) + (ap * db + bp)];
  return out;
}

ComplexTensor operator_permute_slots(const ComplexTensor& op,
                                     std::span<const std::size_t> perm,
                                     std::span<const std::size_t> dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (!op.is_square_matrix() || op.rows() != total)
    throw InvalidInput("operator_permute_slots: operator does not match dims");
  if (perm.size() != dims.size())
    throw InvalidInput("operator_permute_slots: permutation arity mismatch");
  check_slots(perm, dims.size(), "operator_permute_slots");

  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t s = 0; s < dims.size(); ++s) new_dims[s] = dims[perm[s]];
  std::size_t new_total = 1;
  for (std::size_t d : new_dims) new_total *= d;
  if (new_total != total)
    throw InvalidInput("operator_permute_slots: dimension product changed");

  // gather[j] = flat old index corresponding to new flat index j.
  std::vector<std::size_t> gather(total);
  std::vector<std::size_t> idx(dims.size()), old_idx(dims.size());
  for (std::size_t j = 0; j < total; ++j) {
    unflatten_index(j, new_dims, idx);
    for (std::size_t s = 0; s < dims.size(); ++s) old_idx[perm[s]] = idx[s];
    gather[j] = flatten_index(old_idx, dims);
  }

  ComplexTensor out({total, total});
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      out[r * total + c] = op[gather[r] * total + gather[c]];
  return out;
}

}  // namespace slocc
