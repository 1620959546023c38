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

// Internal: conversions between ComplexTensor matrices and Eigen.

#pragma once

#include <Eigen/Dense>

#include "slocc/tensor.hpp"

namespace slocc::detail {

inline Eigen::MatrixXcd to_eigen(const ComplexTensor& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m[i * m.cols() + j];
  return out;
}

inline ComplexTensor from_eigen(const Eigen::MatrixXcd& m) {
  ComplexTensor out({static_cast<std::size_t>(m.rows()),
                     static_cast<std::size_t>(m.cols())});
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i) * m.cols() +
          static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

}  // namespace slocc::detail
