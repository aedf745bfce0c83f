// Copyright 2026 The wqdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WQDIST_DENSE_OPERATOR_HPP
#define WQDIST_DENSE_OPERATOR_HPP

#include <complex>
#include <vector>

namespace wqdist {

using cd = std::complex<double>;

/// Square complex matrix of power-of-two dimension, row-major storage.
/// `hermitian` is a constructor-set tag; routines that require it also
/// check the numerical violation where cheap.
struct DenseOperator {
    int dim = 0;
    bool hermitian = false;
    std::vector<cd> a;

    DenseOperator() = default;
    DenseOperator(int dim, bool hermitian);

    static DenseOperator identity(int dim);
    static DenseOperator zero(int dim, bool hermitian = false);

    cd& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const cd& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }

    cd trace() const;
    DenseOperator adjoint() const;
    double max_abs_diff(const DenseOperator& other) const;
    /// max |A - A^dagger| over entries.
    double hermiticity_violation() const;
    double frobenius_norm() const;
};

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(cd s, const DenseOperator& a);

/// Throws unless `dim` is a positive power of two.
void check_power_of_two(int dim);

}  // namespace wqdist

#endif  // WQDIST_DENSE_OPERATOR_HPP
