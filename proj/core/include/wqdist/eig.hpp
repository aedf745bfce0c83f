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

#ifndef WQDIST_EIG_HPP
#define WQDIST_EIG_HPP

#include <vector>

#include "wqdist/dense_operator.hpp"

namespace wqdist {

/// Full spectral decomposition of a Hermitian matrix. Eigenvalues are
/// sorted descending; eigenvector i is column i of `eigenvectors`, with its
/// global phase fixed so the first component above threshold is real and
/// positive.
struct Spectrum {
    std::vector<double> eigenvalues;
    DenseOperator eigenvectors;
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius mass
/// drops below 1e-12; throws after 100 sweeps without convergence, or if
/// the input is not tagged/numerically Hermitian.
Spectrum hermitian_eig(const DenseOperator& a);

/// V sqrt(clip(lambda, 0)) V^dagger. Eigenvalues below -1e-10 are an
/// input error, not repaired.
DenseOperator psd_sqrt(const DenseOperator& a);

}  // namespace wqdist

#endif  // WQDIST_EIG_HPP
