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

#ifndef WQDIST_METRICS_HPP
#define WQDIST_METRICS_HPP

#include <string>
#include <string_view>

#include "wqdist/dense_operator.hpp"

namespace wqdist {

enum class Metric { bures, hilbert_schmidt };

std::string metric_name(Metric m);
/// Accepts "bures", "hilbert_schmidt" and the shorthand "hs".
Metric parse_metric(std::string_view name);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to
/// [0, 1]. Both inputs must be density matrices of equal dimension.
double fidelity(const DenseOperator& rho, const DenseOperator& sigma);

/// arccos sqrt(F), in [0, pi/2].
double bures_length(const DenseOperator& rho, const DenseOperator& sigma);

/// sqrt(Tr(rho^2) + Tr(sigma^2) - 2 Tr(rho sigma)), valid for any pair of
/// Hermitian operators of equal dimension.
double hs_distance(const DenseOperator& rho, const DenseOperator& sigma);

double purity(const DenseOperator& rho);
double overlap(const DenseOperator& rho, const DenseOperator& sigma);

/// Dispatch: bures_length or hs_distance.
double distance(Metric m, const DenseOperator& rho, const DenseOperator& sigma);

/// Maximum value each metric attains on density-matrix pairs.
double metric_max(Metric m);

}  // namespace wqdist

#endif  // WQDIST_METRICS_HPP
