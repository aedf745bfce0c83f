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

#include "wqdist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqdist/eig.hpp"

namespace wqdist {

namespace {

constexpr double kTraceTolerance = 1e-10;

// Eigenvalues of sqrt(rho) sigma sqrt(rho) below this are solver noise
// (order eps * dim). The square root would amplify them to ~1e-6 and pull
// the Bures length of orthogonal states visibly off pi/2.
constexpr double kEigenNoiseFloor = 1e-12;

void check_same_dim(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim) + " vs " +
                                    std::to_string(b.dim));
    }
}

void check_density(const DenseOperator& rho, const char* what) {
    if (!rho.hermitian) {
        throw std::invalid_argument(std::string(what) + ": not tagged Hermitian");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw std::invalid_argument(std::string(what) + ": trace " + std::to_string(tr) +
                                    " is not 1");
    }
}

}  // namespace

std::string metric_name(Metric m) {
    return m == Metric::bures ? "bures" : "hilbert_schmidt";
}

Metric parse_metric(std::string_view name) {
    if (name == "bures") return Metric::bures;
    if (name == "hilbert_schmidt" || name == "hs") return Metric::hilbert_schmidt;
    throw std::invalid_argument("unknown metric \"" + std::string(name) + "\"");
}

double fidelity(const DenseOperator& rho, const DenseOperator& sigma) {
    check_same_dim(rho, sigma);
    check_density(rho, "fidelity: rho");
    check_density(sigma, "fidelity: sigma");
    const DenseOperator root = psd_sqrt(rho);
    const DenseOperator inner = root * sigma * root;
    DenseOperator hermitian_inner = inner;
    hermitian_inner.hermitian = true;
    const Spectrum spec = hermitian_eig(hermitian_inner);
    double sum = 0.0;
    for (double lambda : spec.eigenvalues) {
        if (lambda < -1e-10) {
            throw std::invalid_argument("fidelity: sigma is not PSD (inner eigenvalue " +
                                        std::to_string(lambda) + ")");
        }
        if (lambda > kEigenNoiseFloor) sum += std::sqrt(lambda);
    }
    return std::clamp(sum * sum, 0.0, 1.0);
}

double bures_length(const DenseOperator& rho, const DenseOperator& sigma) {
    const double f = fidelity(rho, sigma);
    return std::acos(std::clamp(std::sqrt(f), 0.0, 1.0));
}

double purity(const DenseOperator& rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    if (!rho.hermitian) {
        throw std::invalid_argument("purity: not tagged Hermitian");
    }
    double s = 0.0;
    for (const cd& v : rho.a) s += std::norm(v);
    return s;
}

double overlap(const DenseOperator& rho, const DenseOperator& sigma) {
    check_same_dim(rho, sigma);
    if (!rho.hermitian || !sigma.hermitian) {
        throw std::invalid_argument("overlap: operators must be Hermitian");
    }
    // Tr(rho sigma) = sum_ij rho_ij conj(sigma_ij); imaginary residue is
    // roundoff and discarded.
    cd s = 0.0;
    for (std::size_t i = 0; i < rho.a.size(); ++i) s += rho.a[i] * std::conj(sigma.a[i]);
    return s.real();
}

double hs_distance(const DenseOperator& rho, const DenseOperator& sigma) {
    check_same_dim(rho, sigma);
    const double d2 = purity(rho) + purity(sigma) - 2.0 * overlap(rho, sigma);
    return std::sqrt(std::max(d2, 0.0));
}

double distance(Metric m, const DenseOperator& rho, const DenseOperator& sigma) {
    return m == Metric::bures ? bures_length(rho, sigma) : hs_distance(rho, sigma);
}

double metric_max(Metric m) {
    return m == Metric::bures ? std::numbers::pi / 2.0 : std::numbers::sqrt2;
}

}  // namespace wqdist
