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

#include "wqdist/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wqdist {

namespace {

constexpr double kOffDiagTolerance = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kPsdFloor = -1e-10;

double off_diagonal_mass(const DenseOperator& m) {
    double s = 0.0;
    for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
            if (r != c) s += std::norm(m.at(r, c));
        }
    }
    return std::sqrt(s);
}

/// One complex Jacobi rotation zeroing a(p,q), p < q. Updates a in place
/// and accumulates the rotation into v (v <- v * U).
void rotate(DenseOperator& a, DenseOperator& v, int p, int q) {
    const cd apq = a.at(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cd phase = apq / r;

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U = [[c, s*phase], [-s*conj(phase), c]] acting on columns (p, q).
    const cd sp = s * phase;
    const cd spc = std::conj(sp);

    const int n = a.dim;
    // a <- a U
    for (int k = 0; k < n; ++k) {
        const cd akp = a.at(k, p);
        const cd akq = a.at(k, q);
        a.at(k, p) = c * akp - spc * akq;
        a.at(k, q) = sp * akp + c * akq;
    }
    // a <- U^dagger a
    for (int k = 0; k < n; ++k) {
        const cd apk = a.at(p, k);
        const cd aqk = a.at(q, k);
        a.at(p, k) = c * apk - sp * aqk;
        a.at(q, k) = spc * apk + c * aqk;
    }
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = cd{a.at(p, p).real(), 0.0};
    a.at(q, q) = cd{a.at(q, q).real(), 0.0};
    // v <- v U
    for (int k = 0; k < n; ++k) {
        const cd vkp = v.at(k, p);
        const cd vkq = v.at(k, q);
        v.at(k, p) = c * vkp - spc * vkq;
        v.at(k, q) = sp * vkp + c * vkq;
    }
}

void fix_column_phase(DenseOperator& v, int col) {
    const int n = v.dim;
    for (int r = 0; r < n; ++r) {
        const cd entry = v.at(r, col);
        if (std::abs(entry) > 1e-9) {
            const cd phase = std::conj(entry) / std::abs(entry);
            for (int k = 0; k < n; ++k) v.at(k, col) *= phase;
            return;
        }
    }
}

}  // namespace

Spectrum hermitian_eig(const DenseOperator& input) {
    if (!input.hermitian) {
        throw std::invalid_argument("hermitian_eig: operator not tagged Hermitian");
    }
    const double violation = input.hermiticity_violation();
    if (violation > kHermitianTolerance) {
        throw std::invalid_argument("hermitian_eig: Hermiticity violation " +
                                    std::to_string(violation));
    }
    const int n = input.dim;
    DenseOperator a = input;
    // Symmetrize roundoff so the working matrix is exactly Hermitian.
    for (int r = 0; r < n; ++r) {
        a.at(r, r) = cd{a.at(r, r).real(), 0.0};
        for (int c = r + 1; c < n; ++c) {
            const cd avg = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
            a.at(r, c) = avg;
            a.at(c, r) = std::conj(avg);
        }
    }
    DenseOperator v = DenseOperator::identity(n);

    bool converged = n == 1 || off_diagonal_mass(a) < kOffDiagTolerance;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a.at(p, q)) > 0.0) rotate(a, v, p, q);
            }
        }
        converged = off_diagonal_mass(a) < kOffDiagTolerance;
    }
    if (!converged) {
        throw std::runtime_error("hermitian_eig: no convergence after " +
                                 std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = DenseOperator(n, false);
    for (int i = 0; i < n; ++i) {
        spec.eigenvalues[i] = a.at(order[i], order[i]).real();
        for (int r = 0; r < n; ++r) {
            spec.eigenvectors.at(r, i) = v.at(r, order[i]);
        }
    }
    for (int i = 0; i < n; ++i) fix_column_phase(spec.eigenvectors, i);
    return spec;
}

DenseOperator psd_sqrt(const DenseOperator& a) {
    const Spectrum spec = hermitian_eig(a);
    for (double lambda : spec.eigenvalues) {
        if (lambda < kPsdFloor) {
            throw std::invalid_argument("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                                        " below PSD floor");
        }
    }
    const int n = a.dim;
    DenseOperator out(n, true);
    for (int i = 0; i < n; ++i) {
        const double root = std::sqrt(std::max(spec.eigenvalues[i], 0.0));
        if (root == 0.0) continue;
        for (int r = 0; r < n; ++r) {
            const cd vri = root * spec.eigenvectors.at(r, i);
            for (int c = 0; c < n; ++c) {
                out.at(r, c) += vri * std::conj(spec.eigenvectors.at(c, i));
            }
        }
    }
    return out;
}

}  // namespace wqdist
