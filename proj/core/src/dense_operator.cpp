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

#include "wqdist/dense_operator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wqdist {

void check_power_of_two(int dim) {
    if (dim < 1 || !std::has_single_bit(static_cast<unsigned>(dim))) {
        throw std::invalid_argument("dimension must be a positive power of two, got " +
                                    std::to_string(dim));
    }
}

DenseOperator::DenseOperator(int dim, bool hermitian) : dim(dim), hermitian(hermitian) {
    check_power_of_two(dim);
    a.assign(static_cast<std::size_t>(dim) * dim, cd{0.0, 0.0});
}

DenseOperator DenseOperator::identity(int dim) {
    DenseOperator m(dim, true);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseOperator DenseOperator::zero(int dim, bool hermitian) {
    return DenseOperator(dim, hermitian);
}

cd DenseOperator::trace() const {
    cd t = 0.0;
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator m(dim, hermitian);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            m.at(r, c) = std::conj(at(c, r));
        }
    }
    return m;
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
    if (dim != other.dim) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(dim) + " vs " +
                                    std::to_string(other.dim));
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - other.a[i]));
    }
    return m;
}

double DenseOperator::hermiticity_violation() const {
    double m = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
            m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return m;
}

double DenseOperator::frobenius_norm() const {
    double s = 0.0;
    for (const cd& v : a) s += std::norm(v);
    return std::sqrt(s);
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("dimension mismatch in matrix product");
    }
    DenseOperator out(a.dim, false);
    for (int r = 0; r < a.dim; ++r) {
        for (int k = 0; k < a.dim; ++k) {
            const cd ark = a.at(r, k);
            if (ark == cd{0.0, 0.0}) continue;
            for (int c = 0; c < a.dim; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch in matrix sum");
    DenseOperator out = a;
    out.hermitian = a.hermitian && b.hermitian;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += b.a[i];
    return out;
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch in matrix difference");
    DenseOperator out = a;
    out.hermitian = a.hermitian && b.hermitian;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= b.a[i];
    return out;
}

DenseOperator operator*(cd s, const DenseOperator& a) {
    DenseOperator out = a;
    out.hermitian = a.hermitian && s.imag() == 0.0;
    for (auto& v : out.a) v *= s;
    return out;
}

}  // namespace wqdist
