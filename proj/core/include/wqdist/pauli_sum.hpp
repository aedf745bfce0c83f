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

#ifndef WQDIST_PAULI_SUM_HPP
#define WQDIST_PAULI_SUM_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "wqdist/dense_operator.hpp"
#include "wqdist/pauli.hpp"

namespace wqdist {

/// Coefficients below this magnitude are dropped after arithmetic. The
/// states handled here are exact dyadic rationals, so anything smaller is
/// roundoff.
inline constexpr double kPruneThreshold = 1e-14;

/// Dense conversions refuse above this qubit count by default.
inline constexpr int kDefaultDenseLimit = 12;

/// Hermitian operator as a real-weighted sum of Pauli words. Zero
/// coefficients are never stored; iteration order is the deterministic
/// (x,z) mask order of PauliString.
class PauliSum {
  public:
    explicit PauliSum(int n);

    int qubit_count() const { return n_; }
    const std::map<PauliString, double>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of `word`; 0 when absent.
    double coefficient(const PauliString& word) const;
    /// Accumulates `c` onto `word`, pruning the term if it lands below
    /// threshold. Throws on qubit-count mismatch.
    void add(const PauliString& word, double c);

    double trace() const;
    /// Tr(rho^2) computed exactly from coefficients: 2^n * sum c^2.
    double purity() const;

    PauliSum scaled(double s) const;
    bool same_terms(const PauliSum& other, double tol = kPruneThreshold) const;

    std::string str() const;

  private:
    int n_;
    std::map<PauliString, double> terms_;
};

/// Tr(a b) computed exactly from shared terms: 2^n * sum_P a_P b_P.
double overlap(const PauliSum& a, const PauliSum& b);

/// Trace over the complement of `keep`. Kept qubits are relabeled
/// 1..|keep| following the order of `keep`; surviving coefficients are
/// scaled by 2^{n-|keep|}.
PauliSum partial_trace(const PauliSum& s, std::span<const int> keep);
PauliSum partial_trace(const PauliSum& s, std::initializer_list<int> keep);

/// e s e for a Pauli word e: flips the sign of every term anticommuting
/// with e. Exact.
PauliSum conjugate_by_pauli(const PauliSum& s, const PauliString& e);

/// Relabels qubit i as perm[i-1]; perm must be a permutation of 1..n.
PauliSum permute_qubits(const PauliSum& s, const std::vector<int>& perm);
PauliString permute_qubits(const PauliString& p, const std::vector<int>& perm);

/// 2^n x 2^n matrix of the sum, qubit 1 on the leftmost tensor factor.
/// Throws when n exceeds `dense_limit`.
DenseOperator to_dense(const PauliSum& s, int dense_limit = kDefaultDenseLimit);
DenseOperator to_dense(const PauliString& p, int dense_limit = kDefaultDenseLimit);

}  // namespace wqdist

#endif  // WQDIST_PAULI_SUM_HPP
