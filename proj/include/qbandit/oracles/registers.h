// Copyright 2026 The qbandit Authors
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


#ifndef QBANDIT_ORACLES_REGISTERS_H
#define QBANDIT_ORACLES_REGISTERS_H

#include <cstddef>
#include <string>
#include <vector>

#include "qbandit/qmat/matrix.h"

namespace qbandit::oracles {

using qmat::ComplexMatrix;
using qmat::cplx;
using qmat::CVector;

enum class Flip { Bit, Phase };

Flip parse_flip(const std::string &name);
std::string flip_name(Flip f);

/// Register layout arm (slowest) x omega x reward qubit x work (fastest).
///
/// Arms are numbered 1..n_arms in every public call; arm i sits at basis
/// index i - 1 of the arm register.
struct RegisterSpec {
    std::size_t n_arms = 1;
    std::size_t n_omega = 1;
    std::size_t n_reward = 2;
    std::size_t n_work = 1;

    std::size_t total() const;
    std::vector<std::size_t> dims() const;
    std::size_t index(std::size_t arm0, std::size_t omega, std::size_t reward, std::size_t work) const;
    /// Throws "arm out of range" unless 1 <= arm <= n_arms.
    void check_arm(std::size_t arm) const;
    /// Throws "dimension cap exceeded" when total() is above the cap.
    void check_cap() const;
};

/// Operator sending basis vector k to phase[k] * e_{target[k]}.
///
/// Every oracle in this library has this form, so conjugation costs O(d^2).
class SignedPermutation {
   public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::size_t dim);
    SignedPermutation(std::vector<std::size_t> target, std::vector<cplx> phase);

    std::size_t dim() const { return target_.size(); }
    std::size_t target(std::size_t k) const { return target_[k]; }
    cplx phase(std::size_t k) const { return phase_[k]; }
    void set(std::size_t k, std::size_t target, cplx phase);

    ComplexMatrix matrix() const;
    CVector apply(const CVector &v) const;
    /// O A O^dagger.
    ComplexMatrix conjugate(const ComplexMatrix &a) const;
    /// this * other.
    SignedPermutation compose(const SignedPermutation &other) const;
    bool is_permutation() const;

   private:
    std::vector<std::size_t> target_;
    std::vector<cplx> phase_;
};

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_REGISTERS_H
