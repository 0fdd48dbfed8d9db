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


#include "qbandit/oracles/registers.h"

#include <stdexcept>

#include "qbandit/common/tolerances.h"

namespace qbandit::oracles {

Flip parse_flip(const std::string &name) {
    if (name == "bit") {
        return Flip::Bit;
    }
    if (name == "phase") {
        return Flip::Phase;
    }
    throw std::invalid_argument("unknown flip kind: " + name);
}

std::string flip_name(Flip f) {
    return f == Flip::Bit ? "bit" : "phase";
}

std::size_t RegisterSpec::total() const {
    return n_arms * n_omega * n_reward * n_work;
}

std::vector<std::size_t> RegisterSpec::dims() const {
    return {n_arms, n_omega, n_reward, n_work};
}

std::size_t RegisterSpec::index(std::size_t arm0, std::size_t omega, std::size_t reward, std::size_t work) const {
    return ((arm0 * n_omega + omega) * n_reward + reward) * n_work + work;
}

void RegisterSpec::check_arm(std::size_t arm) const {
    if (arm < 1 || arm > n_arms) {
        throw std::out_of_range("arm out of range: " + std::to_string(arm) + " not in [1, " +
                                std::to_string(n_arms) + "]");
    }
}

void RegisterSpec::check_cap() const {
    if (n_arms == 0 || n_omega == 0 || n_reward == 0 || n_work == 0) {
        throw std::invalid_argument("register sizes must be positive");
    }
    if (total() > tolerances().dimension_cap) {
        throw std::length_error("dimension cap exceeded: " + std::to_string(total()) + " > " +
                                std::to_string(tolerances().dimension_cap));
    }
}

SignedPermutation::SignedPermutation(std::size_t dim) : target_(dim), phase_(dim, 1.0) {
    for (std::size_t k = 0; k < dim; ++k) {
        target_[k] = k;
    }
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> target, std::vector<cplx> phase)
    : target_(std::move(target)), phase_(std::move(phase)) {
    if (target_.size() != phase_.size() || !is_permutation()) {
        throw std::invalid_argument("signed permutation: targets are not a permutation");
    }
}

void SignedPermutation::set(std::size_t k, std::size_t target, cplx phase) {
    target_[k] = target;
    phase_[k] = phase;
}

bool SignedPermutation::is_permutation() const {
    std::vector<bool> hit(target_.size(), false);
    for (std::size_t t : target_) {
        if (t >= target_.size() || hit[t]) {
            return false;
        }
        hit[t] = true;
    }
    return true;
}

ComplexMatrix SignedPermutation::matrix() const {
    ComplexMatrix m(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        m(target_[k], k) = phase_[k];
    }
    return m;
}

CVector SignedPermutation::apply(const CVector &v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("dim mismatch");
    }
    CVector out(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        out[target_[k]] = phase_[k] * v[k];
    }
    return out;
}

ComplexMatrix SignedPermutation::conjugate(const ComplexMatrix &a) const {
    if (a.rows() != dim() || a.cols() != dim()) {
        throw std::invalid_argument("dim mismatch");
    }
    ComplexMatrix out(dim(), dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        const std::size_t tr = target_[r];
        const cplx pr = phase_[r];
        for (std::size_t c = 0; c < dim(); ++c) {
            out(tr, target_[c]) = pr * a(r, c) * std::conj(phase_[c]);
        }
    }
    return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("dim mismatch");
    }
    SignedPermutation out(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        const std::size_t mid = other.target_[k];
        out.set(k, target_[mid], phase_[mid] * other.phase_[k]);
    }
    return out;
}

}  // namespace qbandit::oracles
