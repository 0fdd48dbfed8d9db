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


#include "qbandit/oracles/oracles.h"

#include <stdexcept>

namespace qbandit::oracles {

namespace {

// Applies the arm-i flip to the (arm0 = i - 1) block of `op` in place.
void flip_block(SignedPermutation &op, std::size_t arm0, std::size_t omega, Flip flip, const RegisterSpec &spec) {
    for (std::size_t c = 0; c < spec.n_reward; ++c) {
        for (std::size_t w = 0; w < spec.n_work; ++w) {
            const std::size_t k = spec.index(arm0, omega, c, w);
            const std::size_t t = op.target(k);
            const cplx ph = op.phase(k);
            if (flip == Flip::Phase) {
                op.set(k, t, -ph);
            } else {
                // The reward qubit is the two lowest reward levels; higher levels
                // (if any) are left alone.
                if (c >= 2) {
                    continue;
                }
                const std::size_t partner = spec.index(arm0, omega, c ^ 1U, w);
                op.set(k, partner, ph);
            }
        }
    }
}

void check_bit_register(Flip flip, const RegisterSpec &spec) {
    if (flip == Flip::Bit && spec.n_reward < 2) {
        throw std::invalid_argument("bit flip needs a reward register of size >= 2");
    }
}

}  // namespace

SignedPermutation arm_oracle(std::size_t arm, Flip flip, const RegisterSpec &spec) {
    spec.check_cap();
    spec.check_arm(arm);
    check_bit_register(flip, spec);
    SignedPermutation op(spec.total());
    for (std::size_t w = 0; w < spec.n_omega; ++w) {
        flip_block(op, arm - 1, w, flip, spec);
    }
    return op;
}

ComplexMatrix make_arm_oracle(std::size_t arm, Flip flip, const RegisterSpec &spec) {
    return arm_oracle(arm, flip, spec).matrix();
}

SignedPermutation ox_oracle(const std::vector<uint8_t> &x, Flip flip, const RegisterSpec &spec) {
    spec.check_cap();
    check_bit_register(flip, spec);
    if (x.size() != spec.n_arms) {
        throw std::invalid_argument("dim mismatch: reward sample length differs from arm count");
    }
    SignedPermutation op(spec.total());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) {
            for (std::size_t w = 0; w < spec.n_omega; ++w) {
                flip_block(op, i, w, flip, spec);
            }
        }
    }
    return op;
}

ComplexMatrix make_ox(const std::vector<uint8_t> &x, Flip flip, const RegisterSpec &spec) {
    return ox_oracle(x, flip, spec).matrix();
}

RegisterSpec erm_register(const RewardTable &table, std::size_t n_work) {
    RegisterSpec spec;
    spec.n_arms = table.n_arms();
    spec.n_omega = table.n_omega();
    spec.n_reward = 2;
    spec.n_work = n_work;
    return spec;
}

SignedPermutation erm_oracle(const RewardTable &table, Flip flip, std::size_t n_work) {
    const RegisterSpec spec = erm_register(table, n_work);
    spec.check_cap();
    SignedPermutation op(spec.total());
    for (std::size_t i = 1; i <= table.n_arms(); ++i) {
        for (std::size_t w = 0; w < table.n_omega(); ++w) {
            if (table.bit(i, w)) {
                flip_block(op, i - 1, w, flip, spec);
            }
        }
    }
    return op;
}

ComplexMatrix make_erm_oracle(const RewardTable &table, Flip flip, std::size_t n_work) {
    return erm_oracle(table, flip, n_work).matrix();
}

SignedPermutation self_indicating_oracle(std::size_t arm, std::size_t n_arms) {
    if (arm < 1 || arm > n_arms) {
        throw std::out_of_range("arm out of range");
    }
    SignedPermutation op(2 * n_arms);
    for (std::size_t j = 0; j < n_arms; ++j) {
        const cplx sign = (j == arm - 1) ? -1.0 : 1.0;
        op.set(2 * j, 2 * j + 1, sign);
        op.set(2 * j + 1, 2 * j, sign);
    }
    return op;
}

ComplexMatrix make_self_indicating_oracle(std::size_t arm, std::size_t n_arms) {
    return self_indicating_oracle(arm, n_arms).matrix();
}

ComplexMatrix arm_projector(std::size_t arm, const RegisterSpec &spec) {
    spec.check_arm(arm);
    const std::size_t block = spec.total() / spec.n_arms;
    ComplexMatrix p(spec.total(), spec.total());
    for (std::size_t k = 0; k < block; ++k) {
        const std::size_t idx = (arm - 1) * block + k;
        p(idx, idx) = 1.0;
    }
    return p;
}

}  // namespace qbandit::oracles
