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


#include "qbandit/oracles/channels.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbandit::oracles {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability outside [0, 1]: " + std::to_string(p));
    }
}

}  // namespace

ComplexMatrix apply_kraus(const KrausSet &kraus, const ComplexMatrix &rho) {
    if (kraus.empty()) {
        throw std::invalid_argument("empty Kraus set");
    }
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto &a : kraus) {
        out += qmat::conjugate(a, rho);
    }
    return out;
}

double kraus_completeness_defect(const KrausSet &kraus) {
    const std::size_t d = kraus.at(0).cols();
    ComplexMatrix s(d, d);
    for (const auto &a : kraus) {
        s += a.adjoint() * a;
    }
    return qmat::distance_frobenius(s, ComplexMatrix::identity(d));
}

KrausSet make_channel_f(std::size_t arm, double p, Flip flip, const RegisterSpec &spec) {
    check_probability(p);
    const ComplexMatrix o = make_arm_oracle(arm, flip, spec);
    return {std::sqrt(1.0 - p) * ComplexMatrix::identity(spec.total()), std::sqrt(p) * o};
}

std::vector<KrausSet> make_channel_e(const RewardVector &p, Flip flip, const RegisterSpec &spec) {
    if (p.n_arms() != spec.n_arms) {
        throw std::invalid_argument("dim mismatch: reward vector and arm register differ");
    }
    std::vector<KrausSet> seq;
    for (std::size_t i = 1; i <= p.n_arms(); ++i) {
        seq.push_back(make_channel_f(i, p.mean(i), flip, spec));
    }
    return seq;
}

std::vector<double> mixture_weights(const std::vector<double> &p) {
    const std::size_t n = p.size();
    std::vector<double> w(std::size_t{1} << n, 1.0);
    for (std::size_t x = 0; x < w.size(); ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            w[x] *= ((x >> i) & 1U) ? p[i] : 1.0 - p[i];
        }
    }
    return w;
}

KrausSet make_channel_e_mixture(const RewardVector &p, Flip flip, const RegisterSpec &spec) {
    if (p.n_arms() > 12) {
        throw std::invalid_argument("use sequential composition: mixture path is limited to N <= 12");
    }
    if (p.n_arms() != spec.n_arms) {
        throw std::invalid_argument("dim mismatch: reward vector and arm register differ");
    }
    const std::vector<double> w = mixture_weights(p.means());
    KrausSet out;
    for (std::size_t x = 0; x < w.size(); ++x) {
        std::vector<uint8_t> bits(p.n_arms());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            bits[i] = (x >> i) & 1U;
        }
        out.push_back(std::sqrt(w[x]) * make_ox(bits, flip, spec));
    }
    return out;
}

ComplexMatrix apply_flip_channel(const SignedPermutation &op, double p, const ComplexMatrix &rho) {
    check_probability(p);
    ComplexMatrix out = (1.0 - p) * rho;
    if (p > 0.0) {
        out += p * op.conjugate(rho);
    }
    return out;
}

ComplexMatrix apply_channel_e(const std::vector<double> &p, Flip flip, const RegisterSpec &spec,
                              const ComplexMatrix &rho) {
    if (p.size() != spec.n_arms) {
        throw std::invalid_argument("dim mismatch: reward vector and arm register differ");
    }
    ComplexMatrix out = rho;
    for (std::size_t i = 1; i <= p.size(); ++i) {
        out = apply_flip_channel(arm_oracle(i, flip, spec), p[i - 1], out);
    }
    return out;
}

ComplexMatrix apply_sequence(const std::vector<KrausSet> &seq, const ComplexMatrix &rho) {
    ComplexMatrix out = rho;
    for (const auto &k : seq) {
        out = apply_kraus(k, out);
    }
    return out;
}

}  // namespace qbandit::oracles
