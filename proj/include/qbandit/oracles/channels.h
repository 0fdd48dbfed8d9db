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


#ifndef QBANDIT_ORACLES_CHANNELS_H
#define QBANDIT_ORACLES_CHANNELS_H

#include <vector>

#include "qbandit/oracles/oracles.h"
#include "qbandit/oracles/registers.h"
#include "qbandit/oracles/rewards.h"

namespace qbandit::oracles {

using KrausSet = std::vector<ComplexMatrix>;

/// sum_k A_k rho A_k^dagger.
ComplexMatrix apply_kraus(const KrausSet &kraus, const ComplexMatrix &rho);
/// ||sum_k A_k^dagger A_k - Id||_F.
double kraus_completeness_defect(const KrausSet &kraus);

/// F_i^p = {sqrt(1-p) Id, sqrt(p) O_i}. Throws "probability outside [0, 1]".
KrausSet make_channel_f(std::size_t arm, double p, Flip flip, const RegisterSpec &spec);

/// E^p as the sequence F_1^{p_1}, ..., F_N^{p_N} (the factors commute).
std::vector<KrausSet> make_channel_e(const RewardVector &p, Flip flip, const RegisterSpec &spec);

/// E^p as the 2^N-term mixture {sqrt(P(X)) O_X}. Throws "use sequential
/// composition" for N > 12.
KrausSet make_channel_e_mixture(const RewardVector &p, Flip flip, const RegisterSpec &spec);

/// P(X) = prod_i p_i^{x_i} (1 - p_i)^{1 - x_i}, indexed by X with arm 1 as bit 0.
std::vector<double> mixture_weights(const std::vector<double> &p);

/// (1 - p) rho + p O rho O^dagger.
ComplexMatrix apply_flip_channel(const SignedPermutation &op, double p, const ComplexMatrix &rho);

/// E^p(rho) by sequential composition.
ComplexMatrix apply_channel_e(const std::vector<double> &p, Flip flip, const RegisterSpec &spec,
                              const ComplexMatrix &rho);

/// Applies a sequence of Kraus sets, first element first.
ComplexMatrix apply_sequence(const std::vector<KrausSet> &seq, const ComplexMatrix &rho);

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_CHANNELS_H
