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


#ifndef QBANDIT_BOUNDS_LEMMAS_H
#define QBANDIT_BOUNDS_LEMMAS_H

#include <cstddef>
#include <vector>

#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/registers.h"
#include "qbandit/oracles/rewards.h"
#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/states.h"

// Every check returns a signed margin (right side minus left side of the
// inequality, or minus a residual for identities). A margin below -tol is a
// violation.
namespace qbandit::bounds {

using oracles::Flip;
using oracles::KrausSet;
using oracles::RegisterSpec;
using oracles::RewardFamily;
using oracles::SignedPermutation;
using qmat::ComplexMatrix;
using qmat::CVector;
using qmat::DensityMatrix;
using qmat::PureState;

/// tr(P_arm rho): weight of the arm block.
double arm_weight(const ComplexMatrix &rho, std::size_t arm, const RegisterSpec &spec);

/// 2 ||P phi|| ||phi|| (tr D^2)^{1/2} - |<phi|D|phi>| with D = O s O^dagger - s.
/// Throws "projector/operator incompatible" unless (Id - P) O = Id - P.
double check_projection_lemma(const ComplexMatrix &o, const ComplexMatrix &p, const CVector &phi,
                              const ComplexMatrix &sigma);

/// sqrt((1-p)(1-q)) + sqrt(pq) - (1 - (p-q)^2 / (4c(1-c))), for p, q in [c, 1-c].
double bound_cos_margin(double p, double q, double c);
/// |p-q| / (2 sqrt(c(1-c))) - |sqrt((1-p)q) - sqrt((1-q)p)|.
double bound_sin_margin(double p, double q, double c);
/// sqrt(1+s+t) - (1 - |s| + t/2 - t^2/2), for s + t >= -1.
double sqrt_lemma_margin(double s, double t);

struct ScalarSample {
    double p = 0.5;
    double q = 0.5;
    double c = 0.25;
    double s = 0.0;
    double t = 0.0;
};

struct ScalarReport {
    double cos_margin = 0.0;
    double sin_margin = 0.0;
    double sqrt_margin = 0.0;
    std::size_t worst_cos = 0;
    std::size_t worst_sin = 0;
    std::size_t worst_sqrt = 0;
};

ScalarReport check_scalar_lemmas(const std::vector<ScalarSample> &samples);

struct FidelityLemmaMargins {
    double statement = 0.0;  // constant 1 / (eta (1 - eta))
    double proof = 0.0;      // constant 1 / (2 eta (1 - eta))
};

/// sqrt F(F_arm^p rho, F_arm^q sigma) against
/// sqrt F(rho, sigma) - K (p-q)^2 sqrt(tr(P rho) tr(P sigma)).
/// Throws "probability outside [eta, 1 - eta]" and "eta outside (0, 1/2]".
FidelityLemmaMargins check_fidelity_lemma(const DensityMatrix &rho, const DensityMatrix &sigma, double p, double q,
                                          std::size_t arm, double eta, Flip flip, const RegisterSpec &spec);

struct Corollary1Margins {
    double margin = 0.0;
    double marginal_defect = 0.0;  // max |tr(P_i F_j rho) - tr(P_i rho)|, i != j
};

/// sqrt F(E^p rho, E^p' sigma) against
/// sqrt F(rho, sigma) - sum_i (p_i - p'_i)^2 / (2 eta (1-eta)) sqrt(tr(P_i rho) tr(P_i sigma)).
Corollary1Margins check_fid_corollary1(const DensityMatrix &rho, const DensityMatrix &sigma,
                                       const std::vector<double> &p, const std::vector<double> &p_prime, double eta,
                                       Flip flip, const RegisterSpec &spec);

/// sqrt F(Phi rho, Phi sigma) - sqrt F(rho, sigma).
double monotonicity_margin(const DensityMatrix &rho, const DensityMatrix &sigma, const KrausSet &channel);

/// sqrt F(sum p_k rho_k, sum q_k sigma_k) - sum sqrt(p_k q_k) sqrt F(rho_k, sigma_k).
double strong_concavity_margin(const std::vector<double> &p, const std::vector<double> &q,
                               const std::vector<DensityMatrix> &rhos, const std::vector<DensityMatrix> &sigmas);

/// -(|sqrt F(U rho U^dagger, U sigma U^dagger) - sqrt F(rho, sigma)| + same for T).
double unitary_invariance_margin(const DensityMatrix &rho, const DensityMatrix &sigma, const ComplexMatrix &u);

struct SandwichMargins {
    double lower = 0.0;  // T - (1 - sqrt F)
    double upper = 0.0;  // sqrt(1 - F) - T
};

SandwichMargins trace_fidelity_margins(const DensityMatrix &rho, const DensityMatrix &sigma);

/// 4 delta (1 - delta) - F with 1 - delta the Helstrom success probability.
double fidelity_delta_margin(const DensityMatrix &rho, const DensityMatrix &sigma);

/// |(R(rho) - R(F^p rho)) - p(1-p) tr(rho - O rho O^dagger)^2|, R the purity.
double change_purity_residual(const ComplexMatrix &rho, double p, const SignedPermutation &o);

struct FidPurStep {
    double fidelity_margin = 0.0;  // 2p ||P psi|| sqrt(X) - (F_{t-1} - F_t)
    // 2 ||P psi|| sqrt(p/(1-p)) sqrt(R_{t-1} - R_t) >= 2p ||P psi|| sqrt(X),
    // compared in squared form: the sides coincide and a square root of a
    // rounding-level purity drop would dominate the margin.
    double purity_margin = 0.0;
};

/// Runs rho_t with U_t followed by F^p (oracle o) against psi_t with U_t only,
/// F_t = <psi_t|rho_t|psi_t>, and checks both steps of the fidelity/purity
/// ledger at every call. Requires p in (0, 1).
std::vector<FidPurStep> fid_pur_relation(const std::vector<ComplexMatrix> &unitaries, const PureState &initial,
                                         const SignedPermutation &o, const ComplexMatrix &projector, double p);

/// sqrt F(rho_T^i, rho_T^0) - (1 - sum_t 4 Delta_i^2 / (eta (1-eta)) sqrt(tr(P_i rho_t^i) tr(P_i rho_t^0)))
/// for the circuit U_1, E, U_2, E, ..., where rho_t is the state before call t.
double fid3_margin(const std::vector<ComplexMatrix> &unitaries, const PureState &initial, const RewardFamily &family,
                   std::size_t arm, Flip flip, const RegisterSpec &spec);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_LEMMAS_H
