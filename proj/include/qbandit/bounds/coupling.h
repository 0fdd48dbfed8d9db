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


#ifndef QBANDIT_BOUNDS_COUPLING_H
#define QBANDIT_BOUNDS_COUPLING_H

#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/states.h"

namespace qbandit::bounds {

using qmat::ComplexMatrix;
using qmat::CVector;
using qmat::DensityMatrix;
using qmat::PureState;

/// Mixing angle and the unnormalized branches of the pure side:
/// bar0 = sqrt(1-q) cos a psi + sqrt(q) sin a U psi,
/// bar1 = sqrt(q) cos a U psi - sqrt(1-q) sin a psi.
struct CouplingVectors {
    double cos_alpha = 1.0;  // sqrt(pq) + sqrt((1-p)(1-q))
    double sin_alpha = 0.0;  // sqrt((1-p)q) - sqrt((1-q)p)
    CVector bar0;
    CVector bar1;
    CVector psi0;
    CVector psi1;
    double q_prime = 0.0;  // ||bar1||^2
};

/// psi1 = U psi with q' = q when sin a = 0; a vanishing branch gets weight 0
/// and the fallback direction psi (bar0) or U psi (bar1).
CouplingVectors coupling_vectors(const CVector &psi, const CVector &u_psi, double p, double q);

struct CouplingDecomposition {
    double p = 0.0;
    double q = 0.0;
    double eta = 0.0;
    CouplingVectors v;
    ComplexMatrix rho0;  // rho
    ComplexMatrix rho1;  // U rho U^dagger
    double s = 0.0;      // sqrt <psi|rho|psi>
    double mixed_residual = 0.0;  // ||(1-p) rho0 + p rho1 - E_U^p(rho)||_tr
    double pure_residual = 0.0;   // ||q' psi1 psi1 + (1-q') psi0 psi0 - E_U^q(psi)||_tr
    double angle_residual = 0.0;  // |cos^2 a + sin^2 a - 1|
    double full = 0.0;            // sqrt F(E_U^p(rho), E_U^q(psi))
    double split = 0.0;           // strong-concavity lower bound on `full`
    double bound = 0.0;           // S minus the two correction terms
    double margin = 0.0;             // split - bound
    double concavity_margin = 0.0;   // full - split
};

/// Throws "operator is not a unitary involution", "probability outside
/// [eta, 1 - eta]" and "overlap vanishes" (S = 0).
CouplingDecomposition build_coupling(const DensityMatrix &rho, const PureState &psi, const ComplexMatrix &u, double p,
                                     double q, double eta);

struct PerturbedCoupling {
    CouplingDecomposition base;
    ComplexMatrix rho0;  // rho + p sigma
    ComplexMatrix rho1;  // U rho U^dagger - (1 - p) sigma
    double mixed_residual = 0.0;  // ||(1-p) rho0 + p rho1 - E_U^p(rho)||_tr
    double extra = 0.0;           // (p |<bar0|sigma|bar0>| + (1-p) |<bar1|sigma|bar1>|) / S
    double split = 0.0;
    double bound = 0.0;
    double margin = 0.0;
};

/// Throws "perturbation too large" when rho0 or rho1 is not PSD and
/// "sigma must be traceless Hermitian".
PerturbedCoupling build_coupling_perturbed(const DensityMatrix &rho, const PureState &psi, const ComplexMatrix &u,
                                           double p, double q, double eta, const ComplexMatrix &sigma);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_COUPLING_H
