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


#include "qbandit/simulator/run.h"

#include <cmath>
#include <stdexcept>

#include "qbandit/common/parallel.h"
#include "qbandit/common/tolerances.h"
#include "qbandit/qmat/measures.h"

namespace qbandit::simulator {

namespace {

struct Evolution {
    std::vector<ComplexMatrix> states;
    std::vector<std::size_t> queries;
    std::vector<double> outcome;
};

ComplexMatrix dephase(const ComplexMatrix &rho, const std::vector<ComplexMatrix> &projectors) {
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const ComplexMatrix &p : projectors) {
        out += p * rho * p;
    }
    return out;
}

Evolution evolve(const Circuit &circuit, const OracleModel &oracle, const ComplexMatrix &initial) {
    if (initial.rows() != circuit.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    oracle.check(circuit.spec());
    Evolution ev;
    ev.states.reserve(circuit.size() + 1);
    ev.states.push_back(initial);
    ev.queries.push_back(0);
    ComplexMatrix rho = initial;
    std::size_t calls = 0;
    for (const Step &step : circuit.steps()) {
        switch (step.kind) {
            case StepKind::Unitary:
                rho = qmat::conjugate(step.unitary, rho);
                break;
            case StepKind::OracleCall:
                rho = oracle.apply(calls, rho, circuit.spec());
                ++calls;
                break;
            case StepKind::Measure:
                ev.outcome = measure(rho, step.projectors);
                rho = dephase(rho, step.projectors);
                break;
        }
        if (std::abs(rho.trace() - 1.0) > tolerances().trace_drift) {
            throw std::runtime_error("numerical blowup");
        }
        ev.states.push_back(rho);
        ev.queries.push_back(calls);
    }
    return ev;
}

double fid(const ComplexMatrix &a, const ComplexMatrix &b) {
    const double s = std::min(1.0, qmat::sqrt_fidelity_psd(a, b));
    return s * s;
}

Transcript make_transcript(Evolution ev, const std::vector<double> &fidelity) {
    Transcript t;
    for (std::size_t k = 0; k < ev.states.size(); ++k) {
        TranscriptRecord r;
        r.step = k;
        r.purity = qmat::purity(ev.states[k]);
        r.fidelity = fidelity[k];
        r.queries = ev.queries[k];
        t.records.push_back(r);
    }
    t.states = std::move(ev.states);
    t.outcome = std::move(ev.outcome);
    return t;
}

}  // namespace

std::vector<double> measure(const ComplexMatrix &rho, const std::vector<ComplexMatrix> &projectors) {
    check_projectors(projectors, rho.rows());
    std::vector<double> probs;
    probs.reserve(projectors.size());
    for (const ComplexMatrix &p : projectors) {
        probs.push_back(std::max(0.0, qmat::trace_product(p, rho).real()));
    }
    return probs;
}

std::vector<double> measure(const DensityMatrix &state, const std::vector<ComplexMatrix> &projectors) {
    return measure(state.mat(), projectors);
}

Transcript run_exact(const Circuit &circuit, const OracleModel &oracle, const DensityMatrix &initial,
                     const std::optional<OracleModel> &reference) {
    Evolution ev = evolve(circuit, oracle, initial.mat());
    const OracleModel ref = reference ? *reference : OracleModel::trivial(oracle.n_arms(), oracle.flip());
    Evolution rv = evolve(circuit, ref, initial.mat());
    std::vector<double> f(ev.states.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = fid(ev.states[k], rv.states[k]);
    }
    return make_transcript(std::move(ev), f);
}

PairedRun run_paired(const Circuit &circuit, const OracleModel &oracle_a, const OracleModel &oracle_b,
                     const DensityMatrix &initial) {
    Evolution ea = evolve(circuit, oracle_a, initial.mat());
    Evolution eb = evolve(circuit, oracle_b, initial.mat());
    PairedRun out;
    out.fidelity.resize(ea.states.size());
    for (std::size_t k = 0; k < out.fidelity.size(); ++k) {
        out.fidelity[k] = fid(ea.states[k], eb.states[k]);
    }
    out.a = make_transcript(std::move(ea), out.fidelity);
    out.b = make_transcript(std::move(eb), out.fidelity);
    return out;
}

std::vector<TrajectorySample> run_trajectories(const Circuit &circuit, const OracleModel &oracle,
                                               const PureState &initial, std::size_t n_samples, uint64_t seed) {
    if (initial.dim() != circuit.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    oracle.check(circuit.spec());
    std::vector<TrajectorySample> out(n_samples);
    const Rng root(seed);
    parallel_for(n_samples, [&](std::size_t k) {
        Rng rng = root.split(k);
        TrajectorySample &s = out[k];
        s.seed = rng.seed();
        CVector psi = initial.amplitudes();
        std::size_t calls = 0;
        for (const Step &step : circuit.steps()) {
            switch (step.kind) {
                case StepKind::Unitary:
                    psi = step.unitary * psi;
                    break;
                case StepKind::OracleCall: {
                    std::vector<uint8_t> x;
                    psi = oracle.apply_pure(calls, psi, circuit.spec(), rng, &x);
                    s.history.push_back(std::move(x));
                    ++calls;
                    break;
                }
                case StepKind::Measure: {
                    const double u = rng.uniform();
                    double acc = 0.0;
                    std::size_t pick = step.projectors.size() - 1;
                    for (std::size_t j = 0; j < step.projectors.size(); ++j) {
                        acc += qmat::expectation(step.projectors[j], psi).real();
                        if (u < acc) {
                            pick = j;
                            break;
                        }
                    }
                    CVector post = step.projectors[pick] * psi;
                    const double n = qmat::norm(post);
                    if (n == 0.0) {
                        throw std::runtime_error("numerical blowup");
                    }
                    psi = qmat::scaled(post, 1.0 / n);
                    s.outcome = int(pick);
                    break;
                }
            }
        }
        s.state = std::move(psi);
        s.queries = calls;
    });
    return out;
}

ComplexMatrix empirical_state(const std::vector<TrajectorySample> &samples) {
    if (samples.empty()) {
        throw std::invalid_argument("no samples");
    }
    const std::size_t d = samples.front().state.size();
    ComplexMatrix rho(d, d);
    for (const TrajectorySample &s : samples) {
        for (std::size_t r = 0; r < d; ++r) {
            if (s.state[r] == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                rho(r, c) += s.state[r] * std::conj(s.state[c]);
            }
        }
    }
    rho *= 1.0 / double(samples.size());
    return rho;
}

}  // namespace qbandit::simulator
