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

#ifndef QBANDIT_COMMON_RNG_H
#define QBANDIT_COMMON_RNG_H

#include <complex>
#include <cstdint>
#include <random>

namespace qbandit {

/// One step of the SplitMix64 sequence (Steele, Lea, Flood 2014).
uint64_t splitmix64(uint64_t &state);

/// Seedable, splittable random source.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Its seed is the first SplitMix64 output of the user seed.
/// `split(k)` derives an independent child from (seed, k) without consuming
/// parent draws, so per-instance streams do not depend on scheduling.
/// All conversions to floating point are done here (53-bit mantissa,
/// Box-Muller for normals) instead of through <random> distributions, whose
/// algorithms differ between standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    uint64_t seed() const { return seed_; }
    Rng split(uint64_t stream) const;

    uint64_t next_u64() { return engine_(); }
    double uniform();                    // [0, 1)
    bool bernoulli(double p);            // true with probability p
    uint64_t below(uint64_t n);          // uniform in [0, n)
    double uniform(double lo, double hi);
    double normal();
    std::complex<double> complex_normal();  // E|z|^2 = 1

    std::mt19937_64 &engine() { return engine_; }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qbandit

#endif  // QBANDIT_COMMON_RNG_H
