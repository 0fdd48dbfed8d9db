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

#ifndef QBANDIT_COMMON_PARALLEL_H
#define QBANDIT_COMMON_PARALLEL_H

#include <cstddef>
#include <functional>

namespace qbandit {

/// Worker count: QBANDIT_THREADS if set and positive, else hardware threads.
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) across workers. fn must only write state owned
/// by index i. The first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace qbandit

#endif  // QBANDIT_COMMON_PARALLEL_H
