/* Copyright 2026 The digs Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// Batch reduction kernels: a serial reference and an OpenMP version with
// identical, index-ordered output.

#ifndef DIGS_PARALLEL_HPP
#define DIGS_PARALLEL_HPP

#include <span>
#include <vector>

#include "digs/compositions.hpp"

namespace digs {

    std::vector<DiPolynomial> reduce_all_serial(std::span<const DiPolynomial> polys, const RuleSet& set);

    // threads <= 0 uses the OpenMP default.
    std::vector<DiPolynomial> reduce_all_parallel(std::span<const DiPolynomial> polys, const RuleSet& set,
                                                  int threads = 0);

    std::vector<DiPolynomial> remainders_serial(std::span<const Composition> comps, const RuleSet& set);

    std::vector<DiPolynomial> remainders_parallel(std::span<const Composition> comps, const RuleSet& set,
                                                  int threads = 0);

    // Threads OpenMP would use for `threads` (<= 0 means default).
    int effective_threads(int threads);

}  // namespace digs

#endif  // DIGS_PARALLEL_HPP
