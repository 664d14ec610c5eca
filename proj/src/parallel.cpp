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

#include "digs/parallel.hpp"

#include <omp.h>

#include <exception>

namespace digs {

    int effective_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

    namespace {
        // Applies fn to every index; the first exception (lowest index) is rethrown
        // after the parallel region so nothing escapes an OpenMP construct.
        template <class Fn>
        std::vector<DiPolynomial> parallel_map(std::size_t n, const RuleSet& set, int threads, Fn fn) {
            std::vector<DiPolynomial> out(n, set.zero());
            std::vector<std::exception_ptr> errors(n);
            const int t = effective_threads(threads);
            const auto count = static_cast<long>(n);
#pragma omp parallel for num_threads(t) schedule(dynamic, 1)
            for (long i = 0; i < count; ++i) {
                try {
                    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
            return out;
        }
    }  // namespace

    std::vector<DiPolynomial> reduce_all_serial(std::span<const DiPolynomial> polys, const RuleSet& set) {
        std::vector<DiPolynomial> out;
        out.reserve(polys.size());
        for (const auto& p : polys) out.push_back(reduce(p, set));
        return out;
    }

    std::vector<DiPolynomial> reduce_all_parallel(std::span<const DiPolynomial> polys, const RuleSet& set,
                                                  int threads) {
        return parallel_map(polys.size(), set, threads, [&](std::size_t i) { return reduce(polys[i], set); });
    }

    std::vector<DiPolynomial> remainders_serial(std::span<const Composition> comps, const RuleSet& set) {
        std::vector<DiPolynomial> out;
        out.reserve(comps.size());
        for (const auto& c : comps) out.push_back(composition_remainder(c, set));
        return out;
    }

    std::vector<DiPolynomial> remainders_parallel(std::span<const Composition> comps, const RuleSet& set,
                                                  int threads) {
        return parallel_map(comps.size(), set, threads,
                            [&](std::size_t i) { return composition_remainder(comps[i], set); });
    }

}  // namespace digs
